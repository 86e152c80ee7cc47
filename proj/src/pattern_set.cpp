#include "hogkit/pattern_set.hpp"

#include <istream>
#include <string>
#include <utility>

#include "hogkit/ac_trie.hpp"

namespace hogkit {

namespace {

std::vector<std::string> load_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::vector<std::string> load_fasta(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  std::string header;
  bool open = false;
  const auto close = [&] {
    if (open && out.back().empty()) throw IoError("FASTA record '" + header + "' has an empty sequence");
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.front() == '>') {
      close();
      header = line.substr(1);
      out.emplace_back();
      open = true;
    } else {
      if (!open) throw IoError("FASTA sequence line before the first header");
      out.back() += line;
    }
  }
  close();
  return out;
}

}  // namespace

std::vector<std::string> load_patterns(std::istream& in, std::optional<InputFormat> format) {
  if (!in) throw IoError("input stream is not readable");
  if (!format) {
    const auto first = in.peek();
    format = first == '>' ? InputFormat::fasta : InputFormat::lines;
  }
  auto out = *format == InputFormat::fasta ? load_fasta(in) : load_lines(in);
  if (in.bad()) throw IoError("read error on input stream");
  return out;
}

std::optional<InputFormat> parse_input_format(std::string_view name) {
  if (name == "lines") return InputFormat::lines;
  if (name == "fasta") return InputFormat::fasta;
  return std::nullopt;
}

std::optional<ValidationPolicy> parse_validation_policy(std::string_view name) {
  if (name == "strict") return ValidationPolicy::strict;
  if (name == "drop-contained" || name == "drop_contained") return ValidationPolicy::drop_contained;
  return std::nullopt;
}

PatternSet::PatternSet(std::vector<std::string> patterns) {
  auto data = std::make_shared<Data>();
  for (const auto& p : patterns) data->total_length += p.size();
  data->patterns = std::move(patterns);
  data_ = std::move(data);
}

ValidatedPatterns validate(std::vector<std::string> raw, ValidationPolicy policy) {
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].empty()) {
      throw ValidationError(ValidationError::Kind::EmptyPattern, "pattern " + std::to_string(i) + " is empty");
    }
  }
  if (raw.empty()) throw ValidationError(ValidationError::Kind::EmptySet, "pattern set is empty");

  // A pattern t is inside another pattern iff its trie node has a child
  // (t is a proper prefix of something) or is the suffix-link target of some
  // node (t is a proper suffix of a prefix of something).
  const auto core = detail::build_trie_core(raw);
  std::vector<std::uint8_t> link_target(core.size(), 0);
  for (std::size_t v = 1; v < core.size(); ++v) link_target[core.suffix_link[v]] = 1;

  ValidatedPatterns result;
  std::vector<std::string> kept;
  kept.reserve(raw.size());
  for (PatternIndex i = 0; i < raw.size(); ++i) {
    const NodeId node = core.end_node[i];
    const bool duplicate = core.terminal[node] != i;
    const bool contained = core.has_children(node) || link_target[node];
    if (!duplicate && !contained) {
      kept.push_back(std::move(raw[i]));
      continue;
    }
    if (policy == ValidationPolicy::strict) {
      if (duplicate) {
        throw ValidationError(ValidationError::Kind::DuplicatePattern,
                              "pattern " + std::to_string(i) + " duplicates pattern " +
                                  std::to_string(core.terminal[node]) + ": '" + raw[i] + "'");
      }
      throw ValidationError(ValidationError::Kind::ContainedPattern,
                            "pattern " + std::to_string(i) + " occurs inside another pattern: '" + raw[i] + "'");
    }
    result.dropped.push_back(
        {i, std::move(raw[i]), duplicate ? DroppedPattern::Reason::duplicate : DroppedPattern::Reason::contained});
  }
  if (kept.empty()) throw ValidationError(ValidationError::Kind::EmptySet, "no patterns survive validation");
  result.set = PatternSet(std::move(kept));
  return result;
}

}  // namespace hogkit
