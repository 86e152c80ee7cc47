#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "hogkit/bench.hpp"
#include "hogkit/generate.hpp"
#include "hogkit/graph_build.hpp"
#include "hogkit/oracle.hpp"
#include "hogkit/serialize.hpp"
#include "hogkit/verify.hpp"

namespace hogkit::cli {

namespace {

struct InputOptions {
  std::string path = "-";
  std::string format = "auto";
  std::string policy = "strict";
};

void add_input_options(CLI::App& cmd, InputOptions& opts) {
  cmd.add_option("--input", opts.path, "Pattern file, '-' for stdin")->capture_default_str();
  cmd.add_option("--format", opts.format, "Input format")
      ->check(CLI::IsMember({"auto", "lines", "fasta"}))
      ->capture_default_str();
  cmd.add_option("--policy", opts.policy, "What to do with duplicate or contained patterns")
      ->check(CLI::IsMember({"strict", "drop-contained"}))
      ->capture_default_str();
}

PatternSet read_patterns(const InputOptions& opts, std::istream& in, std::ostream& err) {
  const auto format = parse_input_format(opts.format);
  std::vector<std::string> raw;
  if (opts.path == "-") {
    raw = load_patterns(in, format);
  } else {
    std::ifstream file(opts.path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + opts.path + "'");
    raw = load_patterns(file, format);
  }
  auto validated = validate(std::move(raw), *parse_validation_policy(opts.policy));
  for (const auto& d : validated.dropped) {
    err << "dropped pattern " << d.input_index << " ("
        << (d.reason == DroppedPattern::Reason::duplicate ? "duplicate" : "contained") << "): " << d.pattern << '\n';
  }
  return std::move(validated.set);
}

struct BuildOptions {
  InputOptions input;
  std::string graph = "hog";
  std::string algo = "optimal";
  bool via_ehog = false;
  std::string output = "json";
};

int cmd_build(const BuildOptions& opts, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto patterns = read_patterns(opts.input, in, err);
  const auto trie = build_trie(patterns);
  const auto kind = *parse_graph_kind(opts.graph);

  OverlapGraph graph;
  std::optional<HogBuild> hog;
  switch (kind) {
    case GraphKind::trie:
      graph = trie_graph(trie);
      break;
    case GraphKind::ehog:
      graph = build_ehog(trie);
      break;
    case GraphKind::hog:
      hog = build_hog(trie, {*parse_mark_algorithm(opts.algo), opts.via_ehog});
      graph = hog->graph;
      break;
  }

  if (opts.output == "json") {
    out << to_json(graph);
  } else if (opts.output == "dot") {
    out << to_dot(graph);
  } else {
    out << "patterns " << patterns.size() << '\n' << "total_length " << patterns.total_length() << '\n';
    out << "trie_nodes " << trie.size() << '\n';
    out << to_stats(graph);
    if (hog) {
      out << "algorithm " << to_string(hog->marks.algorithm) << '\n';
      out << "base_nodes " << hog->base_nodes << '\n';
      out << "list_entries " << hog->list_entries << '\n';
      out << "op_counter " << hog->marks.op_counter << '\n';
      out << "peak_stack_entries " << hog->marks.peak_stack_entries << '\n';
    }
  }
  return kOk;
}

struct VerifyOptions {
  InputOptions input;
  std::vector<std::string> random;
  std::string report = "text";
};

struct RandomSpec {
  std::size_t n = 8;
  std::size_t len = 12;
  unsigned sigma = 2;
  std::uint64_t seed = 42;
  std::size_t reps = 100;
};

RandomSpec parse_random_spec(const std::vector<std::string>& tokens) {
  RandomSpec spec;
  for (const auto& token : tokens) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--random expects key=value, got '" + token + "'");
    const auto key = token.substr(0, eq);
    const auto value = std::stoull(token.substr(eq + 1));
    if (key == "n") {
      spec.n = value;
    } else if (key == "len") {
      spec.len = value;
    } else if (key == "sigma") {
      spec.sigma = static_cast<unsigned>(value);
    } else if (key == "seed") {
      spec.seed = value;
    } else if (key == "reps") {
      spec.reps = value;
    } else {
      throw std::invalid_argument("unknown --random key '" + key + "'");
    }
  }
  if (spec.n == 0 || spec.len == 0 || spec.sigma == 0 || spec.sigma > 256) {
    throw std::invalid_argument("--random needs n, len >= 1 and sigma in 1..256");
  }
  return spec;
}

int cmd_verify(const VerifyOptions& opts, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto guard = oracle::size_guard_from_env();

  if (opts.random.empty()) {
    const auto patterns = read_patterns(opts.input, in, err);
    oracle::enforce_size_guard(patterns, guard);
    const auto report = verify_pipeline(patterns);
    out << (opts.report == "json" ? report.to_json() : report.to_text());
    return report.passed() ? kOk : kVerifyFailed;
  }

  const auto spec = parse_random_spec(opts.random);
  std::mt19937_64 rng(spec.seed);
  std::size_t failed = 0;
  for (std::size_t rep = 0; rep < spec.reps; ++rep) {
    auto raw = generate::random_instance(spec.n, spec.len, spec.sigma, rng);
    const auto patterns = validate(std::move(raw), ValidationPolicy::drop_contained).set;
    oracle::enforce_size_guard(patterns, guard);
    const auto report = verify_pipeline(patterns);
    if (report.passed()) continue;
    ++failed;
    out << "instance " << rep << ':';
    for (const auto& p : patterns) out << ' ' << p;
    out << '\n' << report.to_text();
  }
  out << spec.reps << " random instances, "
      << (failed == 0 ? std::string("all checks pass") : std::to_string(failed) + " failing") << '\n';
  return failed == 0 ? kOk : kVerifyFailed;
}

struct BenchOptions {
  std::string sizes = "1000:100,2000:100,4000:100,8000:100";
  std::uint64_t seed = 1;
  std::string algos = "optimal";
  std::string family = "random";
  unsigned sigma = 4;
  std::string csv;
};

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  bench::BenchConfig config;
  config.sizes = bench::parse_sizes(opts.sizes);
  config.seed = opts.seed;
  config.family = *bench::parse_family(opts.family);
  config.sigma = opts.sigma;
  config.algorithms.clear();
  std::stringstream list(opts.algos);
  std::string name;
  while (std::getline(list, name, ',')) {
    const auto algorithm = parse_mark_algorithm(name);
    if (!algorithm) throw std::invalid_argument("unknown algorithm '" + name + "'");
    config.algorithms.push_back(*algorithm);
  }

  const auto records = bench::run_bench(config);
  if (opts.csv.empty() || opts.csv == "-") {
    bench::write_csv(out, records);
  } else {
    std::ofstream file(opts.csv);
    if (!file) throw IoError("cannot write '" + opts.csv + "'");
    bench::write_csv(file, records);
    if (!file) throw IoError("write failed on '" + opts.csv + "'");
  }
  for (const auto algorithm : config.algorithms) {
    const double slope = bench::loglog_slope(records, algorithm);
    err << "slope " << to_string(algorithm) << ' ';
    if (std::isnan(slope)) {
      err << "n/a\n";
    } else {
      err << std::fixed << std::setprecision(3) << slope << '\n';
    }
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hierarchical overlap graph construction"};
  app.name("hogkit");
  app.require_subcommand(1);

  BuildOptions build;
  auto* build_cmd = app.add_subcommand("build", "Build and print a trie, EHOG or HOG");
  add_input_options(*build_cmd, build.input);
  build_cmd->add_option("--graph", build.graph, "Graph to build")
      ->check(CLI::IsMember({"hog", "ehog", "trie"}))
      ->capture_default_str();
  build_cmd->add_option("--algo", build.algo, "Marking algorithm")
      ->check(CLI::IsMember({"optimal", "quadratic", "per-leaf"}))
      ->capture_default_str();
  build_cmd->add_flag("--via-ehog", build.via_ehog, "Build the HOG through the EHOG");
  build_cmd->add_option("--output", build.output, "Output format")
      ->check(CLI::IsMember({"json", "dot", "stats"}))
      ->capture_default_str();

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check all graphs and algorithms against the brute-force oracle");
  add_input_options(*verify_cmd, verify.input);
  verify_cmd->add_option("--random", verify.random, "Random corpus instead of input: n=8 len=12 sigma=2 seed=42 reps=100")
      ->expected(1, -1);
  verify_cmd->add_option("--report", verify.report, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  BenchOptions bench_opts;
  auto* bench_cmd = app.add_subcommand("bench", "Time and count marking operations over synthetic inputs");
  bench_cmd->add_option("--sizes", bench_opts.sizes, "Comma-separated n:len pairs")->capture_default_str();
  bench_cmd->add_option("--seed", bench_opts.seed, "Generator seed")->capture_default_str();
  bench_cmd->add_option("--algos", bench_opts.algos, "Comma-separated algorithms")->capture_default_str();
  bench_cmd->add_option("--family", bench_opts.family, "Input family")
      ->check(CLI::IsMember({"random", "dense"}))
      ->capture_default_str();
  bench_cmd->add_option("--sigma", bench_opts.sigma, "Alphabet size for random reads")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  bench_cmd->add_option("--csv", bench_opts.csv, "CSV output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (build_cmd->parsed()) return cmd_build(build, in, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify, in, out, err);
    return cmd_bench(bench_opts, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidationError;
  } catch (const oracle::SizeGuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kValidationError;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariantError;
  }
}

}  // namespace hogkit::cli
