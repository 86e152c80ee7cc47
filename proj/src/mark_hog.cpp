#include "hogkit/mark_hog.hpp"

#include <algorithm>

namespace hogkit {

namespace {

std::vector<std::uint8_t> initial_flags(const LinkedTree& tree) {
  std::vector<std::uint8_t> in_hog(tree.size(), 0);
  in_hog[kRoot] = 1;
  for (PatternIndex x = 0; x < tree.leaf_count(); ++x) in_hog[tree.leaf(x)] = 1;
  return in_hog;
}

MarkState initial_state(const LinkedTree& tree) {
  MarkState state;
  state.in_hog = initial_flags(tree);
  state.stacks.resize(tree.leaf_count());
  state.in_pending.assign(tree.leaf_count(), 0);
  return state;
}

void pop_checked(std::vector<NodeId>& stack, NodeId v) {
  if (stack.empty() || stack.back() != v) throw InvariantError("stack pop mismatch at node " + std::to_string(v));
  stack.pop_back();
}

}  // namespace

std::string_view to_string(MarkAlgorithm algorithm) {
  switch (algorithm) {
    case MarkAlgorithm::per_leaf:
      return "per-leaf";
    case MarkAlgorithm::quadratic:
      return "quadratic";
    case MarkAlgorithm::optimal:
      return "optimal";
  }
  return "unknown";
}

std::optional<MarkAlgorithm> parse_mark_algorithm(std::string_view name) {
  if (name == "per-leaf" || name == "per_leaf") return MarkAlgorithm::per_leaf;
  if (name == "quadratic") return MarkAlgorithm::quadratic;
  if (name == "optimal") return MarkAlgorithm::optimal;
  return std::nullopt;
}

std::vector<NodeId> MarkResult::marked_internal(const LinkedTree& tree) const {
  std::vector<NodeId> out;
  for (NodeId v = 1; v < tree.size(); ++v) {
    if (in_hog[v] && !tree.is_leaf(v)) out.push_back(v);
  }
  return out;
}

std::vector<NodeId> mark_single_leaf(const LinkedTree& tree, const LeafLists& lists, NodeId leaf) {
  std::vector<NodeId> path;
  for (NodeId y = tree.parent(leaf); y != kRoot; y = tree.parent(y)) path.push_back(y);

  // deepest[x]: last node on the root-to-leaf path with x in its list.
  std::vector<NodeId> deepest(tree.leaf_count(), kNoNode);
  std::vector<PatternIndex> touched;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    for (const PatternIndex x : lists.of(*it)) {
      if (deepest[x] == kNoNode) touched.push_back(x);
      deepest[x] = *it;
    }
  }
  std::vector<NodeId> out;
  out.reserve(touched.size());
  for (const PatternIndex x : touched) out.push_back(deepest[x]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MarkResult mark_all_per_leaf(const LinkedTree& tree, const LeafLists& lists) {
  MarkResult result;
  result.algorithm = MarkAlgorithm::per_leaf;
  result.in_hog = initial_flags(tree);
  for (PatternIndex v = 0; v < tree.leaf_count(); ++v) {
    const NodeId leaf = tree.leaf(v);
    for (NodeId y = tree.parent(leaf); y != kRoot; y = tree.parent(y)) {
      result.op_counter += 1 + lists.of(y).size();
    }
    for (const NodeId y : mark_single_leaf(tree, lists, leaf)) {
      result.in_hog[y] = 1;
      ++result.mark_count;
      ++result.op_counter;
    }
  }
  return result;
}

MarkResult mark_all_quadratic(const LinkedTree& tree, const LeafLists& lists, std::span<const EulerEvent> events,
                              const MarkObserver& observer) {
  auto state = initial_state(tree);
  MarkResult result;
  result.algorithm = MarkAlgorithm::quadratic;
  std::size_t stack_entries = 0;

  for (const auto& event : events) {
    if (observer) observer(event, state);
    ++result.op_counter;
    const NodeId v = event.node;
    switch (event.kind) {
      case EulerEvent::Kind::FirstVisit:
        for (const PatternIndex x : lists.of(v)) {
          state.stacks[x].push_back(v);
          ++result.op_counter;
        }
        stack_entries += lists.of(v).size();
        result.peak_stack_entries = std::max(result.peak_stack_entries, stack_entries);
        break;
      case EulerEvent::Kind::LastVisit:
        for (const PatternIndex x : lists.of(v)) {
          pop_checked(state.stacks[x], v);
          ++result.op_counter;
        }
        stack_entries -= lists.of(v).size();
        break;
      case EulerEvent::Kind::LeafVisit:
        for (auto& stack : state.stacks) {
          ++result.op_counter;
          if (!stack.empty()) {
            state.in_hog[stack.back()] = 1;
            ++result.mark_count;
            ++result.op_counter;
          }
        }
        break;
    }
  }
  result.in_hog = std::move(state.in_hog);
  return result;
}

MarkResult mark_all_optimal(const LinkedTree& tree, const LeafLists& lists, std::span<const EulerEvent> events,
                            const MarkObserver& observer) {
  auto state = initial_state(tree);
  MarkResult result;
  result.algorithm = MarkAlgorithm::optimal;
  std::size_t stack_entries = 0;

  const auto add_pending = [&](PatternIndex x) {
    state.in_pending[x] = 1;
    state.pending.push_back(x);
    ++result.op_counter;
  };

  for (const auto& event : events) {
    if (observer) observer(event, state);
    ++result.op_counter;
    const NodeId v = event.node;
    switch (event.kind) {
      case EulerEvent::Kind::FirstVisit:
        for (const PatternIndex x : lists.of(v)) {
          state.stacks[x].push_back(v);
          ++result.op_counter;
          if (!state.in_pending[x]) add_pending(x);
        }
        stack_entries += lists.of(v).size();
        result.peak_stack_entries = std::max(result.peak_stack_entries, stack_entries);
        break;
      case EulerEvent::Kind::LastVisit:
        for (const PatternIndex x : lists.of(v)) {
          auto& stack = state.stacks[x];
          pop_checked(stack, v);
          ++result.op_counter;
          if (!stack.empty() && !state.in_hog[stack.back()] && !state.in_pending[x]) add_pending(x);
        }
        stack_entries -= lists.of(v).size();
        break;
      case EulerEvent::Kind::LeafVisit:
        for (const PatternIndex x : state.pending) {
          // A pending stack can be emptied by pops before the next leaf.
          if (const auto& stack = state.stacks[x]; !stack.empty()) {
            state.in_hog[stack.back()] = 1;
            ++result.mark_count;
            ++result.op_counter;
          }
          state.in_pending[x] = 0;
          ++result.op_counter;
        }
        state.pending.clear();
        break;
    }
  }
  result.in_hog = std::move(state.in_hog);
  return result;
}

MarkResult mark_hog(const LinkedTree& tree, const LeafLists& lists, std::span<const EulerEvent> events,
                    MarkAlgorithm algorithm) {
  switch (algorithm) {
    case MarkAlgorithm::per_leaf:
      return mark_all_per_leaf(tree, lists);
    case MarkAlgorithm::quadratic:
      return mark_all_quadratic(tree, lists, events);
    case MarkAlgorithm::optimal:
      break;
  }
  return mark_all_optimal(tree, lists, events);
}

}  // namespace hogkit
