#pragma once

#include "hogkit/oracle.hpp"
#include "hogkit/pattern_set.hpp"

namespace hogkit {

/// Builds the trie, the EHOG and the HOG with every marking algorithm and
/// both routes, checks each graph against the oracle, and checks that the
/// algorithms and routes agree. Check names are prefixed by the graph.
oracle::VerifyReport verify_pipeline(const PatternSet& patterns);

}  // namespace hogkit
