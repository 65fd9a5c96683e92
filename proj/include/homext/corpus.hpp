#pragma once

#include <vector>

#include "homext/engine.hpp"
#include "homext/execution.hpp"
#include "homext/graph.hpp"

namespace homext {

/// classify_finite over every graph; results keep the input order.
std::vector<MembershipVector> classify_corpus(const std::vector<Graph>& graphs,
                                              Execution exec = Execution::Parallel);

}  // namespace homext
