#include "homext/corpus.hpp"

namespace homext {

std::vector<MembershipVector> classify_corpus(const std::vector<Graph>& graphs, Execution exec) {
  std::vector<MembershipVector> out(graphs.size());
  const auto count = static_cast<long>(graphs.size());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::Parallel)
  for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = classify_finite(graphs[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace homext
