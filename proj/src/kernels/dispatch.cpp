#include "replete/kernels.hpp"

namespace replete::kernels {

bool parallel_enabled() {
#ifdef REPLETE_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

MapProblem monotone_problem(const Poset& dom, const Poset& cod) {
  MapProblem problem;
  problem.dom_size = dom.size();
  problem.cod_size = cod.size();
  problem.cod_leq = cod.matrix();
  for (Index a = 0; a < dom.size(); ++a)
    for (Index b = 0; b < dom.size(); ++b)
      if (dom.less(a, b)) problem.order.emplace_back(a, b);
  return problem;
}

std::vector<Table> solve(const MapProblem& problem) {
  return parallel_enabled() ? omp::solve(problem) : serial::solve(problem);
}

std::vector<std::uint8_t> pointwise_order(const std::vector<Table>& maps, const Poset& cod) {
  return parallel_enabled() ? omp::pointwise_order(maps, cod) : serial::pointwise_order(maps, cod);
}

std::optional<std::vector<Index>> first_failure(std::size_t vars, std::size_t values,
                                                const std::function<bool(std::span<const Index>)>& holds) {
  return parallel_enabled() ? omp::first_failure(vars, values, holds) : serial::first_failure(vars, values, holds);
}

}  // namespace replete::kernels
