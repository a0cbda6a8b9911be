#include <vector>

#include "replete/kernels.hpp"
#include "search.hpp"

namespace replete::kernels::serial {

std::vector<Table> solve(const MapProblem& problem) {
  detail::Search search(problem);
  std::vector<Table> out;
  search.complete(search.root(), out);
  return out;
}

std::vector<std::uint8_t> pointwise_order(const std::vector<Table>& maps, const Poset& cod) {
  const std::size_t n = maps.size();
  std::vector<std::uint8_t> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = pointwise_leq(cod, maps[i], maps[j]) ? 1 : 0;
  return out;
}

std::optional<std::vector<Index>> first_failure(std::size_t vars, std::size_t values,
                                                const std::function<bool(std::span<const Index>)>& holds) {
  std::vector<Index> a(vars, 0);
  if (values == 0 && vars > 0) return std::nullopt;
  while (true) {
    if (!holds(a)) return a;
    // odometer, last variable fastest
    std::size_t k = vars;
    while (k > 0) {
      --k;
      if (++a[k] < values) break;
      a[k] = 0;
      if (k == 0) return std::nullopt;
    }
    if (vars == 0) return std::nullopt;
  }
}

}  // namespace replete::kernels::serial
