#include <vector>

#ifdef REPLETE_HAVE_OPENMP
#include <omp.h>
#endif

#include "replete/kernels.hpp"
#include "search.hpp"

namespace replete::kernels::omp {

namespace {

int thread_count() {
#ifdef REPLETE_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace

std::vector<Table> solve(const MapProblem& problem) {
  detail::Search search(problem);
  // Breadth-first split of the search tree until there is enough independent
  // work; BFS keeps prefixes in canonical order.
  const std::size_t target = static_cast<std::size_t>(thread_count()) * 8;
  std::vector<detail::Partial> frontier{search.root()};
  while (!frontier.empty() && frontier.size() < target && frontier.front().step < search.steps()) {
    std::vector<detail::Partial> next;
    for (const auto& p : frontier) search.expand(p, next);
    frontier = std::move(next);
  }

  std::vector<std::vector<Table>> parts(frontier.size());
  const auto count = static_cast<std::ptrdiff_t>(frontier.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) search.complete(frontier[i], parts[i]);

  std::vector<Table> out;
  for (auto& part : parts)
    for (auto& t : part) out.push_back(std::move(t));
  return out;
}

std::vector<std::uint8_t> pointwise_order(const std::vector<Table>& maps, const Poset& cod) {
  const std::size_t n = maps.size();
  std::vector<std::uint8_t> out(n * n);
  const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = pointwise_leq(cod, maps[i], maps[j]) ? 1 : 0;
  return out;
}

std::optional<std::vector<Index>> first_failure(std::size_t vars, std::size_t values,
                                                const std::function<bool(std::span<const Index>)>& holds) {
  if (vars == 0 || values == 0) return serial::first_failure(vars, values, holds);
  // One block per value of the leading variable; the lowest failing block wins.
  std::vector<std::optional<std::vector<Index>>> found(values);
  const auto blocks = static_cast<std::ptrdiff_t>(values);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t b = 0; b < blocks; ++b) {
    const auto lead = static_cast<Index>(b);
    found[b] = serial::first_failure(vars - 1, values, [&](std::span<const Index> rest) {
      std::vector<Index> full;
      full.reserve(vars);
      full.push_back(lead);
      full.insert(full.end(), rest.begin(), rest.end());
      return holds(full);
    });
    if (found[b]) found[b]->insert(found[b]->begin(), lead);
  }
  for (auto& f : found)
    if (f) return f;
  return std::nullopt;
}

}  // namespace replete::kernels::omp
