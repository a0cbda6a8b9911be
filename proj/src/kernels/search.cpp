#include "search.hpp"

#include <algorithm>
#include <numeric>

namespace replete::kernels::detail {

Search::Search(const MapProblem& problem)
    : problem_(problem), n_(problem.dom_size), order_at_(problem.dom_size), equations_at_(problem.dom_size) {
  domains_.resize(n_);
  for (std::size_t v = 0; v < n_; ++v) {
    if (v < problem.allowed.size() && !problem.allowed[v].empty()) {
      domains_[v] = problem.allowed[v];
    } else {
      domains_[v].resize(problem.cod_size);
      std::iota(domains_[v].begin(), domains_[v].end(), Index{0});
    }
  }
  // A constraint is checked at the step where its lowest-indexed variable is
  // assigned, since variables are assigned in decreasing index order.
  auto step_of = [this](Index v) { return n_ - 1 - v; };
  for (auto [a, b] : problem.order) order_at_[step_of(std::min(a, b))].emplace_back(a, b);
  for (const Equation& eq : problem.equations) {
    Index lowest = eq.result;
    for (Index a : eq.args) lowest = std::min(lowest, a);
    equations_at_[step_of(lowest)].push_back(&eq);
  }
}

Partial Search::root() const { return Partial{0, Table(n_, 0)}; }

bool Search::consistent(std::size_t step, const Table& values) const {
  const std::size_t c = problem_.cod_size;
  for (auto [a, b] : order_at_[step]) {
    if (!problem_.cod_leq[values[a] * c + values[b]]) return false;
  }
  for (const Equation* eq : equations_at_[step]) {
    std::size_t idx = 0;
    for (Index a : eq->args) idx = idx * c + values[a];
    if (problem_.cod_ops[eq->op][idx] != values[eq->result]) return false;
  }
  return true;
}

void Search::expand(const Partial& p, std::vector<Partial>& out) const {
  const Index v = var_at(p.step);
  for (Index value : domains_[v]) {
    Partial next{p.step + 1, p.values};
    next.values[v] = value;
    if (consistent(p.step, next.values)) out.push_back(std::move(next));
  }
}

void Search::dfs(std::size_t step, Table& values, std::vector<Table>& out) const {
  if (step == n_) {
    out.push_back(values);
    return;
  }
  const Index v = var_at(step);
  for (Index value : domains_[v]) {
    values[v] = value;
    if (consistent(step, values)) dfs(step + 1, values, out);
  }
  values[v] = 0;
}

void Search::complete(Partial p, std::vector<Table>& out) const { dfs(p.step, p.values, out); }

}  // namespace replete::kernels::detail
