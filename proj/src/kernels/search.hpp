#pragma once

// Backtracking engine shared by the serial and OpenMP kernels. Variables are
// assigned from the highest index down with ascending values, which emits
// solutions in canonical table order.

#include <vector>

#include "replete/kernels.hpp"

namespace replete::kernels::detail {

struct Partial {
  std::size_t step = 0;
  Table values;
};

class Search {
 public:
  explicit Search(const MapProblem& problem);

  std::size_t steps() const { return n_; }
  Partial root() const;

  /// Appends the consistent one-step extensions of `p`, in value order.
  void expand(const Partial& p, std::vector<Partial>& out) const;
  /// Appends every complete solution below `p`.
  void complete(Partial p, std::vector<Table>& out) const;

 private:
  Index var_at(std::size_t step) const { return static_cast<Index>(n_ - 1 - step); }
  bool consistent(std::size_t step, const Table& values) const;
  void dfs(std::size_t step, Table& values, std::vector<Table>& out) const;

  const MapProblem& problem_;
  std::size_t n_;
  std::vector<std::vector<Index>> domains_;
  std::vector<std::vector<std::pair<Index, Index>>> order_at_;
  std::vector<std::vector<const Equation*>> equations_at_;
};

}  // namespace replete::kernels::detail
