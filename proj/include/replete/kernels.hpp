#pragma once

// Exhaustive-search kernels. Every kernel has a serial reference version and an
// OpenMP version that splits the search tree into independent subtrees; both
// produce identical, deterministically ordered results.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "replete/poset.hpp"

namespace replete::kernels {

/// h(result) == op(h(args[0]), ..., h(args[k-1])) for an operation of the codomain.
struct Equation {
  std::size_t op = 0;
  std::vector<Index> args;
  Index result = 0;
};

/// Constraint problem whose solutions are tables dom -> cod.
struct MapProblem {
  std::size_t dom_size = 0;
  std::size_t cod_size = 0;
  /// Row-major cod_size x cod_size order of the codomain.
  std::vector<std::uint8_t> cod_leq;
  /// Pairs (a, b) of domain elements with the requirement h(a) <= h(b).
  std::vector<std::pair<Index, Index>> order;
  /// Per domain element, the admissible values ascending; empty means all.
  std::vector<std::vector<Index>> allowed;
  std::vector<Equation> equations;
  /// Codomain operation tables, argument tuples in big-endian mixed radix.
  std::vector<Table> cod_ops;
  std::vector<unsigned> cod_arity;
};

/// Monotone-map problem with no equations.
MapProblem monotone_problem(const Poset& dom, const Poset& cod);

namespace serial {
std::vector<Table> solve(const MapProblem& problem);
std::vector<std::uint8_t> pointwise_order(const std::vector<Table>& maps, const Poset& cod);
std::optional<std::vector<Index>> first_failure(std::size_t vars, std::size_t values,
                                                const std::function<bool(std::span<const Index>)>& holds);
}  // namespace serial

namespace omp {
std::vector<Table> solve(const MapProblem& problem);
std::vector<std::uint8_t> pointwise_order(const std::vector<Table>& maps, const Poset& cod);
std::optional<std::vector<Index>> first_failure(std::size_t vars, std::size_t values,
                                                const std::function<bool(std::span<const Index>)>& holds);
}  // namespace omp

/// Solutions in canonical table order (see canonical_less).
std::vector<Table> solve(const MapProblem& problem);
/// Row-major n x n matrix, entry (i, j) set iff maps[i] <= maps[j] pointwise.
std::vector<std::uint8_t> pointwise_order(const std::vector<Table>& maps, const Poset& cod);
/// Lexicographically least assignment in values^vars on which `holds` is false.
std::optional<std::vector<Index>> first_failure(std::size_t vars, std::size_t values,
                                                const std::function<bool(std::span<const Index>)>& holds);

bool parallel_enabled();

}  // namespace replete::kernels
