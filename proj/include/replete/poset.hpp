#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "replete/error.hpp"

namespace replete {

using Index = std::uint32_t;
/// A function on canonical indices: `table[i]` is the image of element `i`.
using Table = std::vector<Index>;

/// Carriers that are manipulated through ElemSet bit masks.
inline constexpr std::size_t kMaxSetCarrier = 64;
/// Largest open-set lattice the workbench will touch.
inline constexpr std::size_t kMaxOpenSets = std::size_t{1} << 14;
/// Largest carrier materialized as a function poset or hom-set.
inline constexpr std::size_t kMaxMaterialized = 4096;

/// Subset of a carrier of at most 64 elements, stored as a bit mask.
class ElemSet {
 public:
  constexpr ElemSet() = default;
  constexpr explicit ElemSet(std::uint64_t bits) : bits_(bits) {}

  static ElemSet of(std::initializer_list<Index> members);
  static ElemSet full(std::size_t n);
  static constexpr ElemSet singleton(Index i) { return ElemSet(std::uint64_t{1} << i); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Index i) const { return (bits_ >> i) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool subset_of(ElemSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElemSet other) const { return (bits_ & other.bits_) != 0; }

  std::vector<Index> members() const;

  friend constexpr ElemSet operator|(ElemSet a, ElemSet b) { return ElemSet(a.bits_ | b.bits_); }
  friend constexpr ElemSet operator&(ElemSet a, ElemSet b) { return ElemSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr ElemSet operator-(ElemSet a, ElemSet b) { return ElemSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ElemSet, ElemSet) = default;
  friend constexpr auto operator<=>(ElemSet a, ElemSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// "{0,2,3}"
std::string to_string(ElemSet s);

struct FunctionPoset;

/// Finite nonempty partial order on the indices 0..n-1.
///
/// Immutable; copies share the underlying relation.
class Poset {
 public:
  /// Validates a full relation matrix; `leq[i][j]` means i <= j.
  static Poset from_relation(const std::vector<std::vector<bool>>& leq);
  /// Takes the reflexive-transitive closure of the generating pairs, then validates.
  static Poset from_generators(std::size_t n, const std::vector<std::pair<Index, Index>>& less);

  /// No validation; for relations that are partial orders by construction
  /// (inclusion orders, pointwise orders).
  static Poset trusted(std::size_t n, std::vector<std::uint8_t> leq) { return build(n, std::move(leq)); }

  static Poset chain(std::size_t n);
  static Poset antichain(std::size_t n);

  std::size_t size() const { return rep_->n; }
  bool leq(Index a, Index b) const { return rep_->leq[a * rep_->n + b] != 0; }
  bool less(Index a, Index b) const { return a != b && leq(a, b); }
  bool comparable(Index a, Index b) const { return leq(a, b) || leq(b, a); }

  /// Principal up-set / down-set. Throws CarrierTooLarge beyond 64 elements.
  ElemSet up(Index i) const;
  ElemSet down(Index i) const;

  std::optional<Index> bottom() const;
  std::optional<Index> top() const;

  /// Hasse diagram edges (a, b) with a covered by b, sorted.
  std::vector<std::pair<Index, Index>> covers() const;

  /// Row-major n*n relation matrix.
  const std::vector<std::uint8_t>& matrix() const { return rep_->leq; }

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.rep_ == b.rep_ || (a.size() == b.size() && a.rep_->leq == b.rep_->leq);
  }

 private:
  struct Rep {
    std::size_t n = 0;
    std::vector<std::uint8_t> leq;
    std::vector<ElemSet> up;
    std::vector<ElemSet> down;
  };
  explicit Poset(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  // No validation: callers construct relations that are orders by construction.
  static Poset build(std::size_t n, std::vector<std::uint8_t> leq);

  friend Poset product(const Poset& p, const Poset& q);
  friend Poset induced(const Poset& p, const std::vector<Index>& members);
  friend FunctionPoset function_poset_of(const Poset& dom, const Poset& cod, std::vector<Table> maps);

  std::shared_ptr<const Rep> rep_;
};

/// Same relation as `validate_poset` in the workbench vocabulary.
inline Poset validate_poset(const std::vector<std::vector<bool>>& leq) {
  return Poset::from_relation(leq);
}

/// Componentwise order; the pair (a, b) has index a * |q| + b.
Poset product(const Poset& p, const Poset& q);

/// Order on a subset of the carrier, re-indexed in the order of `members`.
Poset induced(const Poset& p, const std::vector<Index>& members);

void require_set_carrier(const Poset& p);

ElemSet down_closure(const Poset& p, ElemSet s);
ElemSet up_closure(const Poset& p, ElemSet s);
bool is_down_set(const Poset& p, ElemSet s);
bool is_up_set(const Poset& p, ElemSet s);
bool is_convex(const Poset& p, ElemSet s);
/// ↓s ∩ ↑s, the least order-convex superset.
ElemSet convex_hull(const Poset& p, ElemSet s);

/// All down-sets, ascending by bit value. `nonempty` drops the empty set.
std::vector<ElemSet> enumerate_down_sets(const Poset& p, bool nonempty);
std::vector<ElemSet> enumerate_up_sets(const Poset& p, bool nonempty);
std::vector<ElemSet> enumerate_convex_sets(const Poset& p, bool nonempty);

/// Number of up-sets (Alexandrov opens) without materializing them beyond the cap.
/// Throws ResourceCapExceeded when the count exceeds kMaxOpenSets.
std::size_t count_open_sets(const Poset& p);

class MonotoneMap {
 public:
  /// Throws NotMonotone when the table does not preserve order.
  MonotoneMap(Poset dom, Poset cod, Table table);

  const Poset& dom() const { return dom_; }
  const Poset& cod() const { return cod_; }
  const Table& table() const { return table_; }
  Index operator()(Index x) const { return table_[x]; }

  friend bool operator==(const MonotoneMap& a, const MonotoneMap& b) {
    return a.table_ == b.table_ && a.dom_ == b.dom_ && a.cod_ == b.cod_;
  }

 private:
  Poset dom_;
  Poset cod_;
  Table table_;
};

bool is_monotone(const Poset& dom, const Poset& cod, const Table& table);
bool pointwise_leq(const Poset& cod, const Table& f, const Table& g);

/// Canonical ordering of tables: read as a base-|cod| number whose digit i is
/// the image of element i. Maps into a 2-chain then sort like their up-sets.
bool canonical_less(const Table& a, const Table& b);

/// All monotone maps dom -> cod in canonical order.
std::vector<Table> enumerate_monotone_tables(const Poset& dom, const Poset& cod);
std::vector<MonotoneMap> enumerate_monotone_maps(const Poset& dom, const Poset& cod);

/// Monotone maps ordered pointwise. Element i of `poset` is `maps[i]`.
struct FunctionPoset {
  Poset dom;
  Poset cod;
  Poset poset;
  std::vector<Table> maps;

  std::optional<Index> index_of(const Table& t) const;
};

FunctionPoset function_poset(const Poset& dom, const Poset& cod);
/// Pointwise order on an explicit list of tables (which must be canonically sorted).
FunctionPoset function_poset_of(const Poset& dom, const Poset& cod, std::vector<Table> maps);

}  // namespace replete
