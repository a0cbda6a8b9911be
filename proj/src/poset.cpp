#include "replete/poset.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "replete/kernels.hpp"

namespace replete {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ReflexivityViolation: return "ReflexivityViolation";
    case ErrorCode::AntisymmetryViolation: return "AntisymmetryViolation";
    case ErrorCode::TransitivityViolation: return "TransitivityViolation";
    case ErrorCode::EmptyCarrier: return "EmptyCarrier";
    case ErrorCode::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorCode::ResourceCapExceeded: return "ResourceCapExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::NoBounds: return "NoBounds";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorCode::LawUnsatisfied: return "LawUnsatisfied";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::HConditionViolated: return "HConditionViolated";
    case ErrorCode::EmptyF: return "EmptyF";
    case ErrorCode::WrongPrototype: return "WrongPrototype";
  }
  return "Unknown";
}

ElemSet ElemSet::of(std::initializer_list<Index> members) {
  std::uint64_t bits = 0;
  for (Index i : members) bits |= std::uint64_t{1} << i;
  return ElemSet(bits);
}

ElemSet ElemSet::full(std::size_t n) {
  return ElemSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

std::vector<Index> ElemSet::members() const {
  std::vector<Index> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<Index>(std::countr_zero(b)));
  return out;
}

std::string to_string(ElemSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Index i : s.members()) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------
// Poset

Poset Poset::build(std::size_t n, std::vector<std::uint8_t> leq) {
  auto rep = std::make_shared<Rep>();
  rep->n = n;
  rep->leq = std::move(leq);
  if (n <= kMaxSetCarrier) {
    rep->up.assign(n, ElemSet{});
    rep->down.assign(n, ElemSet{});
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (rep->leq[a * n + b]) {
          rep->up[a] = rep->up[a] | ElemSet::singleton(static_cast<Index>(b));
          rep->down[b] = rep->down[b] | ElemSet::singleton(static_cast<Index>(a));
        }
      }
    }
  }
  return Poset(std::move(rep));
}

Poset Poset::from_relation(const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = leq.size();
  if (n == 0) throw Error(ErrorCode::EmptyCarrier, "a poset needs at least one element");
  for (std::size_t i = 0; i < n; ++i) {
    if (leq[i].size() != n) {
      throw Error(ErrorCode::ParseError, "relation row " + std::to_string(i) + " is not of length " + std::to_string(n));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq[i][i]) throw Error(ErrorCode::ReflexivityViolation, "element " + std::to_string(i) + " is not <= itself");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (leq[i][j] && leq[j][i]) {
        throw Error(ErrorCode::AntisymmetryViolation,
                    std::to_string(i) + " <= " + std::to_string(j) + " and " + std::to_string(j) + " <= " +
                        std::to_string(i));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!leq[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (leq[j][k] && !leq[i][k]) {
          throw Error(ErrorCode::TransitivityViolation,
                      std::to_string(i) + " <= " + std::to_string(j) + " <= " + std::to_string(k) + " but not " +
                          std::to_string(i) + " <= " + std::to_string(k));
        }
      }
    }
  }
  std::vector<std::uint8_t> flat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = leq[i][j] ? 1 : 0;
  return build(n, std::move(flat));
}

Poset Poset::from_generators(std::size_t n, const std::vector<std::pair<Index, Index>>& less) {
  if (n == 0) throw Error(ErrorCode::EmptyCarrier, "a poset needs at least one element");
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
  for (auto [a, b] : less) {
    if (a >= n || b >= n) {
      throw Error(ErrorCode::ParseError,
                  "relation " + std::to_string(a) + " < " + std::to_string(b) + " outside 0.." + std::to_string(n - 1));
    }
    rel[a][b] = true;
  }
  // Warshall
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rel[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (rel[k][j]) rel[i][j] = true;
  return from_relation(rel);
}

Poset Poset::chain(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::EmptyCarrier, "a poset needs at least one element");
  std::vector<std::uint8_t> flat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) flat[i * n + j] = 1;
  return build(n, std::move(flat));
}

Poset Poset::antichain(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::EmptyCarrier, "a poset needs at least one element");
  std::vector<std::uint8_t> flat(n * n);
  for (std::size_t i = 0; i < n; ++i) flat[i * n + i] = 1;
  return build(n, std::move(flat));
}

void require_set_carrier(const Poset& p) {
  if (p.size() > kMaxSetCarrier) {
    throw Error(ErrorCode::CarrierTooLarge,
                "subset operations support at most 64 elements, got " + std::to_string(p.size()));
  }
}

ElemSet Poset::up(Index i) const {
  require_set_carrier(*this);
  return rep_->up[i];
}

ElemSet Poset::down(Index i) const {
  require_set_carrier(*this);
  return rep_->down[i];
}

std::optional<Index> Poset::bottom() const {
  const std::size_t n = size();
  for (Index b = 0; b < n; ++b) {
    bool least = true;
    for (Index x = 0; x < n && least; ++x) least = leq(b, x);
    if (least) return b;
  }
  return std::nullopt;
}

std::optional<Index> Poset::top() const {
  const std::size_t n = size();
  for (Index t = 0; t < n; ++t) {
    bool greatest = true;
    for (Index x = 0; x < n && greatest; ++x) greatest = leq(x, t);
    if (greatest) return t;
  }
  return std::nullopt;
}

std::vector<std::pair<Index, Index>> Poset::covers() const {
  const std::size_t n = size();
  std::vector<std::pair<Index, Index>> out;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      bool direct = true;
      for (Index c = 0; c < n && direct; ++c) direct = !(less(a, c) && less(c, b));
      if (direct) out.emplace_back(a, b);
    }
  }
  return out;
}

Poset product(const Poset& p, const Poset& q) {
  const std::size_t n = p.size() * q.size();
  if (n > kMaxMaterialized) {
    throw Error(ErrorCode::ResourceCapExceeded, "product of " + std::to_string(n) + " elements");
  }
  std::vector<std::uint8_t> flat(n * n);
  for (Index a = 0; a < p.size(); ++a)
    for (Index b = 0; b < q.size(); ++b)
      for (Index c = 0; c < p.size(); ++c)
        for (Index d = 0; d < q.size(); ++d)
          flat[(a * q.size() + b) * n + c * q.size() + d] = p.leq(a, c) && q.leq(b, d);
  return Poset::build(n, std::move(flat));
}

Poset induced(const Poset& p, const std::vector<Index>& members) {
  const std::size_t n = members.size();
  if (n == 0) throw Error(ErrorCode::EmptyCarrier, "induced order on no elements");
  std::vector<std::uint8_t> flat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = p.leq(members[i], members[j]);
  return Poset::build(n, std::move(flat));
}

// ---------------------------------------------------------------------------
// Subsets

ElemSet down_closure(const Poset& p, ElemSet s) {
  ElemSet out;
  for (Index i : s.members()) out = out | p.down(i);
  return out;
}

ElemSet up_closure(const Poset& p, ElemSet s) {
  ElemSet out;
  for (Index i : s.members()) out = out | p.up(i);
  return out;
}

bool is_down_set(const Poset& p, ElemSet s) { return down_closure(p, s) == s; }
bool is_up_set(const Poset& p, ElemSet s) { return up_closure(p, s) == s; }
ElemSet convex_hull(const Poset& p, ElemSet s) { return down_closure(p, s) & up_closure(p, s); }
bool is_convex(const Poset& p, ElemSet s) { return convex_hull(p, s) == s; }

std::vector<ElemSet> enumerate_up_sets(const Poset& p, bool nonempty) {
  require_set_carrier(p);
  // Up-sets are exactly the monotone maps into the 2-chain, whose canonical
  // order coincides with the bit value.
  const auto tables = enumerate_monotone_tables(p, Poset::chain(2));
  std::vector<ElemSet> out;
  out.reserve(tables.size());
  for (const Table& t : tables) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i] == 1) bits |= std::uint64_t{1} << i;
    if (nonempty && bits == 0) continue;
    out.emplace_back(bits);
  }
  return out;
}

std::vector<ElemSet> enumerate_down_sets(const Poset& p, bool nonempty) {
  const ElemSet all = ElemSet::full(p.size());
  std::vector<ElemSet> out;
  for (ElemSet u : enumerate_up_sets(p, false)) {
    const ElemSet d = all - u;
    if (nonempty && d.empty()) continue;
    out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElemSet> enumerate_convex_sets(const Poset& p, bool nonempty) {
  const auto downs = enumerate_down_sets(p, false);
  const auto ups = enumerate_up_sets(p, false);
  std::vector<ElemSet> out;
  for (ElemSet d : downs)
    for (ElemSet u : ups) out.push_back(d & u);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (nonempty && !out.empty() && out.front().empty()) out.erase(out.begin());
  return out;
}

std::size_t count_open_sets(const Poset& p) {
  require_set_carrier(p);
  // Count by recursion over elements in index order, each branch either
  // excluding the element (and its down-set) or including it (and its up-set).
  std::size_t count = 0;
  const std::size_t n = p.size();
  std::vector<std::pair<ElemSet, ElemSet>> stack{{ElemSet{}, ElemSet{}}};
  while (!stack.empty()) {
    auto [in, out] = stack.back();
    stack.pop_back();
    const ElemSet decided = in | out;
    if (decided == ElemSet::full(n)) {
      if (++count > kMaxOpenSets) {
        throw Error(ErrorCode::ResourceCapExceeded,
                    "more than " + std::to_string(kMaxOpenSets) + " open sets");
      }
      continue;
    }
    Index next = 0;
    while (decided.contains(next)) ++next;
    stack.emplace_back(in, out | p.down(next));
    stack.emplace_back(in | p.up(next), out);
  }
  return count;
}

// ---------------------------------------------------------------------------
// Monotone maps

bool is_monotone(const Poset& dom, const Poset& cod, const Table& table) {
  if (table.size() != dom.size()) return false;
  for (Index v : table)
    if (v >= cod.size()) return false;
  for (Index a = 0; a < dom.size(); ++a)
    for (Index b = 0; b < dom.size(); ++b)
      if (dom.leq(a, b) && !cod.leq(table[a], table[b])) return false;
  return true;
}

MonotoneMap::MonotoneMap(Poset dom, Poset cod, Table table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (!is_monotone(dom_, cod_, table_)) throw Error(ErrorCode::NotMonotone, "table does not preserve order");
}

bool pointwise_leq(const Poset& cod, const Table& f, const Table& g) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!cod.leq(f[i], g[i])) return false;
  return true;
}

bool canonical_less(const Table& a, const Table& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

std::vector<Table> enumerate_monotone_tables(const Poset& dom, const Poset& cod) {
  return kernels::solve(kernels::monotone_problem(dom, cod));
}

std::vector<MonotoneMap> enumerate_monotone_maps(const Poset& dom, const Poset& cod) {
  std::vector<MonotoneMap> out;
  for (Table& t : enumerate_monotone_tables(dom, cod)) out.emplace_back(dom, cod, std::move(t));
  return out;
}

std::optional<Index> FunctionPoset::index_of(const Table& t) const {
  auto it = std::lower_bound(maps.begin(), maps.end(), t, canonical_less);
  if (it == maps.end() || *it != t) return std::nullopt;
  return static_cast<Index>(it - maps.begin());
}

FunctionPoset function_poset_of(const Poset& dom, const Poset& cod, std::vector<Table> maps) {
  if (maps.empty()) throw Error(ErrorCode::EmptyCarrier, "no maps to order");
  if (maps.size() > kMaxMaterialized) {
    throw Error(ErrorCode::ResourceCapExceeded,
                "function poset of " + std::to_string(maps.size()) + " elements exceeds the cap of " +
                    std::to_string(kMaxMaterialized));
  }
  // Distinct tables under the pointwise order always form a partial order.
  auto matrix = kernels::pointwise_order(maps, cod);
  return FunctionPoset{dom, cod, Poset::build(maps.size(), std::move(matrix)), std::move(maps)};
}

FunctionPoset function_poset(const Poset& dom, const Poset& cod) {
  return function_poset_of(dom, cod, enumerate_monotone_tables(dom, cod));
}

}  // namespace replete
