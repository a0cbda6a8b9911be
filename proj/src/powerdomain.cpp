#include "replete/powerdomain.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace replete {

FormalLens make_formal_lens(const Poset& x, ElemSet c, ElemSet q) {
  if (c.empty() || !is_down_set(x, c)) throw Error(ErrorCode::InvariantViolation, "C must be a nonempty down-set");
  if (q.empty() || !is_up_set(x, q)) throw Error(ErrorCode::InvariantViolation, "Q must be a nonempty up-set");
  if (!c.intersects(q)) throw Error(ErrorCode::InvariantViolation, "C and Q must meet");
  return FormalLens{c, q};
}

std::string to_string(const FormalLens& fl) { return "(" + to_string(fl.c) + "," + to_string(fl.q) + ")"; }

std::optional<Index> SetPowerdomain::index_of(ElemSet s) const {
  auto it = std::lower_bound(sets.begin(), sets.end(), s);
  if (it == sets.end() || *it != s) return std::nullopt;
  return static_cast<Index>(it - sets.begin());
}

std::optional<Index> FormalLensAlgebra::index_of(const FormalLens& fl) const {
  auto it = std::lower_bound(lenses.begin(), lenses.end(), fl);
  if (it == lenses.end() || *it != fl) return std::nullopt;
  return static_cast<Index>(it - lenses.begin());
}

namespace {

template <typename Elem, typename Leq, typename Op, typename Label>
Algebra build_algebra(const std::vector<Elem>& elems, Leq leq, Op op, Label label,
                      const std::function<std::optional<Index>(const Elem&)>& index_of) {
  const std::size_t n = elems.size();
  if (n > kMaxMaterialized) {
    throw Error(ErrorCode::ResourceCapExceeded, std::to_string(n) + " elements exceed the materialization cap");
  }
  std::vector<std::uint8_t> rel(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[i * n + j] = leq(elems[i], elems[j]) ? 1 : 0;
  Table table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto r = index_of(op(elems[i], elems[j]));
      if (!r) throw Error(ErrorCode::InvariantViolation, "operation leaves the carrier");
      table[i * n + j] = *r;
    }
  }
  std::vector<std::string> labels;
  for (const Elem& e : elems) labels.push_back(label(e));
  // Inclusion-style orders and unions: partial order and monotone by construction.
  return Algebra::trusted(Poset::trusted(n, std::move(rel)), semilattice_signature(), {std::move(table)},
                          std::move(labels));
}

template <typename Leq, typename Op, typename Unit>
SetPowerdomain set_powerdomain(const Poset& x, std::vector<ElemSet> sets, Leq leq, Op op, Unit unit) {
  std::function<std::optional<Index>(const ElemSet&)> find = [&sets](const ElemSet& s) -> std::optional<Index> {
    auto it = std::lower_bound(sets.begin(), sets.end(), s);
    if (it == sets.end() || *it != s) return std::nullopt;
    return static_cast<Index>(it - sets.begin());
  };
  Algebra alg = build_algebra(sets, leq, op, [](ElemSet s) { return to_string(s); }, find);
  Table units(x.size());
  for (Index p = 0; p < x.size(); ++p) units[p] = *find(unit(p));
  MonotoneMap u(x, alg.carrier(), std::move(units));
  return SetPowerdomain{std::move(alg), x, std::move(sets), std::move(u)};
}

void require_law(const Algebra& b, std::string_view law, const char* what) {
  const auto r = check_law(b, law);
  if (!r.holds) throw Error(ErrorCode::LawUnsatisfied, std::string("target algebra does not satisfy ") + what);
}

}  // namespace

SetPowerdomain hoare_pd(const Poset& x) {
  return set_powerdomain(
      x, enumerate_down_sets(x, true), [](ElemSet a, ElemSet b) { return a.subset_of(b); },
      [](ElemSet a, ElemSet b) { return a | b; }, [&x](Index p) { return x.down(p); });
}

SetPowerdomain smyth_pd(const Poset& x) {
  return set_powerdomain(
      x, enumerate_up_sets(x, true), [](ElemSet a, ElemSet b) { return b.subset_of(a); },
      [](ElemSet a, ElemSet b) { return a | b; }, [&x](Index p) { return x.up(p); });
}

SetPowerdomain plotkin_pd(const Poset& x) {
  return set_powerdomain(
      x, enumerate_convex_sets(x, true), [&x](ElemSet a, ElemSet b) { return em_leq(x, a, b); },
      [&x](ElemSet a, ElemSet b) { return convex_hull(x, a | b); },
      [](Index p) { return ElemSet::singleton(p); });
}

FormalLensAlgebra formal_lens_algebra(const Poset& x) {
  std::vector<FormalLens> lenses;
  const auto downs = enumerate_down_sets(x, true);
  const auto ups = enumerate_up_sets(x, true);
  for (ElemSet c : downs)
    for (ElemSet q : ups)
      if (c.intersects(q)) lenses.push_back(FormalLens{c, q});
  std::sort(lenses.begin(), lenses.end());
  std::function<std::optional<Index>(const FormalLens&)> find =
      [&lenses](const FormalLens& fl) -> std::optional<Index> {
    auto it = std::lower_bound(lenses.begin(), lenses.end(), fl);
    if (it == lenses.end() || *it != fl) return std::nullopt;
    return static_cast<Index>(it - lenses.begin());
  };
  Algebra alg = build_algebra(
      lenses, [](const FormalLens& a, const FormalLens& b) { return a.c.subset_of(b.c) && b.q.subset_of(a.q); },
      [](const FormalLens& a, const FormalLens& b) { return FormalLens{a.c | b.c, a.q | b.q}; },
      [](const FormalLens& fl) { return to_string(fl); }, find);
  Table units(x.size());
  for (Index p = 0; p < x.size(); ++p) units[p] = *find(FormalLens{x.down(p), x.up(p)});
  MonotoneMap u(x, alg.carrier(), std::move(units));
  return FormalLensAlgebra{std::move(alg), x, std::move(lenses), std::move(u)};
}

bool em_leq(const Poset& x, ElemSet l1, ElemSet l2) {
  return l1.subset_of(down_closure(x, l2)) && l2.subset_of(up_closure(x, l1));
}

ElemSet real_lens(const FormalLens& fl) { return fl.c & fl.q; }

FormalLens normalize(const Poset& x, const FormalLens& fl) {
  const ElemSet l = real_lens(fl);
  return FormalLens{down_closure(x, l), up_closure(x, l)};
}

bool is_quasilens(const Poset& x, const FormalLens& fl) {
  return fl.c.subset_of(down_closure(x, fl.c & fl.q));
}

bool is_quasilens_all_opens(const Poset& x, const FormalLens& fl) {
  for (ElemSet u : enumerate_up_sets(x, false)) {
    if (!fl.q.subset_of(u)) continue;
    if (!fl.c.subset_of(down_closure(x, fl.c & u))) return false;
  }
  return true;
}

Index hoare_extend(const Algebra& b, const MonotoneMap& f, ElemSet c) {
  require_law(b, laws::join, "(J)");
  auto m = c.members();
  if (m.empty()) throw Error(ErrorCode::PreconditionUnmet, "extension over the empty set");
  Index acc = f(m.front());
  for (std::size_t i = 1; i < m.size(); ++i) acc = b.op(acc, f(m[i]));
  return acc;
}

Index smyth_extend(const Algebra& b, const MonotoneMap& f, ElemSet q) {
  require_law(b, laws::meet, "(M)");
  auto m = q.members();
  if (m.empty()) throw Error(ErrorCode::PreconditionUnmet, "extension over the empty set");
  Index acc = f(m.front());
  for (std::size_t i = 1; i < m.size(); ++i) acc = b.op(acc, f(m[i]));
  return acc;
}

Index plotkin_extend(const Algebra& b, const MonotoneMap& f, ElemSet l) {
  if (!is_semilattice(b)) throw Error(ErrorCode::LawUnsatisfied, "target algebra is not a semilattice");
  auto m = l.members();
  if (m.empty()) throw Error(ErrorCode::PreconditionUnmet, "extension over the empty set");
  Index acc = f(m.front());
  for (std::size_t i = 1; i < m.size(); ++i) acc = b.op(acc, f(m[i]));
  return acc;
}

Table extension_table(PowerdomainKind kind, const SetPowerdomain& pd, const Algebra& b, const MonotoneMap& f) {
  Table out(pd.sets.size());
  for (std::size_t i = 0; i < pd.sets.size(); ++i) {
    switch (kind) {
      case PowerdomainKind::Hoare: out[i] = hoare_extend(b, f, pd.sets[i]); break;
      case PowerdomainKind::Smyth: out[i] = smyth_extend(b, f, pd.sets[i]); break;
      case PowerdomainKind::Plotkin: out[i] = plotkin_extend(b, f, pd.sets[i]); break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Target family for freeness checks

namespace {

std::vector<std::uint8_t> encode(std::size_t n, const std::vector<std::uint8_t>& rel, const Table& op,
                                 const std::vector<Index>& perm) {
  // perm[old] = new
  std::vector<std::uint8_t> code(2 * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      code[perm[i] * n + perm[j]] = rel[i * n + j];
      code[n * n + perm[i] * n + perm[j]] = static_cast<std::uint8_t>(perm[op[i * n + j]]);
    }
  }
  return code;
}

std::vector<Algebra> build_family(std::size_t n) {
  std::vector<std::pair<Index, Index>> pairs;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::set<std::vector<std::uint8_t>> seen;
  std::vector<Algebra> out;
  std::vector<Index> perm(n);

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    // Naturally labelled orders: i <= j only if i <= j as integers.
    std::vector<std::uint8_t> rel(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = 1;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1u) rel[pairs[k].first * n + pairs[k].second] = 1;
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      for (std::size_t j = 0; j < n && transitive; ++j)
        for (std::size_t k = 0; k < n && transitive; ++k)
          if (rel[i * n + j] && rel[j * n + k] && !rel[i * n + k]) transitive = false;
    if (!transitive) continue;

    // Commutative idempotent tables, one value per unordered pair.
    std::vector<Index> choice(pairs.size(), 0);
    while (true) {
      Table op(n * n);
      for (Index i = 0; i < n; ++i) op[i * n + i] = i;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        op[pairs[k].first * n + pairs[k].second] = choice[k];
        op[pairs[k].second * n + pairs[k].first] = choice[k];
      }
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a)
        for (std::size_t b = 0; b < n && ok; ++b)
          for (std::size_t c = 0; c < n && ok; ++c)
            ok = op[a * n + op[b * n + c]] == op[op[a * n + b] * n + c];
      for (std::size_t a = 0; a < n && ok; ++a)
        for (std::size_t a2 = 0; a2 < n && ok; ++a2)
          if (rel[a * n + a2])
            for (std::size_t b = 0; b < n && ok; ++b) ok = rel[op[a * n + b] * n + op[a2 * n + b]] != 0;
      if (ok) {
        std::iota(perm.begin(), perm.end(), Index{0});
        std::vector<std::uint8_t> best = encode(n, rel, op, perm);
        while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, encode(n, rel, op, perm));
        if (seen.insert(best).second) out.push_back(Algebra(Poset::trusted(n, rel), semilattice_signature(), {op}));
      }
      std::size_t k = 0;
      for (; k < choice.size(); ++k) {
        if (++choice[k] < n) break;
        choice[k] = 0;
      }
      if (k == choice.size()) break;
    }
  }
  return out;
}

}  // namespace

const std::vector<Algebra>& semilattice_family(std::size_t max_size) {
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<Algebra>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(max_size);
  if (it != cache.end()) return it->second;
  std::vector<Algebra> family;
  for (std::size_t n = 1; n <= max_size; ++n) {
    auto part = build_family(n);
    family.insert(family.end(), part.begin(), part.end());
  }
  return cache.emplace(max_size, std::move(family)).first->second;
}

}  // namespace replete
