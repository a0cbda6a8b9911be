#include "replete/valuation.hpp"

#include <algorithm>
#include <map>

namespace replete {

namespace {

ElemSet set_of(const Table& indicator) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < indicator.size(); ++i)
    if (indicator[i] != 0) bits |= std::uint64_t{1} << i;
  return ElemSet(bits);
}

bool same_kind(const Algebra& a, const Algebra& b) {
  return a.carrier() == b.carrier() && a.signature() == b.signature() && a.tables() == b.tables();
}

std::string open_pair(const OpenSets& opens, Index u, Index v) {
  return "U=" + to_string(opens.sets[u]) + " V=" + to_string(opens.sets[v]);
}

}  // namespace

Index OpenSets::index_of(ElemSet u) const {
  auto it = std::lower_bound(sets.begin(), sets.end(), u);
  if (it == sets.end() || *it != u) throw Error(ErrorCode::InvariantViolation, to_string(u) + " is not open");
  return static_cast<Index>(it - sets.begin());
}

OpenSets open_sets(const Poset& x) {
  require_set_carrier(x);
  count_open_sets(x);  // throws past the cap
  return OpenSets{x, enumerate_up_sets(x, false)};
}

AValuationPair choice(const AValuationPair& a, const AValuationPair& b) {
  AValuationPair out = a;
  for (std::size_t i = 0; i < out.phi1.size(); ++i) {
    out.phi1[i] = a.phi1[i] | b.phi1[i];
    out.phi2[i] = a.phi2[i] & b.phi2[i];
  }
  return out;
}

HeckmannValuation choice(const HeckmannValuation& a, const HeckmannValuation& b) {
  HeckmannValuation out = a;
  for (std::size_t i = 0; i < out.table.size(); ++i)
    out.table[i] = a.table[i] == b.table[i] ? a.table[i] : aval::may;
  return out;
}

bool pair_leq(const AValuationPair& a, const AValuationPair& b) {
  for (std::size_t i = 0; i < a.phi1.size(); ++i)
    if (a.phi1[i] > b.phi1[i] || a.phi2[i] > b.phi2[i]) return false;
  return true;
}

Index PredicateSpace::a_index(Index u1, Index u2) const {
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (coords[k] == std::pair{u1, u2}) return static_cast<Index>(k);
  throw Error(ErrorCode::InvariantViolation, "no predicate with U1 ⊉ U2");
}

ProductContext PredicateSpace::evaluation_context() const {
  const Algebra sj = make_prototype(Prototype::SigmaJoin);
  const Algebra sm = make_prototype(Prototype::SigmaMeet);
  const Algebra av = make_prototype(Prototype::A);
  std::vector<std::pair<Index, Index>> ac;
  for (Index v = 0; v < 3; ++v) ac.emplace_back(aval::first(v), aval::second(v));
  return ProductContext{sigma_join.algebra, sigma_meet.algebra, a.algebra, coords, sj, sm, av, std::move(ac)};
}

PredicateSpace predicate_space(const Poset& x) {
  OpenSets opens = open_sets(x);
  FunctionAlgebra sj = power_algebra(make_prototype(Prototype::SigmaJoin), x);
  FunctionAlgebra sm = power_algebra(make_prototype(Prototype::SigmaMeet), x);
  FunctionAlgebra av = power_algebra(make_prototype(Prototype::A), x);
  for (std::size_t i = 0; i < opens.size(); ++i) {
    if (set_of(sj.maps[i]) != opens.sets[i] || set_of(sm.maps[i]) != opens.sets[i])
      throw Error(ErrorCode::InvariantViolation, "predicate order disagrees with open-set order");
  }
  std::vector<std::pair<Index, Index>> coords;
  coords.reserve(av.maps.size());
  for (const Table& u : av.maps) {
    Table t1(u.size()), t2(u.size());
    for (std::size_t p = 0; p < u.size(); ++p) {
      t1[p] = aval::first(u[p]);
      t2[p] = aval::second(u[p]);
    }
    coords.emplace_back(opens.index_of(set_of(t1)), opens.index_of(set_of(t2)));
  }
  return PredicateSpace{x, std::move(opens), std::move(sj), std::move(sm), std::move(av), std::move(coords)};
}

Repletion repletion(const Poset& x, const Algebra& r) {
  std::optional<Prototype> kind;
  for (Prototype p : {Prototype::SigmaJoin, Prototype::SigmaMeet, Prototype::A})
    if (same_kind(r, make_prototype(p))) kind = p;
  FunctionAlgebra power = power_algebra(r, x);
  FunctionAlgebra homs = enumerate_homs(power.algebra, r, true);
  MonotoneMap unit = eta(power, homs);
  return Repletion{r, kind, !kind.has_value(), std::move(power), std::move(homs), std::move(unit)};
}

Repletion repletion(const Poset& x, Prototype kind) { return repletion(x, make_prototype(kind)); }

ExtensionReport unique_extension_check(const Repletion& rep) {
  ExtensionReport report;
  const Algebra& target = rep.prototype;
  const auto& homs = rep.homs;
  const Poset& x = rep.power.dom;

  // Every homomorphism out of the repletion, grouped by its restriction along the unit.
  const auto all = hom_tables(homs.algebra, target, false);
  report.homs_enumerated = all.size();
  std::map<Table, std::vector<std::size_t>> by_restriction;
  for (std::size_t k = 0; k < all.size(); ++k) {
    Table restricted(x.size());
    for (Index p = 0; p < x.size(); ++p) restricted[p] = all[k][rep.unit(p)];
    by_restriction[restricted].push_back(k);
  }

  std::vector<Table> extensions(rep.power.maps.size());
  for (std::size_t u = 0; u < rep.power.maps.size(); ++u) {
    ++report.maps_checked;
    const Table& map = rep.power.maps[u];
    Table ext(homs.maps.size());
    for (std::size_t k = 0; k < homs.maps.size(); ++k) ext[k] = homs.maps[k][u];
    const std::string name = "u#" + std::to_string(u);
    if (!is_homomorphism(homs.algebra, target, ext)) report.failures.push_back(name + ": extension is not a homomorphism");
    for (Index p = 0; p < x.size(); ++p) {
      if (ext[rep.unit(p)] != map[p]) {
        report.failures.push_back(name + ": extension disagrees with u at " + std::to_string(p));
        break;
      }
    }
    auto it = by_restriction.find(map);
    if (it == by_restriction.end() || it->second.size() != 1) {
      report.failures.push_back(name + ": " + std::to_string(it == by_restriction.end() ? 0 : it->second.size()) +
                                " homomorphisms extend u");
    } else if (all[it->second.front()] != ext) {
      report.failures.push_back(name + ": the unique extension is not evaluation at u");
    }
    extensions[u] = std::move(ext);
  }
  if (by_restriction.size() != rep.power.maps.size())
    report.failures.push_back("some homomorphism restricts to a map that is not monotone");

  const Poset& order = rep.power.algebra.carrier();
  for (Index u = 0; u < order.size(); ++u)
    for (Index v = 0; v < order.size(); ++v)
      if (order.less(u, v) && !pointwise_leq(target.carrier(), extensions[u], extensions[v]))
        report.failures.push_back("u#" + std::to_string(u) + " <= u#" + std::to_string(v) + " but extensions are not");
  return report;
}

SplitResult split_phi(const PredicateSpace& space, const Table& phi) {
  const ProductDecomposition d = decompose_product_hom(phi, space.evaluation_context());
  SplitResult out;
  out.pair.phi1.assign(d.phi1.begin(), d.phi1.end());
  out.pair.phi2.assign(d.phi2.begin(), d.phi2.end());
  out.reconstructs = d.reconstructs;
  out.dominates = true;
  for (std::size_t i = 0; i < out.pair.phi1.size(); ++i)
    if (out.pair.phi1[i] < out.pair.phi2[i]) out.dominates = false;
  return out;
}

Table pair_to_table(const PredicateSpace& space, const AValuationPair& pair) {
  Table out(space.coords.size());
  for (std::size_t k = 0; k < space.coords.size(); ++k) {
    const auto [u1, u2] = space.coords[k];
    auto v = aval::from_pair(pair.phi1[u1], pair.phi2[u2]);
    if (!v) throw Error(ErrorCode::InvariantViolation, "phi1 < phi2 at " + open_pair(space.opens, u1, u2));
    out[k] = *v;
  }
  return out;
}

FormalLens to_formal_lens(const OpenSets& opens, const AValuationPair& pair) {
  const std::size_t n = opens.space.size();
  ElemSet missed;
  ElemSet q = ElemSet::full(n);
  for (std::size_t i = 0; i < opens.size(); ++i) {
    if (pair.phi1[i] == 0) missed = missed | opens.sets[i];
    if (pair.phi2[i] == 1) q = q & opens.sets[i];
  }
  return make_formal_lens(opens.space, ElemSet::full(n) - missed, q);
}

AValuationPair from_formal_lens(const OpenSets& opens, const FormalLens& fl) {
  AValuationPair out;
  for (const ElemSet& u : opens.sets) {
    out.phi1.push_back(fl.c.intersects(u) ? 1 : 0);
    out.phi2.push_back(fl.q.subset_of(u) ? 1 : 0);
  }
  return out;
}

HCheck check_H(const OpenSets& opens, const AValuationPair& pair) {
  HCheck out;
  const Index n = static_cast<Index>(opens.size());
  for (Index u = 0; u < n; ++u) {
    for (Index v = 0; v < n; ++v) {
      if (out.first && pair.phi1[u] == 0 && pair.phi2[v] != pair.phi2[opens.index_of(opens.sets[u] | opens.sets[v])]) {
        out.first = false;
        out.first_witness = std::pair{u, v};
      }
      if (out.second && pair.phi2[u] == 1 && pair.phi1[v] != pair.phi1[opens.index_of(opens.sets[u] & opens.sets[v])]) {
        out.second = false;
        out.second_witness = std::pair{u, v};
      }
    }
  }
  return out;
}

HCheck check_H_heckmann(const OpenSets& opens, const HeckmannValuation& alpha) {
  HCheck out;
  const auto& a = alpha.table;
  const Index n = static_cast<Index>(opens.size());
  for (Index u = 0; u < n; ++u) {
    for (Index v = 0; v < n; ++v) {
      if (out.first && a[u] == aval::bot && a[opens.index_of(opens.sets[u] | opens.sets[v])] != a[v]) {
        out.first = false;
        out.first_witness = std::pair{u, v};
      }
      if (out.second && a[u] == aval::top && a[opens.index_of(opens.sets[u] & opens.sets[v])] != a[v]) {
        out.second = false;
        out.second_witness = std::pair{u, v};
      }
    }
  }
  return out;
}

bool is_valuation_shaped(const OpenSets& opens, const HeckmannValuation& alpha) {
  const auto& a = alpha.table;
  if (a.size() != opens.size() || a[opens.empty_index()] != aval::bot || a[opens.full_index()] != aval::top)
    return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > aval::top) return false;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (opens.sets[i].subset_of(opens.sets[j]) && a[i] > a[j]) return false;
  }
  return true;
}

bool is_pair_shaped(const OpenSets& opens, const AValuationPair& pair) {
  const std::size_t n = opens.size();
  if (pair.phi1.size() != n || pair.phi2.size() != n) return false;
  if (pair.phi1[opens.empty_index()] != 0 || pair.phi1[opens.full_index()] != 1) return false;
  if (pair.phi2[opens.empty_index()] != 0 || pair.phi2[opens.full_index()] != 1) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (pair.phi1[opens.index_of(opens.sets[i] | opens.sets[j])] != (pair.phi1[i] | pair.phi1[j])) return false;
      if (pair.phi2[opens.index_of(opens.sets[i] & opens.sets[j])] != (pair.phi2[i] & pair.phi2[j])) return false;
    }
  }
  return true;
}

AValuationPair convert(const OpenSets& opens, const HeckmannValuation& alpha) {
  if (!is_valuation_shaped(opens, alpha) || !check_H_heckmann(opens, alpha).both())
    throw Error(ErrorCode::InvariantViolation, "not a Heckmann valuation");
  AValuationPair out;
  for (Index v : alpha.table) {
    out.phi1.push_back(static_cast<std::uint8_t>(aval::first(v)));
    out.phi2.push_back(static_cast<std::uint8_t>(aval::second(v)));
  }
  return out;
}

HeckmannValuation convert_back(const OpenSets& opens, const AValuationPair& pair) {
  if (!is_pair_shaped(opens, pair) || !check_H(opens, pair).both())
    throw Error(ErrorCode::InvariantViolation, "pair violates the paired H-conditions");
  HeckmannValuation out{opens.space, Table(opens.size())};
  for (std::size_t i = 0; i < opens.size(); ++i) {
    auto v = aval::from_pair(pair.phi1[i], pair.phi2[i]);
    if (!v) throw Error(ErrorCode::InvariantViolation, "phi1 < phi2 at " + to_string(opens.sets[i]));
    out.table[i] = *v;
  }
  return out;
}

Table heckmann_to_table(const PredicateSpace& space, const HeckmannValuation& alpha) {
  Table out(space.coords.size());
  for (std::size_t k = 0; k < space.coords.size(); ++k) {
    const Index a = alpha.table[space.coords[k].first];
    const Index b = alpha.table[space.coords[k].second];
    out[k] = a == b ? a : aval::may;
  }
  return out;
}

HeckmannValuation delta(const OpenSets& opens, Index x) {
  if (x >= opens.space.size()) throw Error(ErrorCode::InvariantViolation, "point out of range");
  return delta_F(opens, ElemSet::singleton(x));
}

HeckmannValuation delta_F(const OpenSets& opens, ElemSet f) {
  if (f.empty()) throw Error(ErrorCode::EmptyF, "delta_F needs a nonempty F");
  if (!f.subset_of(ElemSet::full(opens.space.size()))) throw Error(ErrorCode::InvariantViolation, "F out of range");
  HeckmannValuation out{opens.space, {}};
  for (const ElemSet& u : opens.sets)
    out.table.push_back(f.subset_of(u) ? aval::top : (f.intersects(u) ? aval::may : aval::bot));
  return out;
}

AValuationPair lens_to_valuation(const OpenSets& opens, ElemSet lens) {
  if (lens.empty() || !is_convex(opens.space, lens))
    throw Error(ErrorCode::InvariantViolation, to_string(lens) + " is not a lens");
  AValuationPair out;
  for (const ElemSet& u : opens.sets) {
    out.phi1.push_back(lens.intersects(u) ? 1 : 0);
    out.phi2.push_back(lens.subset_of(u) ? 1 : 0);
  }
  return out;
}

ElemSet valuation_to_lens(const OpenSets& opens, const AValuationPair& pair) {
  const HCheck h = check_H(opens, pair);
  if (!h.both()) {
    const auto w = h.first ? *h.second_witness : *h.first_witness;
    throw Error(ErrorCode::HConditionViolated,
                std::string(h.first ? "second" : "first") + " H-condition fails at " + open_pair(opens, w.first, w.second));
  }
  return real_lens(to_formal_lens(opens, pair));
}

ErraticSetup erratic_setup(const Poset& x) {
  PredicateSpace space = predicate_space(x);
  Repletion hoare = repletion(x, Prototype::SigmaJoin);
  Repletion smyth = repletion(x, Prototype::SigmaMeet);
  Repletion a = repletion(x, Prototype::A);

  std::vector<AValuationPair> pairs;
  std::vector<std::pair<Index, Index>> coords;
  for (const Table& phi : a.homs.maps) {
    SplitResult s = split_phi(space, phi);
    if (!s.reconstructs) throw Error(ErrorCode::InvariantViolation, "homomorphism does not split");
    coords.emplace_back(hoare.homs.require_index(Table(s.pair.phi1.begin(), s.pair.phi1.end())),
                        smyth.homs.require_index(Table(s.pair.phi2.begin(), s.pair.phi2.end())));
    pairs.push_back(std::move(s.pair));
  }
  std::vector<std::pair<Index, Index>> ac;
  for (Index v = 0; v < 3; ++v) ac.emplace_back(aval::first(v), aval::second(v));
  ProductContext context{hoare.homs.algebra, smyth.homs.algebra, a.homs.algebra, std::move(coords),
                         hoare.prototype,    smyth.prototype,    a.prototype,     std::move(ac)};
  return ErraticSetup{x,           std::move(space), std::move(hoare),  std::move(smyth),
                      std::move(a), std::move(pairs), std::move(context)};
}

PhiDecomposition decompose_Phi(const ErraticSetup& setup, const Table& big_phi) {
  PhiDecomposition out;
  out.checks = decompose_product_hom(big_phi, setup.context);
  out.phi_h = out.checks.phi1;
  out.phi_s = out.checks.phi2;

  // π_H and π_S, as maps out of the A-repletion.
  const auto& coords = setup.context.b_coords;
  for (const Table& psi : hom_tables(setup.hoare.homs.algebra, setup.hoare.prototype, false)) {
    bool commutes = true;
    for (std::size_t k = 0; k < coords.size() && commutes; ++k)
      commutes = psi[coords[k].first] == aval::first(big_phi[k]);
    if (commutes) ++out.h_candidates;
  }
  for (const Table& psi : hom_tables(setup.smyth.homs.algebra, setup.smyth.prototype, false)) {
    bool commutes = true;
    for (std::size_t k = 0; k < coords.size() && commutes; ++k)
      commutes = psi[coords[k].second] == aval::second(big_phi[k]);
    if (commutes) ++out.s_candidates;
  }
  return out;
}

}  // namespace replete
