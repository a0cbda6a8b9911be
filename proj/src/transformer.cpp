#include "replete/transformer.hpp"

#include <algorithm>

namespace replete {

namespace {

// Pointwise max or min of predicates; monotone, so always a member.
Table lattice_table(const FunctionAlgebra& power, bool upper) {
  const std::size_t n = power.maps.size();
  Table out(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      Table w(power.maps[u].size());
      for (std::size_t x = 0; x < w.size(); ++x)
        w[x] = upper ? std::max(power.maps[u][x], power.maps[v][x]) : std::min(power.maps[u][x], power.maps[v][x]);
      out[u * n + v] = power.require_index(w);
    }
  }
  return out;
}

}  // namespace

TransformerSpace transformer_space(const Poset& x, const Poset& y, Prototype kind) {
  PredicateSpace px = predicate_space(x);
  PredicateSpace py = predicate_space(y);
  auto pick = [&](const PredicateSpace& p) {
    switch (kind) {
      case Prototype::SigmaJoin: return p.sigma_join;
      case Prototype::SigmaMeet: return p.sigma_meet;
      case Prototype::A: break;
    }
    return p.a;
  };
  FunctionAlgebra power_x = pick(px);
  FunctionAlgebra power_y = pick(py);
  Repletion rep = repletion(y, kind);
  Table join_y = lattice_table(power_y, true);
  Table meet_y = lattice_table(power_y, false);
  return TransformerSpace{kind,
                          make_prototype(kind),
                          x,
                          y,
                          std::move(px),
                          std::move(py),
                          std::move(power_x),
                          std::move(power_y),
                          std::move(rep),
                          std::move(join_y),
                          std::move(meet_y)};
}

std::vector<StateTransformer> enumerate_state_transformers(const TransformerSpace& space) {
  std::vector<StateTransformer> out;
  for (Table& t : enumerate_monotone_tables(space.x, space.rep_y.homs.algebra.carrier()))
    out.push_back(StateTransformer{std::move(t)});
  return out;
}

std::vector<PredicateTransformer> enumerate_predicate_transformers(const TransformerSpace& space) {
  std::vector<PredicateTransformer> out;
  for (Table& s : hom_tables(space.power_y.algebra, space.power_x.algebra, true))
    out.push_back(PredicateTransformer{std::move(s)});
  return out;
}

PredicateTransformer transpose(const TransformerSpace& space, const StateTransformer& t) {
  PredicateTransformer s;
  const std::size_t n = space.x.size();
  for (std::size_t u = 0; u < space.power_y.maps.size(); ++u) {
    Table image(n);
    for (std::size_t p = 0; p < n; ++p) image[p] = space.rep_y.homs.maps[t.table[p]][u];
    s.table.push_back(space.power_x.require_index(image));
  }
  return s;
}

StateTransformer untranspose(const TransformerSpace& space, const PredicateTransformer& s) {
  StateTransformer t;
  for (std::size_t p = 0; p < space.x.size(); ++p) {
    Table column(space.power_y.maps.size());
    for (std::size_t u = 0; u < column.size(); ++u) column[u] = space.power_x.maps[s.table[u]][p];
    t.table.push_back(space.rep_y.homs.require_index(column));
  }
  return t;
}

std::string Classification::describe() const {
  std::string out;
  auto add = [&](bool flag, const char* name) {
    if (!flag) return;
    if (!out.empty()) out += ",";
    out += name;
  };
  add(angelic, "angelic");
  add(demonic, "demonic");
  add(erratic, "erratic");
  add(plotkin, "plotkin");
  return out.empty() ? "none" : out;
}

Classification classify(const TransformerSpace& space, const PredicateTransformer& s) {
  Classification out;
  const bool homomorphic = is_homomorphism(space.power_y.algebra, space.power_x.algebra, s.table);
  if (space.kind != Prototype::A) {
    // Σ-predicates are indexed exactly like open sets.
    const auto& oy = space.preds_y.opens;
    const auto& ox = space.preds_x.opens;
    const bool bounds = s.table[oy.empty_index()] == ox.empty_index() && s.table[oy.full_index()] == ox.full_index();
    bool unions = true, meets = true;
    for (Index u = 0; u < oy.size(); ++u) {
      for (Index v = 0; v < oy.size(); ++v) {
        const ElemSet su = ox.sets[s.table[u]], sv = ox.sets[s.table[v]];
        if (ox.sets[s.table[oy.index_of(oy.sets[u] | oy.sets[v])]] != (su | sv)) unions = false;
        if (ox.sets[s.table[oy.index_of(oy.sets[u] & oy.sets[v])]] != (su & sv)) meets = false;
      }
    }
    out.angelic = bounds && unions;
    out.demonic = bounds && meets;
    return out;
  }

  const auto top_y = space.power_y.algebra.carrier().top(), bot_y = space.power_y.algebra.carrier().bottom();
  const auto top_x = space.power_x.algebra.carrier().top(), bot_x = space.power_x.algebra.carrier().bottom();
  const bool bounds = s.table[*top_y] == *top_x && s.table[*bot_y] == *bot_x;
  out.erratic = homomorphic && bounds && decompose_erratic(space, s).ok();
  if (!out.erratic) return out;

  const auto& py = space.power_y;
  const auto& px = space.power_x;
  const std::size_t np = py.maps.size();
  bool h = true;
  for (Index u = 0; u < py.maps.size() && h; ++u) {
    const Table& su = px.maps[s.table[u]];
    for (Index v = 0; v < py.maps.size() && h; ++v) {
      const Table& sv = px.maps[s.table[v]];
      const Table& sj = px.maps[s.table[space.join_y[u * np + v]]];
      const Table& sm = px.maps[s.table[space.meet_y[u * np + v]]];
      for (std::size_t p = 0; p < space.x.size(); ++p) {
        if (su[p] == aval::bot && sj[p] != sv[p]) h = false;
        if (su[p] == aval::top && sm[p] != sv[p]) h = false;
      }
    }
  }
  out.plotkin = h;
  return out;
}

ErraticDecomposition decompose_erratic(const TransformerSpace& space, const PredicateTransformer& s) {
  if (space.kind != Prototype::A) throw Error(ErrorCode::WrongPrototype, "erratic decomposition needs the A prototype");
  const PredicateSpace& py = space.preds_y;
  const PredicateSpace& px = space.preds_x;
  ProductContext ctx{py.sigma_join.algebra, py.sigma_meet.algebra, py.a.algebra, py.coords,
                     px.sigma_join.algebra, px.sigma_meet.algebra, px.a.algebra, px.coords};
  ErraticDecomposition out;
  out.checks = decompose_product_hom(s.table, ctx);
  out.s1 = out.checks.phi1;
  out.s2 = out.checks.phi2;
  out.dominates = true;
  for (std::size_t u = 0; u < out.s1.size(); ++u)
    if (!px.opens.sets[out.s2[u]].subset_of(px.opens.sets[out.s1[u]])) out.dominates = false;
  return out;
}

SetPowerdomain matching_powerdomain(const TransformerSpace& space) {
  switch (space.kind) {
    case Prototype::SigmaJoin: return hoare_pd(space.y);
    case Prototype::SigmaMeet: return smyth_pd(space.y);
    case Prototype::A: break;
  }
  return plotkin_pd(space.y);
}

Table powerdomain_map(const TransformerSpace& space, const SetPowerdomain& pd, const StateTransformer& t) {
  const OpenSets& opens = space.preds_y.opens;
  const ElemSet all = ElemSet::full(space.y.size());
  Table out;
  for (Index k : t.table) {
    const Table& phi = space.rep_y.homs.maps[k];
    ElemSet member;
    switch (space.kind) {
      case Prototype::SigmaJoin: {
        ElemSet missed;
        for (std::size_t i = 0; i < opens.size(); ++i)
          if (phi[i] == 0) missed = missed | opens.sets[i];
        member = all - missed;
        break;
      }
      case Prototype::SigmaMeet: {
        member = all;
        for (std::size_t i = 0; i < opens.size(); ++i)
          if (phi[i] == 1) member = member & opens.sets[i];
        break;
      }
      case Prototype::A: {
        const SplitResult split = split_phi(space.preds_y, phi);
        member = valuation_to_lens(opens, split.pair);
        break;
      }
    }
    auto idx = pd.index_of(member);
    if (!idx) throw Error(ErrorCode::InvariantViolation, to_string(member) + " is not in the powerdomain");
    out.push_back(*idx);
  }
  return out;
}

}  // namespace replete
