#include "replete/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace replete::verify {

namespace {

// Records the first failure only; later ones would be noise.
struct Builder {
  Check check;

  Builder(std::string name, std::string property) {
    check.name = std::move(name);
    check.property = std::move(property);
  }
  void fail(const std::string& why) {
    if (!check.passed) return;
    check.passed = false;
    check.counterexample = why;
  }
  bool ok() const { return check.passed; }
};

// Runs `body`, turning library errors into failures. Resource caps propagate.
Check guarded(Builder b, const std::function<void(Builder&)>& body) {
  try {
    body(b);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ResourceCapExceeded || e.code() == ErrorCode::CarrierTooLarge) throw;
    b.fail(std::string(to_string(e.code())) + ": " + e.what());
  }
  return b.check;
}

std::string label(std::string_view check, const std::string& poset) {
  return std::string(check) + "[" + poset + "]";
}

std::string table_string(const Table& t) {
  std::string out = "[";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + std::to_string(t[i]);
  return out + "]";
}

ElemSet support(const Table& u, Index level) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] >= level) bits |= std::uint64_t{1} << i;
  return ElemSet(bits);
}

// Empty when f is an order- and operation-preserving bijection.
std::optional<std::string> iso_failure(const Algebra& a, const Algebra& b, const Table& f) {
  if (a.size() != b.size()) return "sizes differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
  std::vector<bool> hit(b.size(), false);
  for (Index i = 0; i < f.size(); ++i) {
    if (hit[f[i]]) return "not injective at " + std::to_string(i);
    hit[f[i]] = true;
  }
  for (Index i = 0; i < a.size(); ++i) {
    for (Index j = 0; j < a.size(); ++j) {
      if (a.carrier().leq(i, j) != b.carrier().leq(f[i], f[j]))
        return "order disagrees at (" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (f[a.op(i, j)] != b.op(f[i], f[j]))
        return "operation disagrees at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
  }
  return std::nullopt;
}

void check_unit(Builder& b, const MonotoneMap& unit_a, const MonotoneMap& unit_b, const Table& f) {
  for (Index p = 0; p < unit_a.dom().size(); ++p)
    if (f[unit_a(p)] != unit_b(p)) b.fail("units disagree at point " + std::to_string(p));
}

Index locate(const FunctionAlgebra& fa, const Table& t, const std::string& what) {
  auto idx = fa.index_of(t);
  if (!idx) throw Error(ErrorCode::InvariantViolation, what + " " + table_string(t) + " is not a member");
  return *idx;
}

// The opens of x ordered by inclusion, as a poset.
Poset open_poset(const OpenSets& opens) {
  const std::size_t n = opens.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = opens.sets[i].subset_of(opens.sets[j]);
  return Poset::from_relation(leq);
}

std::vector<HeckmannValuation> all_heckmann_valuations(const OpenSets& opens) {
  std::vector<HeckmannValuation> out;
  for (Table& t : enumerate_monotone_tables(open_poset(opens), Poset::chain(3))) {
    HeckmannValuation alpha{opens.space, std::move(t)};
    if (is_valuation_shaped(opens, alpha) && check_H_heckmann(opens, alpha).both()) out.push_back(std::move(alpha));
  }
  return out;
}

AValuationPair as_pair(const Table& phi1, const Table& phi2) {
  return AValuationPair{std::vector<std::uint8_t>(phi1.begin(), phi1.end()),
                        std::vector<std::uint8_t>(phi2.begin(), phi2.end())};
}

}  // namespace

bool Report::ok() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

std::optional<Suite> parse_suite(std::string_view name) {
  static const std::map<std::string_view, Suite> names{
      {"all", Suite::All},         {"hoare", Suite::Hoare},   {"smyth", Suite::Smyth},
      {"plotkin", Suite::Plotkin}, {"repletion", Suite::Repletion}, {"transformers", Suite::Transformers},
      {"laws", Suite::Laws}};
  auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::All: return "all";
    case Suite::Hoare: return "hoare";
    case Suite::Smyth: return "smyth";
    case Suite::Plotkin: return "plotkin";
    case Suite::Repletion: return "repletion";
    case Suite::Transformers: return "transformers";
    case Suite::Laws: return "laws";
  }
  return "?";
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path)) {
      const auto ext = entry.path().extension();
      if (entry.is_regular_file() && (ext == ".poset" || ext == ".json")) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw Error(ErrorCode::ParseError, path.string() + " holds no poset files");
  } else {
    files.push_back(path);
  }
  std::vector<CorpusEntry> out;
  for (const auto& f : files) out.push_back(CorpusEntry{f.stem().string(), io::load_poset(f)});
  return out;
}

// ---------------------------------------------------------------------------
// Representations

Check hoare_representation(const std::string& name, const Poset& x) {
  return guarded(Builder(label("hoare-representation", name),
                         "nonempty down-sets C correspond to hom01(SigmaJoin^X, SigmaJoin) via U |-> [U meets C]"),
                 [&](Builder& b) {
                   const SetPowerdomain pd = hoare_pd(x);
                   const Repletion rep = repletion(x, Prototype::SigmaJoin);
                   Table f;
                   for (ElemSet c : pd.sets) {
                     Table phi;
                     for (const Table& u : rep.power.maps) phi.push_back(c.intersects(support(u, 1)) ? 1 : 0);
                     f.push_back(locate(rep.homs, phi, "image of " + to_string(c)));
                   }
                   if (auto why = iso_failure(pd.algebra, rep.homs.algebra, f)) b.fail(*why);
                   check_unit(b, pd.unit, rep.unit, f);
                 });
}

Check smyth_representation(const std::string& name, const Poset& x) {
  return guarded(Builder(label("smyth-representation", name),
                         "nonempty up-sets Q correspond to hom01(SigmaMeet^X, SigmaMeet) via U |-> [Q within U]"),
                 [&](Builder& b) {
                   const SetPowerdomain pd = smyth_pd(x);
                   const Repletion rep = repletion(x, Prototype::SigmaMeet);
                   Table f;
                   for (ElemSet q : pd.sets) {
                     Table phi;
                     for (const Table& u : rep.power.maps) phi.push_back(q.subset_of(support(u, 1)) ? 1 : 0);
                     f.push_back(locate(rep.homs, phi, "image of " + to_string(q)));
                   }
                   if (auto why = iso_failure(pd.algebra, rep.homs.algebra, f)) b.fail(*why);
                   check_unit(b, pd.unit, rep.unit, f);
                 });
}

Check formal_lens_representation(const std::string& name, const Poset& x) {
  return guarded(
      Builder(label("formal-lens-representation", name),
              "formal lenses (C,Q) correspond to hom01(A^X, A) via (U1,U2) |-> ([U1 meets C], [Q within U2])"),
      [&](Builder& b) {
        const FormalLensAlgebra fl = formal_lens_algebra(x);
        const Repletion rep = repletion(x, Prototype::A);
        const PredicateSpace space = predicate_space(x);
        Table f;
        for (const FormalLens& l : fl.lenses) {
          Table phi;
          for (const Table& u : rep.power.maps)
            phi.push_back(*aval::from_pair(l.c.intersects(support(u, 1)) ? 1 : 0, l.q.subset_of(support(u, 2)) ? 1 : 0));
          f.push_back(locate(rep.homs, phi, "image of " + to_string(l)));
        }
        if (auto why = iso_failure(fl.algebra, rep.homs.algebra, f)) b.fail(*why);
        check_unit(b, fl.unit, rep.unit, f);
        // The library's split and recovery agree with the explicit formula.
        for (Index i = 0; i < fl.lenses.size() && b.ok(); ++i) {
          const SplitResult s = split_phi(space, rep.homs.maps[f[i]]);
          if (to_formal_lens(space.opens, s.pair) != fl.lenses[i])
            b.fail("to_formal_lens does not recover " + to_string(fl.lenses[i]));
          if (pair_to_table(space, from_formal_lens(space.opens, fl.lenses[i])) != rep.homs.maps[f[i]])
            b.fail("from_formal_lens disagrees at " + to_string(fl.lenses[i]));
        }
      });
}

// ---------------------------------------------------------------------------
// Freeness

Check freeness(PowerdomainKind kind, const std::string& name, const Poset& x) {
  std::string_view title = kind == PowerdomainKind::Hoare   ? "hoare-freeness"
                           : kind == PowerdomainKind::Smyth ? "smyth-freeness"
                                                            : "plotkin-freeness";
  std::string property = kind == PowerdomainKind::Hoare
                             ? "every monotone X -> B extends uniquely over the Hoare powerdomain, B a (J)-semilattice"
                         : kind == PowerdomainKind::Smyth
                             ? "every monotone X -> B extends uniquely over the Smyth powerdomain, B an (M)-semilattice"
                             : "every monotone X -> B extends uniquely over the Plotkin powerdomain, B a semilattice";
  return guarded(Builder(label(title, name), std::move(property)), [&](Builder& b) {
    const SetPowerdomain pd = kind == PowerdomainKind::Hoare   ? hoare_pd(x)
                              : kind == PowerdomainKind::Smyth ? smyth_pd(x)
                                                               : plotkin_pd(x);
    const auto& family = semilattice_family(4);
    for (std::size_t k = 0; k < family.size() && b.ok(); ++k) {
      const Algebra& target = family[k];
      if (kind == PowerdomainKind::Hoare && !check_law(target, laws::join).holds) continue;
      if (kind == PowerdomainKind::Smyth && !check_law(target, laws::meet).holds) continue;
      const std::string where = "B#" + std::to_string(k) + " (size " + std::to_string(target.size()) + ")";

      std::map<Table, std::size_t> restrictions;
      for (const Table& h : hom_tables(pd.algebra, target, false)) {
        Table r(x.size());
        for (Index p = 0; p < x.size(); ++p) r[p] = h[pd.unit(p)];
        ++restrictions[r];
      }
      const auto maps = enumerate_monotone_tables(x, target.carrier());
      std::vector<Table> extensions;
      for (const Table& f : maps) {
        const Table ext = extension_table(kind, pd, target, MonotoneMap(x, target.carrier(), f));
        if (!is_homomorphism(pd.algebra, target, ext)) b.fail(where + ": extension of " + table_string(f) + " is no homomorphism");
        for (Index p = 0; p < x.size(); ++p)
          if (ext[pd.unit(p)] != f[p]) b.fail(where + ": extension of " + table_string(f) + " misses the unit");
        auto it = restrictions.find(f);
        const std::size_t count = it == restrictions.end() ? 0 : it->second;
        if (count != 1) b.fail(where + ": " + std::to_string(count) + " homomorphisms extend " + table_string(f));
        extensions.push_back(ext);
      }
      if (restrictions.size() != maps.size()) b.fail(where + ": a homomorphism restricts to a non-monotone map");
      for (std::size_t i = 0; i < maps.size() && b.ok(); ++i)
        for (std::size_t j = 0; j < maps.size(); ++j)
          if (pointwise_leq(target.carrier(), maps[i], maps[j]) &&
              !pointwise_leq(target.carrier(), extensions[i], extensions[j]))
            b.fail(where + ": extension is not monotone in " + table_string(maps[i]) + " <= " + table_string(maps[j]));
    }
  });
}

// ---------------------------------------------------------------------------
// Repletion

Check unique_extension(Prototype kind, const std::string& name, const Poset& x) {
  return guarded(Builder(label("unique-extension-" + to_string(kind), name),
                         "every monotone u: X -> R extends uniquely and monotonically along the unit of hom01(R^X, R)"),
                 [&](Builder& b) {
                   const ExtensionReport r = unique_extension_check(repletion(x, kind));
                   if (!r.ok()) b.fail(r.failures.front());
                 });
}

Check op_closure(Prototype kind, const std::string& name, const Poset& x) {
  return guarded(Builder(label("op-closure-" + to_string(kind), name),
                         "hom01(R^X, R) is closed under the pointwise operation and holds only homomorphisms"),
                 [&](Builder& b) {
                   const Algebra r = make_prototype(kind);
                   const Repletion rep = repletion(x, r);  // throws when not closed
                   const auto bot = rep.power.algebra.carrier().bottom();
                   const auto top = rep.power.algebra.carrier().top();
                   for (const Table& phi : rep.homs.maps) {
                     if (!is_homomorphism(rep.power.algebra, r, phi)) b.fail(table_string(phi) + " is no homomorphism");
                     if (phi[*bot] != *r.carrier().bottom() || phi[*top] != *r.carrier().top())
                       b.fail(table_string(phi) + " moves a bound");
                   }
                   if (!pointwise_op_closed(rep.power.algebra, r)) b.fail("hom(R^X, R) is not closed");
                 });
}

// ---------------------------------------------------------------------------
// Plotkin side

Check plotkin_identification(const std::string& name, const Poset& x) {
  return guarded(
      Builder(label("plotkin-identification", name),
              "subalgebra generated by the unit = pairs passing (H1')/(H2') = lens image, with Egli-Milner order "
              "and convex-hull operation transported exactly"),
      [&](Builder& b) {
        const PredicateSpace space = predicate_space(x);
        const Repletion rep = repletion(x, Prototype::A);
        const SetPowerdomain pd = plotkin_pd(x);

        std::vector<Index> generators = rep.unit.table();
        const Subalgebra gen = generated_subalgebra(rep.homs.algebra, generators);

        std::vector<Index> h_pairs;
        for (Index k = 0; k < rep.homs.maps.size(); ++k)
          if (check_H(space.opens, split_phi(space, rep.homs.maps[k]).pair).both()) h_pairs.push_back(k);

        Table image;
        for (ElemSet l : pd.sets) {
          const Table phi = pair_to_table(space, lens_to_valuation(space.opens, l));
          Table direct;
          for (const Table& u : space.a.maps)
            direct.push_back(*aval::from_pair(l.intersects(support(u, 1)) ? 1 : 0, l.subset_of(support(u, 2)) ? 1 : 0));
          if (direct != phi) b.fail("lens_to_valuation disagrees with the direct formula at " + to_string(l));
          image.push_back(locate(rep.homs, phi, "valuation of " + to_string(l)));
        }
        std::vector<Index> image_sorted = image;
        std::sort(image_sorted.begin(), image_sorted.end());

        if (gen.members != h_pairs)
          b.fail("generated subalgebra has " + std::to_string(gen.members.size()) + " members, H-pairs " +
                 std::to_string(h_pairs.size()));
        if (h_pairs != image_sorted)
          b.fail("H-pairs (" + std::to_string(h_pairs.size()) + ") differ from the lens image (" +
                 std::to_string(image_sorted.size()) + ")");
        const Poset& order = pd.algebra.carrier();
        for (Index i = 0; i < pd.sets.size(); ++i) {
          for (Index j = 0; j < pd.sets.size(); ++j) {
            const bool em = em_leq(x, pd.sets[i], pd.sets[j]);
            if (em != order.leq(i, j)) b.fail("powerdomain order is not Egli-Milner at " + to_string(pd.sets[i]));
            if (em != rep.homs.algebra.carrier().leq(image[i], image[j]))
              b.fail("transported order differs from Egli-Milner at " + to_string(pd.sets[i]) + ", " +
                     to_string(pd.sets[j]));
            if (image[pd.algebra.op(i, j)] != rep.homs.algebra.op(image[i], image[j]))
              b.fail("convex hull of " + to_string(pd.sets[i]) + " and " + to_string(pd.sets[j]) +
                     " differs from the transported operation");
          }
        }
        check_unit(b, pd.unit, rep.unit, image);
      });
}

Check lens_bridges(const std::string& name, const Poset& x) {
  return guarded(Builder(label("lens-bridges", name),
                         "lenses and H-pairs correspond one-to-one with matching orders; minimal formal lens is "
                         "(down L, up L)"),
                 [&](Builder& b) {
                   const OpenSets opens = open_sets(x);
                   const auto lenses = enumerate_convex_sets(x, true);
                   std::vector<AValuationPair> pairs;
                   for (ElemSet l : lenses) {
                     const AValuationPair p = lens_to_valuation(opens, l);
                     if (valuation_to_lens(opens, p) != l) b.fail("round trip moves " + to_string(l));
                     const FormalLens fl = to_formal_lens(opens, p);
                     if (fl.c != down_closure(x, l) || fl.q != up_closure(x, l))
                       b.fail("formal lens of " + to_string(l) + " is " + to_string(fl));
                     if (!check_H(opens, p).both()) b.fail("valuation of " + to_string(l) + " fails an H-condition");
                     pairs.push_back(p);
                   }
                   for (std::size_t i = 0; i < lenses.size(); ++i)
                     for (std::size_t j = 0; j < lenses.size(); ++j)
                       if (em_leq(x, lenses[i], lenses[j]) != pair_leq(pairs[i], pairs[j]))
                         b.fail("orders disagree at " + to_string(lenses[i]) + ", " + to_string(lenses[j]));

                   std::size_t passing = 0;
                   for (const FormalLens& fl : formal_lens_algebra(x).lenses) {
                     const AValuationPair p = from_formal_lens(opens, fl);
                     if (check_H(opens, p).both()) {
                       ++passing;
                       continue;
                     }
                     try {
                       valuation_to_lens(opens, p);
                       b.fail("valuation_to_lens accepted " + to_string(fl));
                     } catch (const Error& e) {
                       if (e.code() != ErrorCode::HConditionViolated) throw;
                     }
                   }
                   if (passing != lenses.size())
                     b.fail(std::to_string(passing) + " formal lenses pass the H-conditions, " +
                            std::to_string(lenses.size()) + " lenses");
                 });
}

Check h_lemmas(const std::string& name, const Poset& x) {
  return guarded(
      Builder(label("h-lemmas", name),
              "(H1') gives Q = up(C meet Q), (H2') gives C = down(C meet Q), each alone gives phi1 >= phi2; "
              "normalized formal lenses pass both and are quasilenses"),
      [&](Builder& b) {
        const OpenSets opens = open_sets(x);
        for (const FormalLens& fl : formal_lens_algebra(x).lenses) {
          const HCheck h = check_H(opens, from_formal_lens(opens, fl));
          const ElemSet core = fl.c & fl.q;
          if (h.first && fl.q != up_closure(x, core)) b.fail("(H1') holds but Q != up(C meet Q) at " + to_string(fl));
          if (h.second && fl.c != down_closure(x, core))
            b.fail("(H2') holds but C != down(C meet Q) at " + to_string(fl));
          const FormalLens n = normalize(x, fl);
          if (!check_H(opens, from_formal_lens(opens, n)).both()) b.fail("normalized " + to_string(n) + " fails H");
          if (!is_quasilens(x, n) || !is_quasilens_all_opens(x, n)) b.fail(to_string(n) + " is not a quasilens");
          if (is_quasilens(x, fl) != is_quasilens_all_opens(x, fl))
            b.fail("quasilens tests disagree at " + to_string(fl));
        }
        // Raw pairs: any bounded join-hom with any bounded meet-hom, no dominance assumed.
        const Repletion hoare = repletion(x, Prototype::SigmaJoin);
        const Repletion smyth = repletion(x, Prototype::SigmaMeet);
        for (const Table& phi1 : hoare.homs.maps) {
          for (const Table& phi2 : smyth.homs.maps) {
            const AValuationPair p = as_pair(phi1, phi2);
            const HCheck h = check_H(opens, p);
            bool dominates = true;
            for (std::size_t i = 0; i < phi1.size(); ++i) dominates = dominates && phi1[i] >= phi2[i];
            if ((h.first || h.second) && !dominates)
              b.fail("an H-condition holds without phi1 >= phi2 for " + table_string(phi1) + ", " + table_string(phi2));
          }
        }
      });
}

Check valuation_conversions(const std::string& name, const Poset& x) {
  return guarded(
      Builder(label("valuation-conversions", name),
              "Heckmann valuations and H-pairs are inverse via projections, preserving the operation; "
              "delta(F) is the choice of delta(x) over F"),
      [&](Builder& b) {
        const PredicateSpace space = predicate_space(x);
        const OpenSets& opens = space.opens;
        const Repletion rep = repletion(x, Prototype::A);
        const auto vals = all_heckmann_valuations(opens);

        std::vector<AValuationPair> converted;
        for (const HeckmannValuation& alpha : vals) {
          const AValuationPair p = convert(opens, alpha);
          if (!(convert_back(opens, p) == alpha)) b.fail("round trip moves " + table_string(alpha.table));
          const Table bar = heckmann_to_table(space, alpha);
          if (bar != pair_to_table(space, p)) b.fail("extension to pairs of opens disagrees at " + table_string(alpha.table));
          if (!rep.homs.index_of(bar)) b.fail(table_string(alpha.table) + " extends to no homomorphism");
          converted.push_back(p);
        }
        std::vector<AValuationPair> h_pairs;
        for (const Table& phi : rep.homs.maps) {
          AValuationPair p = split_phi(space, phi).pair;
          if (check_H(opens, p).both()) h_pairs.push_back(std::move(p));
        }
        std::sort(converted.begin(), converted.end());
        std::sort(h_pairs.begin(), h_pairs.end());
        if (converted != h_pairs)
          b.fail(std::to_string(vals.size()) + " Heckmann valuations against " + std::to_string(h_pairs.size()) +
                 " H-pairs");
        for (const HeckmannValuation& a1 : vals)
          for (const HeckmannValuation& a2 : vals)
            if (convert(opens, choice(a1, a2)) != choice(convert(opens, a1), convert(opens, a2)))
              b.fail("choice not preserved at " + table_string(a1.table) + ", " + table_string(a2.table));

        for (Index p = 0; p < x.size(); ++p)
          if (convert(opens, delta(opens, p)) != split_phi(space, rep.homs.maps[rep.unit(p)]).pair)
            b.fail("delta(" + std::to_string(p) + ") is not the evaluation");
        const std::uint64_t limit = std::uint64_t{1} << x.size();
        for (std::uint64_t bits = 1; bits < limit; ++bits) {
          const ElemSet f(bits);
          const auto members = f.members();
          HeckmannValuation folded = delta(opens, members.front());
          for (std::size_t i = 1; i < members.size(); ++i) folded = choice(folded, delta(opens, members[i]));
          const HeckmannValuation direct = delta_F(opens, f);
          if (!(direct == folded)) b.fail("delta_F(" + to_string(f) + ") is not the choice of point deltas");
          if (!check_H_heckmann(opens, direct).both()) b.fail("delta_F(" + to_string(f) + ") fails H");
        }
      });
}

Check split_reconstruction(const std::string& name, const Poset& x) {
  return guarded(Builder(label("split-reconstruction", name),
                         "every phi in hom01(A^X, A) is (phi1(U1), phi2(U2)) with phi1 >= phi2"),
                 [&](Builder& b) {
                   const PredicateSpace space = predicate_space(x);
                   const Repletion rep = repletion(x, Prototype::A);
                   for (const Table& phi : rep.homs.maps) {
                     const SplitResult s = split_phi(space, phi);
                     if (!s.reconstructs) b.fail(table_string(phi) + " does not reconstruct");
                     if (!s.dominates) b.fail(table_string(phi) + " has phi1 < phi2");
                     if (!is_pair_shaped(space.opens, s.pair)) b.fail(table_string(phi) + " splits into non-homomorphisms");
                     if (from_formal_lens(space.opens, to_formal_lens(space.opens, s.pair)) != s.pair)
                       b.fail(table_string(phi) + " does not survive the formal-lens round trip");
                   }
                   for (Index p = 0; p < x.size(); ++p) {
                     const SplitResult s = split_phi(space, rep.homs.maps[rep.unit(p)]);
                     for (std::size_t i = 0; i < space.opens.size(); ++i) {
                       const std::uint8_t in = space.opens.sets[i].contains(p) ? 1 : 0;
                       if (s.pair.phi1[i] != in || s.pair.phi2[i] != in)
                         b.fail("evaluation at " + std::to_string(p) + " splits wrongly");
                     }
                   }
                 });
}

Check phi_decomposition(const std::string& name, const Poset& x) {
  return guarded(
      Builder(label("phi-decomposition", name),
              "every homomorphism from hom01(A^X, A) to A factors uniquely through the Hoare and Smyth repletions"),
      [&](Builder& b) {
        const ErraticSetup setup = erratic_setup(x);
        const auto all = hom_tables(setup.a.homs.algebra, setup.a.prototype, false);
        if (all.size() != setup.a.power.maps.size())
          b.fail(std::to_string(all.size()) + " homomorphisms for " + std::to_string(setup.a.power.maps.size()) +
                 " monotone maps");
        for (const Table& big_phi : all) {
          const PhiDecomposition d = decompose_Phi(setup, big_phi);
          if (!d.ok())
            b.fail(table_string(big_phi) + " decomposes with " + std::to_string(d.h_candidates) + "/" +
                   std::to_string(d.s_candidates) + " candidates");
        }
        // Evaluation at u: the components extend the projections of u.
        for (std::size_t u = 0; u < setup.a.power.maps.size(); ++u) {
          Table big_phi;
          for (const Table& phi : setup.a.homs.maps) big_phi.push_back(phi[u]);
          const PhiDecomposition d = decompose_Phi(setup, big_phi);
          const Table& um = setup.a.power.maps[u];
          for (Index p = 0; p < x.size(); ++p) {
            if (d.phi_h[setup.hoare.unit(p)] != aval::first(um[p]) || d.phi_s[setup.smyth.unit(p)] != aval::second(um[p]))
              b.fail("components of evaluation at " + table_string(um) + " miss the projections at " + std::to_string(p));
          }
        }
      });
}

// ---------------------------------------------------------------------------
// Laws

Check laws(const std::vector<CorpusEntry>& corpus) {
  return guarded(
      Builder("laws", "prototypes are semilattices; SigmaJoin satisfies (J), SigmaMeet (M), A neither; "
                      "power algebras inherit every law the prototype satisfies"),
      [&](Builder& b) {
        const std::vector<std::string_view> semilattice{laws::idempotency, laws::commutativity, laws::associativity};
        for (Prototype p : {Prototype::SigmaJoin, Prototype::SigmaMeet, Prototype::A}) {
          const Algebra r = make_prototype(p);
          for (auto law : semilattice)
            if (!check_law(r, law).holds) b.fail(to_string(p) + " fails " + std::string(law));
        }
        if (!check_law(make_prototype(Prototype::SigmaJoin), laws::join).holds) b.fail("sigma-join fails (J)");
        if (!check_law(make_prototype(Prototype::SigmaMeet), laws::meet).holds) b.fail("sigma-meet fails (M)");
        for (auto law : {laws::join, laws::meet}) {
          const LawResult res = check_law(make_prototype(Prototype::A), law);
          if (res.holds || !res.witness) b.fail("A satisfies " + std::string(law) + " or lacks a witness");
        }
        const std::vector<std::string_view> all_laws{laws::idempotency, laws::commutativity, laws::associativity,
                                                     laws::join, laws::meet};
        for (const CorpusEntry& entry : corpus) {
          for (Prototype p : {Prototype::SigmaJoin, Prototype::SigmaMeet, Prototype::A}) {
            const Algebra r = make_prototype(p);
            const FunctionAlgebra power = power_algebra(r, entry.poset);
            for (auto law : all_laws)
              if (check_law(r, law).holds && !check_law(power.algebra, law).holds)
                b.fail(to_string(p) + "^" + entry.name + " loses " + std::string(law));
          }
        }
      });
}

// ---------------------------------------------------------------------------
// Transformers

Check transformers(Prototype kind, const std::string& x_name, const Poset& x, const std::string& y_name,
                   const Poset& y) {
  std::string property =
      kind == Prototype::A
          ? "transpose is an order isomorphism; every transformer splits as s1 >= s2; Plotkin-flagged ones "
            "match monotone maps into the Plotkin powerdomain"
          : "transpose is an order isomorphism; transformers match monotone maps into the " +
                std::string(kind == Prototype::SigmaJoin ? "Hoare" : "Smyth") + " powerdomain";
  return guarded(
      Builder("transformers-" + to_string(kind) + "[" + x_name + "," + y_name + "]", std::move(property)),
      [&](Builder& b) {
        const TransformerSpace space = transformer_space(x, y, kind);
        const auto states = enumerate_state_transformers(space);
        const auto preds = enumerate_predicate_transformers(space);
        if (states.size() != preds.size())
          b.fail(std::to_string(states.size()) + " state transformers against " + std::to_string(preds.size()) +
                 " predicate transformers");

        const auto py_bot = *space.power_y.algebra.carrier().bottom(), py_top = *space.power_y.algebra.carrier().top();
        const auto px_bot = *space.power_x.algebra.carrier().bottom(), px_top = *space.power_x.algebra.carrier().top();
        std::vector<PredicateTransformer> images;
        std::vector<bool> hit(preds.size(), false);
        for (const StateTransformer& t : states) {
          const PredicateTransformer s = transpose(space, t);
          if (!is_homomorphism(space.power_y.algebra, space.power_x.algebra, s.table) || s.table[py_bot] != px_bot ||
              s.table[py_top] != px_top)
            b.fail("transpose of " + table_string(t.table) + " is no bounded homomorphism");
          if (!(untranspose(space, s) == t)) b.fail("double transpose moves " + table_string(t.table));
          auto it = std::lower_bound(preds.begin(), preds.end(), s, [](const auto& l, const auto& r) {
            return canonical_less(l.table, r.table);
          });
          if (it == preds.end() || !(*it == s)) {
            b.fail("transpose of " + table_string(t.table) + " was not enumerated");
          } else {
            const auto k = static_cast<std::size_t>(it - preds.begin());
            if (hit[k]) b.fail("transpose is not injective");
            hit[k] = true;
          }
          images.push_back(s);
        }
        if (!b.ok()) return;

        const Poset& rep_order = space.rep_y.homs.algebra.carrier();
        const Poset& px_order = space.power_x.algebra.carrier();
        auto state_leq = [&](const StateTransformer& a, const StateTransformer& c) {
          for (std::size_t p = 0; p < a.table.size(); ++p)
            if (!rep_order.leq(a.table[p], c.table[p])) return false;
          return true;
        };
        auto pred_leq = [&](const PredicateTransformer& a, const PredicateTransformer& c) {
          for (std::size_t u = 0; u < a.table.size(); ++u)
            if (!px_order.leq(a.table[u], c.table[u])) return false;
          return true;
        };
        constexpr std::size_t kQuadratic = 3000;
        if (states.size() <= kQuadratic) {
          for (std::size_t i = 0; i < states.size() && b.ok(); ++i)
            for (std::size_t j = 0; j < states.size(); ++j)
              if (state_leq(states[i], states[j]) != pred_leq(images[i], images[j]))
                b.fail("transpose breaks the order at " + table_string(states[i].table) + ", " +
                       table_string(states[j].table));
        } else {
          // Both orders are then restrictions of the pointwise order on X x R^Y -> R,
          // which transpose preserves entry by entry.
          for (Index i = 0; i < rep_order.size(); ++i)
            for (Index j = 0; j < rep_order.size(); ++j)
              if (rep_order.leq(i, j) != pointwise_leq(space.r.carrier(), space.rep_y.homs.maps[i], space.rep_y.homs.maps[j]))
                b.fail("repletion order is not pointwise");
          for (Index i = 0; i < px_order.size(); ++i)
            for (Index j = 0; j < px_order.size(); ++j)
              if (px_order.leq(i, j) != pointwise_leq(space.r.carrier(), space.power_x.maps[i], space.power_x.maps[j]))
                b.fail("predicate order is not pointwise");
        }

        // Flagged transformers against monotone maps into the matching powerdomain.
        const SetPowerdomain pd = matching_powerdomain(space);
        std::vector<std::size_t> flagged;
        for (std::size_t i = 0; i < images.size(); ++i) {
          const PredicateTransformer& s = images[i];
          const Classification c = classify(space, s);
          bool flag = false;
          switch (kind) {
            case Prototype::SigmaJoin: flag = c.angelic; break;
            case Prototype::SigmaMeet: flag = c.demonic; break;
            case Prototype::A: {
              const ErraticDecomposition d = decompose_erratic(space, s);
              if (!d.ok()) b.fail(table_string(s.table) + " does not split as s1 >= s2");
              if (c.plotkin && !c.erratic) b.fail(table_string(s.table) + " is Plotkin but not erratic");
              if (c.plotkin) {
                // Components satisfy the paired conditions at every point.
                const OpenSets& oy = space.preds_y.opens;
                const OpenSets& ox = space.preds_x.opens;
                for (Index p = 0; p < x.size(); ++p) {
                  AValuationPair pair;
                  for (std::size_t u = 0; u < oy.size(); ++u) {
                    pair.phi1.push_back(ox.sets[d.s1[u]].contains(p) ? 1 : 0);
                    pair.phi2.push_back(ox.sets[d.s2[u]].contains(p) ? 1 : 0);
                  }
                  if (!check_H(oy, pair).both()) b.fail(table_string(s.table) + " components fail H at " + std::to_string(p));
                }
              }
              flag = c.plotkin;
              break;
            }
          }
          if (flag) flagged.push_back(i);
        }
        std::vector<Table> maps;
        for (std::size_t i : flagged) maps.push_back(powerdomain_map(space, pd, states[i]));
        std::vector<Table> sorted = maps;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) b.fail("two transformers share a map");
        std::vector<Table> expected = enumerate_monotone_tables(x, pd.algebra.carrier());
        std::sort(expected.begin(), expected.end());
        if (sorted != expected)
          b.fail(std::to_string(flagged.size()) + " flagged transformers against " + std::to_string(expected.size()) +
                 " monotone maps");
        for (std::size_t i = 0; i < flagged.size() && b.ok(); ++i)
          for (std::size_t j = 0; j < flagged.size(); ++j)
            if (pred_leq(images[flagged[i]], images[flagged[j]]) != pointwise_leq(pd.algebra.carrier(), maps[i], maps[j]))
              b.fail("order disagrees with the powerdomain maps");
      });
}

Check plotkin_of_two_chain() {
  return guarded(Builder("plotkin-of-two-chain", "the Plotkin powerdomain of the two-chain is A"), [&](Builder& b) {
    const SetPowerdomain pd = plotkin_pd(Poset::chain(2));
    const Algebra a = make_prototype(Prototype::A);
    if (pd.algebra.size() != a.size()) {
      b.fail(std::to_string(pd.algebra.size()) + " elements");
      return;
    }
    Table f(a.size());
    std::iota(f.begin(), f.end(), 0);
    do {
      if (!iso_failure(pd.algebra, a, f)) return;
    } while (std::next_permutation(f.begin(), f.end()));
    b.fail("no isomorphism onto A");
  });
}

Check flat_counts() {
  return guarded(Builder("flat-counts", "the two-point antichain has 3 lenses and 7 formal lenses; its A-repletion "
                                        "has 7 elements against 3 in the Plotkin powerdomain"),
                 [&](Builder& b) {
                   const Poset d2 = Poset::antichain(2);
                   const std::size_t lenses = plotkin_pd(d2).sets.size();
                   const std::size_t formal = formal_lens_algebra(d2).lenses.size();
                   const std::size_t replete = repletion(d2, Prototype::A).homs.maps.size();
                   if (lenses != 3) b.fail(std::to_string(lenses) + " lenses");
                   if (formal != 7) b.fail(std::to_string(formal) + " formal lenses");
                   if (replete != 7) b.fail(std::to_string(replete) + " elements in the repletion");
                 });
}

namespace {

using Task = std::pair<std::string, std::function<Check()>>;

void add_suite(Suite suite, const std::vector<CorpusEntry>& corpus, std::vector<Task>& tasks) {
  auto each = [&](std::string key, auto fn) {
    for (const CorpusEntry& e : corpus) tasks.emplace_back(key + "/" + e.name, [fn, e] { return fn(e.name, e.poset); });
  };
  switch (suite) {
    case Suite::Hoare:
      each("hoare-rep", hoare_representation);
      each("hoare-free", [](const std::string& n, const Poset& p) { return freeness(PowerdomainKind::Hoare, n, p); });
      each("ext-j", [](const std::string& n, const Poset& p) { return unique_extension(Prototype::SigmaJoin, n, p); });
      break;
    case Suite::Smyth:
      each("smyth-rep", smyth_representation);
      each("smyth-free", [](const std::string& n, const Poset& p) { return freeness(PowerdomainKind::Smyth, n, p); });
      each("ext-m", [](const std::string& n, const Poset& p) { return unique_extension(Prototype::SigmaMeet, n, p); });
      break;
    case Suite::Plotkin:
      tasks.emplace_back("flat", [] { return flat_counts(); });
      tasks.emplace_back("two-chain", [] { return plotkin_of_two_chain(); });
      each("formal-rep", formal_lens_representation);
      each("plotkin-id", plotkin_identification);
      each("bridges", lens_bridges);
      each("h-lemmas", h_lemmas);
      each("conversions", valuation_conversions);
      each("plotkin-free", [](const std::string& n, const Poset& p) { return freeness(PowerdomainKind::Plotkin, n, p); });
      break;
    case Suite::Repletion:
      for (Prototype k : {Prototype::SigmaJoin, Prototype::SigmaMeet, Prototype::A}) {
        const std::string tag = k == Prototype::SigmaJoin ? "j" : k == Prototype::SigmaMeet ? "m" : "a";
        each("ext-" + tag, [k](const std::string& n, const Poset& p) { return unique_extension(k, n, p); });
        each("closure-" + tag, [k](const std::string& n, const Poset& p) { return op_closure(k, n, p); });
      }
      each("split", split_reconstruction);
      each("phi", phi_decomposition);
      break;
    case Suite::Transformers:
      for (Prototype k : {Prototype::SigmaJoin, Prototype::SigmaMeet, Prototype::A})
        for (const CorpusEntry& ex : corpus)
          for (const CorpusEntry& ey : corpus) {
            if (ex.poset.size() > 3 || ey.poset.size() > 3) continue;
            tasks.emplace_back("tr-" + to_string(k) + "/" + ex.name + "/" + ey.name,
                               [k, ex, ey] { return transformers(k, ex.name, ex.poset, ey.name, ey.poset); });
          }
      break;
    case Suite::Laws:
      tasks.emplace_back("laws", [corpus] { return laws(corpus); });
      break;
    case Suite::All:
      for (Suite s : {Suite::Laws, Suite::Hoare, Suite::Smyth, Suite::Plotkin, Suite::Repletion, Suite::Transformers})
        add_suite(s, corpus, tasks);
      break;
  }
}

}  // namespace

Report run_suite(Suite suite, const std::vector<CorpusEntry>& corpus) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Task> tasks;
  add_suite(suite, corpus, tasks);
  Report report;
  std::set<std::string> seen;
  for (auto& [key, task] : tasks) {
    if (!seen.insert(key).second) continue;
    report.checks.push_back(task());
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

io::json report_to_json(const Report& report) {
  io::json checks = io::json::array();
  for (const Check& c : report.checks) {
    io::json entry{{"name", c.name}, {"property", c.property}, {"pass", c.passed}};
    if (!c.passed) entry["counterexample"] = c.counterexample;
    checks.push_back(std::move(entry));
  }
  return io::json{{"checks", checks}, {"total", report.checks.size()}, {"failed", report.failures()}};
}

std::string report_to_text(const Report& report, bool failures_only) {
  std::ostringstream out;
  for (const Check& c : report.checks) {
    if (failures_only && c.passed) continue;
    out << (c.passed ? "PASS  " : "FAIL  ") << c.name << "\n";
    if (!c.passed) out << "      property: " << c.property << "\n      counterexample: " << c.counterexample << "\n";
  }
  out << report.checks.size() << " checks, " << report.failures() << " failed\n";
  return out.str();
}

}  // namespace replete::verify
