#include <doctest.h>

#include <cmath>
#include <set>

#include "replete/transformer.hpp"
#include "support.hpp"

using namespace replete;
using namespace testing;

namespace {

struct Pair {
  std::string name;
  Poset x;
  Poset y;
};

std::vector<Pair> pairs() {
  std::vector<Pair> out;
  const auto c = corpus();
  for (const auto& [xn, x] : c)
    for (const auto& [yn, y] : c)
      if (x.size() <= 2 && y.size() <= 3 && (x.size() + y.size()) <= 5) out.push_back({xn + "->" + yn, x, y});
  return out;
}

constexpr Prototype kKinds[] = {Prototype::SigmaJoin, Prototype::SigmaMeet, Prototype::A};

}  // namespace

TEST_CASE("state and predicate transformers correspond by transposition") {
  for (const auto& [name, x, y] : pairs())
    for (Prototype k : kKinds) {
      CAPTURE(name);
      CAPTURE(to_string(k));
      const TransformerSpace space = transformer_space(x, y, k);
      const auto states = enumerate_state_transformers(space);
      const auto preds = enumerate_predicate_transformers(space);
      CHECK(states.size() == scan_monotone(x, space.rep_y.homs.algebra.carrier()).size());
      REQUIRE(states.size() == preds.size());

      std::set<Table> images;
      for (const StateTransformer& t : states) {
        const PredicateTransformer s = transpose(space, t);
        for (Index u = 0; u < space.power_y.maps.size(); ++u)
          for (Index p = 0; p < x.size(); ++p)
            CHECK(space.power_x.maps[s.table[u]][p] == space.rep_y.homs.maps[t.table[p]][u]);
        CHECK(untranspose(space, s) == t);
        images.insert(s.table);
      }
      std::set<Table> expected;
      for (const PredicateTransformer& s : preds) expected.insert(s.table);
      CHECK(images == expected);
    }
}

TEST_CASE("predicate transformers are the bounded homomorphisms") {
  for (const auto& [name, x, y] : pairs()) {
    if (y.size() > 2) continue;
    for (Prototype k : kKinds) {
      CAPTURE(name);
      const TransformerSpace space = transformer_space(x, y, k);
      const Algebra& src = space.power_y.algebra;
      const Algebra& dst = space.power_x.algebra;
      if (std::pow(double(dst.size()), double(src.size())) > 2e6) continue;
      const auto brute = scan_tables(src.size(), dst.size(), [&](const Table& h) {
        if (h[*src.carrier().bottom()] != *dst.carrier().bottom()) return false;
        if (h[*src.carrier().top()] != *dst.carrier().top()) return false;
        for (Index a = 0; a < src.size(); ++a)
          for (Index b = 0; b < src.size(); ++b)
            if (h[src.op(a, b)] != dst.op(h[a], h[b]) || (src.carrier().leq(a, b) && !dst.carrier().leq(h[a], h[b])))
              return false;
        return true;
      });
      std::vector<Table> got;
      for (const auto& s : enumerate_predicate_transformers(space)) got.push_back(s.table);
      CHECK(got == brute);
    }
  }
}

TEST_CASE("classification") {
  for (const auto& [name, x, y] : pairs()) {
    CAPTURE(name);
    const TransformerSpace sj = transformer_space(x, y, Prototype::SigmaJoin);
    for (const auto& s : enumerate_predicate_transformers(sj)) {
      const Classification c = classify(sj, s);
      CHECK(c.angelic);
      CHECK_FALSE(c.erratic);
    }
    const TransformerSpace sm = transformer_space(x, y, Prototype::SigmaMeet);
    for (const auto& s : enumerate_predicate_transformers(sm)) CHECK(classify(sm, s).demonic);

    const TransformerSpace a = transformer_space(x, y, Prototype::A);
    std::size_t plotkin = 0;
    for (const auto& s : enumerate_predicate_transformers(a)) {
      const Classification c = classify(a, s);
      CHECK(c.erratic);
      CHECK_FALSE(c.angelic);
      const ErraticDecomposition d = decompose_erratic(a, s);
      CHECK(d.ok());
      // s(U₁, U₂) = (s₁(U₁), s₂(U₂)) read off the three-valued predicates.
      for (Index k = 0; k < a.preds_y.coords.size(); ++k) {
        const auto [u1, u2] = a.preds_y.coords[k];
        const Table& image = a.power_x.maps[s.table[k]];
        for (Index p = 0; p < x.size(); ++p) {
          CHECK(aval::first(image[p]) == a.preds_x.opens.sets[d.s1[u1]].contains(p));
          CHECK(aval::second(image[p]) == a.preds_x.opens.sets[d.s2[u2]].contains(p));
        }
      }
      plotkin += c.plotkin;
    }
    CHECK(plotkin == scan_monotone(x, plotkin_pd(y).algebra.carrier()).size());
  }
}

TEST_CASE("the two-point antichain over A") {
  const TransformerSpace a = transformer_space(discrete(2), discrete(2), Prototype::A);
  const auto preds = enumerate_predicate_transformers(a);
  CHECK(preds.size() == 49);
  std::size_t erratic = 0, plotkin = 0;
  for (const auto& s : preds) {
    const Classification c = classify(a, s);
    erratic += c.erratic;
    plotkin += c.plotkin;
  }
  CHECK(erratic == 49);
  CHECK(plotkin == 9);
  CHECK(Classification{}.describe() == "none");
  CHECK(Classification{false, false, true, true}.describe() == "erratic,plotkin");
}

TEST_CASE("state transformers as maps into powerdomains") {
  for (const auto& [name, x, y] : pairs())
    for (Prototype k : kKinds) {
      CAPTURE(name);
      const TransformerSpace space = transformer_space(x, y, k);
      const SetPowerdomain pd = matching_powerdomain(space);
      std::set<Table> seen;
      for (const StateTransformer& t : enumerate_state_transformers(space)) {
        if (k == Prototype::A && !classify(space, transpose(space, t)).plotkin) {
          CHECK_THROWS_AS(powerdomain_map(space, pd, t), Error);
          continue;
        }
        const Table m = powerdomain_map(space, pd, t);
        CHECK(is_monotone(x, pd.algebra.carrier(), m));
        seen.insert(m);
      }
      CHECK(seen.size() == scan_monotone(x, pd.algebra.carrier()).size());
    }
}

TEST_CASE("decomposition needs the three-chain") {
  const TransformerSpace s = transformer_space(sigma(), sigma(), Prototype::SigmaJoin);
  try {
    decompose_erratic(s, enumerate_predicate_transformers(s).front());
    FAIL("expected WrongPrototype");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WrongPrototype);
  }
}
