#include <doctest.h>

#include <functional>

#include "support.hpp"

using namespace replete;
using namespace testing;

namespace {

std::vector<ElemSet> scan(const Poset& p, bool nonempty, bool (*pred)(const Poset&, ElemSet)) {
  std::vector<ElemSet> out;
  for (ElemSet s : all_subsets(p))
    if ((!nonempty || !s.empty()) && pred(p, s)) out.push_back(s);
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvariantViolation;
}

}  // namespace

TEST_CASE("validation accepts orders and names the broken axiom") {
  auto d2 = Poset::from_relation({{true, false}, {false, true}});
  CHECK(d2.size() == 2);
  CHECK_FALSE(d2.comparable(0, 1));

  auto s = Poset::from_relation({{true, true}, {false, true}});
  CHECK(s == sigma());

  CHECK(code_of([] { Poset::from_relation({{true, true}, {true, true}}); }) == ErrorCode::AntisymmetryViolation);
  CHECK(code_of([] { Poset::from_relation({{false, false}, {false, true}}); }) == ErrorCode::ReflexivityViolation);
  CHECK(code_of([] {
          Poset::from_relation({{true, true, false}, {false, true, true}, {false, false, true}});
        }) == ErrorCode::TransitivityViolation);
  CHECK(code_of([] { Poset::from_relation({}); }) == ErrorCode::EmptyCarrier);
  CHECK(code_of([] { Poset::from_generators(2, {{0, 1}, {1, 0}}); }) == ErrorCode::AntisymmetryViolation);
}

TEST_CASE("closures on small posets") {
  CHECK(down_closure(sigma(), ElemSet::of({1})) == ElemSet::of({0, 1}));
  CHECK(up_closure(sigma(), ElemSet::of({0})) == ElemSet::of({0, 1}));
  CHECK(down_closure(discrete(2), ElemSet::of({0})) == ElemSet::of({0}));
}

TEST_CASE("closure laws hold for every subset of every corpus poset") {
  for (const auto& [name, p] : corpus()) {
    CAPTURE(name);
    for (ElemSet s : all_subsets(p)) {
      const ElemSet d = down_closure(p, s), u = up_closure(p, s);
      CHECK(s.subset_of(d));
      CHECK(s.subset_of(u));
      CHECK(down_closure(p, d) == d);
      CHECK(up_closure(p, u) == u);
      CHECK(s.subset_of(down_closure(p, up_closure(p, s))));
      CHECK(scan_down_closed(p, d));
      CHECK(scan_up_closed(p, u));
      // Complements of open sets are closed and conversely.
      const ElemSet comp = ElemSet::full(p.size()) - s;
      CHECK(scan_up_closed(p, s) == scan_down_closed(p, comp));
      CHECK(is_up_set(p, s) == scan_up_closed(p, s));
      CHECK(is_down_set(p, s) == scan_down_closed(p, s));
      CHECK(is_convex(p, s) == scan_convex(p, s));
      for (ElemSet t : all_subsets(p)) {
        if (!s.subset_of(t)) continue;
        CHECK(d.subset_of(down_closure(p, t)));
        CHECK(u.subset_of(up_closure(p, t)));
      }
    }
  }
}

TEST_CASE("set enumerations agree with subset scans") {
  CHECK(enumerate_down_sets(discrete(2), true) ==
        std::vector<ElemSet>{ElemSet::of({0}), ElemSet::of({1}), ElemSet::of({0, 1})});
  CHECK(enumerate_up_sets(sigma(), true) == std::vector<ElemSet>{ElemSet::of({1}), ElemSet::of({0, 1})});
  CHECK(enumerate_convex_sets(sigma(), true) ==
        std::vector<ElemSet>{ElemSet::of({0}), ElemSet::of({1}), ElemSet::of({0, 1})});

  for (const auto& [name, p] : corpus()) {
    CAPTURE(name);
    for (bool nonempty : {false, true}) {
      CHECK(enumerate_down_sets(p, nonempty) == scan(p, nonempty, scan_down_closed));
      CHECK(enumerate_up_sets(p, nonempty) == scan(p, nonempty, scan_up_closed));
      CHECK(enumerate_convex_sets(p, nonempty) == scan(p, nonempty, scan_convex));
    }
    CHECK(count_open_sets(p) == scan(p, false, scan_up_closed).size());
  }
}

TEST_CASE("monotone maps agree with a full table scan") {
  CHECK(enumerate_monotone_tables(discrete(2), sigma()).size() == 4);
  CHECK(enumerate_monotone_tables(sigma(), sigma()).size() == 3);
  CHECK(enumerate_monotone_tables(sigma(), Poset::chain(1)).size() == 1);
  for (const auto& [name, p] : corpus()) {
    CAPTURE(name);
    for (const Poset& cod : {sigma(), Poset::chain(3), discrete(2)})
      CHECK(enumerate_monotone_tables(p, cod) == scan_monotone(p, cod));
    // Maps into the two-chain are the open sets.
    CHECK(enumerate_monotone_tables(p, sigma()).size() == enumerate_up_sets(p, false).size());
  }
  CHECK_THROWS_AS(MonotoneMap(sigma(), sigma(), Table{1, 0}), Error);
}

TEST_CASE("function posets and products") {
  const FunctionPoset f = function_poset(sigma(), sigma());
  CHECK(f.poset == Poset::chain(3));

  for (const auto& [name, p] : corpus()) {
    CAPTURE(name);
    const FunctionPoset unit = function_poset(Poset::chain(1), p);
    CHECK(unit.poset == p);
    const FunctionPoset fp = function_poset(p, Poset::chain(3));
    for (Index i = 0; i < fp.maps.size(); ++i)
      for (Index j = 0; j < fp.maps.size(); ++j)
        CHECK(fp.poset.leq(i, j) == pointwise_leq(Poset::chain(3), fp.maps[i], fp.maps[j]));
  }

  const Poset sq = product(sigma(), sigma());
  const Poset diamond = Poset::from_generators(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(sq == diamond);
}

TEST_CASE("bounds, covers and caps") {
  const Poset vee = Poset::from_generators(3, {{0, 1}, {0, 2}});
  CHECK(vee.bottom() == Index{0});
  CHECK_FALSE(vee.top().has_value());
  CHECK(vee.covers() == std::vector<std::pair<Index, Index>>{{0, 1}, {0, 2}});
  CHECK(Poset::chain(3).covers() == std::vector<std::pair<Index, Index>>{{0, 1}, {1, 2}});

  CHECK(code_of([] { count_open_sets(Poset::antichain(15)); }) == ErrorCode::ResourceCapExceeded);
  CHECK(count_open_sets(Poset::antichain(14)) == (std::size_t{1} << 14));
  CHECK(code_of([] { require_set_carrier(Poset::chain(65)); }) == ErrorCode::CarrierTooLarge);
}

TEST_CASE("canonical order reads tables as numbers with digit i at element i") {
  CHECK(canonical_less(Table{1, 0}, Table{0, 1}));
  CHECK_FALSE(canonical_less(Table{0, 1}, Table{1, 0}));
  const auto maps = enumerate_monotone_tables(discrete(2), sigma());
  CHECK(maps == std::vector<Table>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
}
