#include <doctest.h>

#include <algorithm>
#include <set>

#include "replete/algebra.hpp"
#include "support.hpp"

using namespace replete;
using namespace testing;

namespace {

const Algebra& A() {
  static const Algebra a = make_prototype(Prototype::A);
  return a;
}
const Algebra& SJ() {
  static const Algebra a = make_prototype(Prototype::SigmaJoin);
  return a;
}
const Algebra& SM() {
  static const Algebra a = make_prototype(Prototype::SigmaMeet);
  return a;
}

std::vector<Table> brute_homs(const Algebra& src, const Algebra& dst, bool bounds) {
  return scan_tables(src.size(), dst.size(), [&](const Table& h) {
    if (bounds && (h[*src.carrier().bottom()] != *dst.carrier().bottom() || h[*src.carrier().top()] != *dst.carrier().top()))
      return false;
    for (Index a = 0; a < src.size(); ++a)
      for (Index b = 0; b < src.size(); ++b) {
        if (src.carrier().leq(a, b) && !dst.carrier().leq(h[a], h[b])) return false;
        if (h[src.op(a, b)] != dst.op(h[a], h[b])) return false;
      }
    return true;
  });
}

}  // namespace

TEST_CASE("prototype operation tables") {
  using namespace aval;
  CHECK(A().op(bot, top) == may);
  CHECK(A().op(may, may) == may);
  CHECK(A().op(top, top) == top);
  CHECK(A().op(bot, may) == may);
  CHECK(SJ().op(0, 1) == 1);
  CHECK(SM().op(0, 1) == 0);
  CHECK(A().label(may) == "m");
  CHECK(parse_prototype("sigma-join") == Prototype::SigmaJoin);
  CHECK(parse_prototype("sigma-meet") == Prototype::SigmaMeet);
  CHECK(parse_prototype("A") == Prototype::A);
  CHECK_FALSE(parse_prototype("B").has_value());
  // The embedding into the product of the two-point semilattices and back.
  for (Index v = 0; v < 3; ++v) CHECK(from_pair(first(v), second(v)) == v);
  CHECK_FALSE(from_pair(0, 1).has_value());
}

TEST_CASE("algebra construction rejects non-monotone operations") {
  CHECK_THROWS_AS(Algebra(Poset::chain(2), semilattice_signature(), {Table{1, 0, 0, 0}}), Error);
  CHECK_THROWS_AS(Algebra(Poset::chain(2), semilattice_signature(), {Table{0, 1, 1}}), Error);
  CHECK_THROWS_AS(Signature({{"f", 2}, {"f", 1}}), Error);
}

TEST_CASE("laws on the prototypes") {
  for (const Algebra* r : {&A(), &SJ(), &SM()}) {
    CHECK(check_law(*r, laws::idempotency).holds);
    CHECK(check_law(*r, laws::commutativity).holds);
    CHECK(check_law(*r, laws::associativity).holds);
    CHECK(is_semilattice(*r));
  }
  CHECK(check_law(SJ(), laws::join).holds);
  CHECK(check_law(SM(), laws::meet).holds);
  CHECK_FALSE(check_law(SJ(), laws::meet).holds);

  const LawResult j = check_law(A(), laws::join);
  CHECK_FALSE(j.holds);
  REQUIRE(j.witness.has_value());
  CHECK(*j.witness == std::vector<Index>{aval::top, aval::bot});
  const LawResult m = check_law(A(), laws::meet);
  CHECK_FALSE(m.holds);
  REQUIRE(m.witness.has_value());
  CHECK(*m.witness == std::vector<Index>{aval::bot, aval::may});
}

TEST_CASE("law parser") {
  const Law l = parse_law("x * (y * z) = (x * y) * z", semilattice_signature());
  CHECK(l.vars == std::vector<std::string>{"x", "y", "z"});
  CHECK(l.kind == Law::Kind::Equation);
  CHECK(parse_law("x <= x * y", semilattice_signature()).kind == Law::Kind::Inequation);
  CHECK(parse_law("x * y * z = x", semilattice_signature()).lhs.args[0].kind == Term::Kind::Op);
  for (const char* bad : {"x * = y", "x = ", "(x * y = x", "x ? y", "x * y"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_law(bad, semilattice_signature()), Error);
  }
  const Algebra unary(Poset::chain(2), Signature({{"f", 1}}), {Table{0, 1}});
  try {
    check_law(unary, laws::idempotency);
    FAIL("expected an arity error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ArityMismatch);
  }
}

TEST_CASE("power algebras") {
  const FunctionAlgebra pj = power_algebra(SJ(), discrete(2));
  CHECK(pj.algebra.size() == 4);
  CHECK(pj.algebra.carrier() == Poset::from_generators(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  CHECK(pj.algebra.op(1, 2) == 3);  // {0} ∪ {1}
  CHECK(power_algebra(A(), Poset::chain(1)).algebra.tables() == A().tables());
  CHECK(power_algebra(A(), sigma()).algebra.size() == 6);

  // Laws lift pointwise.
  for (const auto& [name, p] : corpus()) {
    CAPTURE(name);
    for (const Algebra* r : {&A(), &SJ(), &SM()}) {
      const FunctionAlgebra pw = power_algebra(*r, p);
      CHECK(is_monotone_algebra(pw.algebra));
      for (auto law : {laws::idempotency, laws::commutativity, laws::associativity, laws::join, laws::meet})
        if (check_law(*r, law).holds) CHECK(check_law(pw.algebra, law).holds);
    }
  }
}

TEST_CASE("product algebra contains A") {
  const Algebra prod = product_algebra(SJ(), SM());
  CHECK(prod.size() == 4);
  CHECK(prod.op(2, 1) == 2);  // (1,0) ⩂ (0,1) = (1,0)
  CHECK(prod.op(0, 0) == 0);
  const std::vector<Index> image{0, 2, 3};  // (0,0), (1,0), (1,1)
  const Subalgebra sub = generated_subalgebra(prod, image);
  CHECK(sub.members == image);
  for (Index a = 0; a < 3; ++a)
    for (Index b = 0; b < 3; ++b) CHECK(sub.algebra.op(a, b) == A().op(a, b));
  CHECK(sub.algebra.carrier() == A().carrier());
}

TEST_CASE("hom enumeration is sound and complete") {
  CHECK(enumerate_homs(power_algebra(SJ(), discrete(2)).algebra, SJ(), true).maps.size() == 3);
  CHECK(enumerate_homs(power_algebra(A(), discrete(2)).algebra, A(), true).maps.size() == 7);
  const auto endo = hom_tables(A(), A(), false);
  CHECK(std::find(endo.begin(), endo.end(), Table{0, 1, 2}) != endo.end());

  for (const auto& [name, p] : corpus()) {
    if (p.size() > 3) continue;
    CAPTURE(name);
    for (const Algebra* r : {&A(), &SJ(), &SM()}) {
      const Algebra src = power_algebra(*r, p).algebra;
      if (src.size() > 10) continue;
      CHECK(hom_tables(src, *r, true) == brute_homs(src, *r, true));
      CHECK(hom_tables(src, *r, false) == brute_homs(src, *r, false));
    }
  }
  for (const Algebra& b : semilattice_family(3)) CHECK(hom_tables(A(), b, false) == brute_homs(A(), b, false));

  CHECK_THROWS_AS(hom_tables(power_algebra(A(), discrete(2)).algebra, semilattice_family(2)[1], true), Error);
}

TEST_CASE("pointwise closure") {
  CHECK(pointwise_op_closed(power_algebra(SJ(), discrete(2)).algebra, SJ()));
  CHECK(pointwise_op_closed(power_algebra(A(), discrete(2)).algebra, A()));
  const Algebra point(Poset::chain(1), semilattice_signature(), {Table{0}});
  CHECK(pointwise_op_closed(A(), point));
}

TEST_CASE("evaluation maps") {
  const FunctionAlgebra power = power_algebra(A(), discrete(2));
  const FunctionAlgebra homs = enumerate_homs(power.algebra, A(), true);
  const MonotoneMap unit = eta(power, homs);
  const Index top = *power.algebra.carrier().top();
  for (Index p = 0; p < 2; ++p) {
    const Table& ev = homs.maps[unit(p)];
    CHECK(ev[top] == aval::top);
    for (std::size_t u = 0; u < power.maps.size(); ++u) CHECK(ev[u] == power.maps[u][p]);
    CHECK(is_homomorphism(power.algebra, A(), ev));
  }
  const FunctionAlgebra pc = power_algebra(A(), Poset::chain(3));
  const FunctionAlgebra hc = enumerate_homs(pc.algebra, A(), true);
  const MonotoneMap uc = eta(pc, hc);
  CHECK(hc.algebra.carrier().leq(uc(0), uc(1)));
  CHECK(hc.algebra.carrier().leq(uc(1), uc(2)));
}

TEST_CASE("generated subalgebras") {
  const FunctionAlgebra power = power_algebra(A(), discrete(2));
  const FunctionAlgebra homs = enumerate_homs(power.algebra, A(), true);
  const MonotoneMap unit = eta(power, homs);
  CHECK(generated_subalgebra(homs.algebra, unit.table()).members.size() == 3);

  std::vector<Index> all(homs.maps.size());
  for (Index i = 0; i < all.size(); ++i) all[i] = i;
  CHECK(generated_subalgebra(homs.algebra, all).members == all);
  CHECK(generated_subalgebra(A(), {aval::bot, aval::top}).members == std::vector<Index>{0, 1, 2});

  // Idempotent and monotone in the generators.
  const auto once = generated_subalgebra(homs.algebra, {0, 3}).members;
  CHECK(generated_subalgebra(homs.algebra, once).members == once);
  const auto more = generated_subalgebra(homs.algebra, {0, 3, 5}).members;
  CHECK(std::includes(more.begin(), more.end(), once.begin(), once.end()));
}

TEST_CASE("equability") {
  const Homomorphism id(A(), A(), Table{0, 1, 2});
  const EquabilityResult r = is_equable(id, A());
  CHECK(r.equable);
  CHECK(r.injective);
  CHECK(r.surjective);
  CHECK(r.inverse_monotone);

  // The constant map from the one-point algebra cannot be extended back uniquely.
  const Algebra point(Poset::chain(1), semilattice_signature(), {Table{0}});
  const Homomorphism into(point, A(), Table{aval::may});
  const EquabilityResult bad = is_equable(into, A());
  CHECK_FALSE(bad.equable);
  CHECK(bad.witness.has_value());

  // The Plotkin subalgebra inside the repletion of the antichain.
  const FunctionAlgebra power = power_algebra(A(), discrete(2));
  const FunctionAlgebra homs = enumerate_homs(power.algebra, A(), true);
  const Subalgebra sub = generated_subalgebra(homs.algebra, eta(power, homs).table());
  const Homomorphism incl(sub.algebra, homs.algebra, sub.members);
  const EquabilityResult inc = is_equable(incl, A());
  CHECK(inc.surjective);
}

TEST_CASE("product decomposition") {
  // A inside Σ∨ × Σ∧, mapped identically into A inside Σ∨ × Σ∧.
  std::vector<std::pair<Index, Index>> coords;
  for (Index v = 0; v < 3; ++v) coords.emplace_back(aval::first(v), aval::second(v));
  const ProductContext ctx{SJ(), SM(), A(), coords, SJ(), SM(), A(), coords};
  const ProductDecomposition id = decompose_product_hom(Table{0, 1, 2}, ctx);
  CHECK(id.ok());
  CHECK(id.phi1 == Table{0, 1});
  CHECK(id.phi2 == Table{0, 1});

  const ProductDecomposition top = decompose_product_hom(Table{2, 2, 2}, ctx);
  CHECK(top.phi1 == Table{1, 1});
  CHECK(top.phi2 == Table{1, 1});

  for (const Table& h : hom_tables(A(), A(), false)) {
    const ProductDecomposition d = decompose_product_hom(h, ctx);
    CHECK(d.reconstructs == (d.first_independent && d.second_independent));
    if (d.reconstructs) CHECK(d.components_homomorphic);
  }
}
