#include "replete/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "replete/kernels.hpp"

namespace replete {

namespace {

std::size_t ipow(std::size_t base, unsigned exp) {
  std::size_t out = 1;
  for (unsigned i = 0; i < exp; ++i) out *= base;
  return out;
}

/// Calls f(tuple) for every tuple in n^arity, last coordinate fastest.
template <typename F>
void for_each_tuple(std::size_t n, unsigned arity, F&& f) {
  std::vector<Index> t(arity, 0);
  if (arity == 0) {
    f(std::span<const Index>(t));
    return;
  }
  if (n == 0) return;
  while (true) {
    f(std::span<const Index>(t));
    std::size_t k = arity;
    while (k > 0) {
      --k;
      if (++t[k] < n) break;
      t[k] = 0;
      if (k == 0) return;
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Signature / Algebra

Signature::Signature(std::vector<OpSymbol> ops) : ops_(std::move(ops)) {
  std::set<std::string> seen;
  for (const auto& op : ops_) {
    if (!seen.insert(op.name).second) throw Error(ErrorCode::SignatureMismatch, "duplicate operation " + op.name);
  }
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < ops_.size(); ++i)
    if (ops_[i].name == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Signature::binary() const {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].arity != 2) continue;
    if (found) return std::nullopt;
    found = i;
  }
  return found;
}

const Signature& semilattice_signature() {
  static const Signature sig({OpSymbol{"choice", 2}});
  return sig;
}

std::shared_ptr<const Algebra::Rep> Algebra::make_rep(Poset carrier, Signature sig, std::vector<Table> tables,
                                                      std::vector<std::string> labels) {
  if (tables.size() != sig.size()) {
    throw Error(ErrorCode::ArityMismatch, "expected " + std::to_string(sig.size()) + " operation tables");
  }
  const std::size_t n = carrier.size();
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (tables[i].size() != ipow(n, sig[i].arity)) {
      throw Error(ErrorCode::ArityMismatch, "table of " + sig[i].name + " has the wrong size");
    }
    for (Index v : tables[i])
      if (v >= n) throw Error(ErrorCode::InvariantViolation, "table of " + sig[i].name + " leaves the carrier");
  }
  if (!labels.empty() && labels.size() != n) throw Error(ErrorCode::InvariantViolation, "label count mismatch");
  auto rep = std::make_shared<Rep>(Rep{std::move(carrier), std::move(sig), std::move(tables), std::move(labels), {}});
  rep->binary = rep->sig.binary();
  return rep;
}

Algebra::Algebra(Poset carrier, Signature sig, std::vector<Table> tables, std::vector<std::string> labels)
    : rep_(make_rep(std::move(carrier), std::move(sig), std::move(tables), std::move(labels))) {
  if (!is_monotone_algebra(*this)) throw Error(ErrorCode::NotMonotone, "operations are not monotone");
}

Algebra Algebra::trusted(Poset carrier, Signature sig, std::vector<Table> tables, std::vector<std::string> labels) {
  return Algebra(make_rep(std::move(carrier), std::move(sig), std::move(tables), std::move(labels)));
}

Index Algebra::apply(std::size_t op, std::span<const Index> args) const {
  const std::size_t n = size();
  std::size_t idx = 0;
  for (Index a : args) idx = idx * n + a;
  return rep_->tables[op][idx];
}

Index Algebra::op(Index a, Index b) const {
  if (!rep_->binary) throw Error(ErrorCode::ArityMismatch, "algebra has no unique binary operation");
  return rep_->tables[*rep_->binary][a * size() + b];
}

std::string Algebra::label(Index i) const {
  return rep_->labels.empty() ? std::to_string(i) : rep_->labels[i];
}

bool is_monotone_algebra(const Algebra& alg) {
  const Poset& p = alg.carrier();
  const std::size_t n = alg.size();
  const auto covers = p.covers();
  for (std::size_t op = 0; op < alg.signature().size(); ++op) {
    const unsigned arity = alg.signature()[op].arity;
    bool ok = true;
    // Monotone in each argument separately along covers implies jointly monotone.
    for_each_tuple(n, arity, [&](std::span<const Index> t) {
      if (!ok) return;
      std::vector<Index> moved(t.begin(), t.end());
      const Index base = alg.apply(op, t);
      for (unsigned pos = 0; pos < arity && ok; ++pos) {
        for (auto [lo, hi] : covers) {
          if (t[pos] != lo) continue;
          moved[pos] = hi;
          if (!p.leq(base, alg.apply(op, moved))) ok = false;
          moved[pos] = lo;
        }
      }
    });
    if (!ok) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Prototypes

std::optional<Index> aval::from_pair(Index first, Index second) {
  if (first == 0 && second == 0) return bot;
  if (first == 1 && second == 0) return may;
  if (first == 1 && second == 1) return top;
  return std::nullopt;
}

Algebra make_prototype(Prototype kind) {
  switch (kind) {
    case Prototype::SigmaJoin:
      return Algebra(Poset::chain(2), semilattice_signature(), {Table{0, 1, 1, 1}}, {"0", "1"});
    case Prototype::SigmaMeet:
      return Algebra(Poset::chain(2), semilattice_signature(), {Table{0, 0, 0, 1}}, {"0", "1"});
    case Prototype::A: {
      Table t(9);
      for (Index a = 0; a < 3; ++a)
        for (Index b = 0; b < 3; ++b) t[a * 3 + b] = a == b ? a : aval::may;
      return Algebra(Poset::chain(3), semilattice_signature(), {t}, {"bot", "m", "top"});
    }
  }
  throw Error(ErrorCode::WrongPrototype, "unknown prototype");
}

std::optional<Prototype> parse_prototype(std::string_view name) {
  if (name == "sigma-join" || name == "sigma_join") return Prototype::SigmaJoin;
  if (name == "sigma-meet" || name == "sigma_meet") return Prototype::SigmaMeet;
  if (name == "A" || name == "a") return Prototype::A;
  return std::nullopt;
}

std::string to_string(Prototype kind) {
  switch (kind) {
    case Prototype::SigmaJoin: return "sigma-join";
    case Prototype::SigmaMeet: return "sigma-meet";
    case Prototype::A: return "A";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Laws

namespace {

class LawParser {
 public:
  LawParser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  Law parse() {
    Law law;
    law.text = std::string(text_);
    law.lhs = term();
    skip();
    if (text_.substr(pos_, 2) == "<=") {
      law.kind = Law::Kind::Inequation;
      pos_ += 2;
    } else if (peek() == '=') {
      law.kind = Law::Kind::Equation;
      ++pos_;
    } else {
      fail("expected '=' or '<='");
    }
    law.rhs = term();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    law.vars = vars_;
    return law;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at column " + std::to_string(pos_ + 1) + " in '" +
                                           std::string(text_) + "'");
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Term term() {
    Term left = factor();
    while (peek() == '*') {
      ++pos_;
      const auto op = sig_.binary();
      if (!op) throw Error(ErrorCode::ArityMismatch, "'*' needs exactly one binary operation in the signature");
      left = Term::apply(*op, {std::move(left), factor()});
    }
    return left;
  }

  Term factor() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Term t = term();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return t;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("expected a variable");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it != vars_.end()) return Term::var(static_cast<std::size_t>(it - vars_.begin()));
    vars_.push_back(name);
    return Term::var(vars_.size() - 1);
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
  std::vector<std::string> vars_;
};

void check_term(const Term& t, const Signature& sig, std::size_t vars) {
  if (t.kind == Term::Kind::Var) {
    if (t.index >= vars) throw Error(ErrorCode::ArityMismatch, "unbound variable in law");
    return;
  }
  if (t.index >= sig.size() || sig[t.index].arity != t.args.size()) {
    throw Error(ErrorCode::ArityMismatch, "term does not match the signature");
  }
  for (const Term& a : t.args) check_term(a, sig, vars);
}

Index eval(const Algebra& alg, const Term& t, std::span<const Index> env) {
  if (t.kind == Term::Kind::Var) return env[t.index];
  std::vector<Index> args;
  args.reserve(t.args.size());
  for (const Term& a : t.args) args.push_back(eval(alg, a, env));
  return alg.apply(t.index, args);
}

}  // namespace

Law parse_law(std::string_view text, const Signature& sig) { return LawParser(text, sig).parse(); }

LawResult check_law(const Algebra& alg, const Law& law) {
  check_term(law.lhs, alg.signature(), law.vars.size());
  check_term(law.rhs, alg.signature(), law.vars.size());
  const auto failure = kernels::first_failure(law.vars.size(), alg.size(), [&](std::span<const Index> env) {
    const Index l = eval(alg, law.lhs, env);
    const Index r = eval(alg, law.rhs, env);
    return law.kind == Law::Kind::Equation ? l == r : alg.carrier().leq(l, r);
  });
  if (!failure) return LawResult{true, std::nullopt};
  return LawResult{false, failure};
}

LawResult check_law(const Algebra& alg, std::string_view law_text) {
  return check_law(alg, parse_law(law_text, alg.signature()));
}

bool is_semilattice(const Algebra& alg) {
  if (alg.signature().size() != 1 || alg.signature()[0].arity != 2) return false;
  for (auto law : {laws::idempotency, laws::commutativity, laws::associativity})
    if (!check_law(alg, law).holds) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Function algebras

std::optional<Index> FunctionAlgebra::index_of(const Table& t) const {
  auto it = std::lower_bound(maps.begin(), maps.end(), t, canonical_less);
  if (it == maps.end() || *it != t) return std::nullopt;
  return static_cast<Index>(it - maps.begin());
}

Index FunctionAlgebra::require_index(const Table& t) const {
  if (auto i = index_of(t)) return *i;
  throw Error(ErrorCode::InvariantViolation, "map is not an element of the function algebra");
}

namespace {

/// Pointwise operations on a canonically sorted family of tables over `dst`.
/// Returns nullopt if the family is not closed.
std::optional<std::vector<Table>> pointwise_tables(const Algebra& dst, const std::vector<Table>& maps) {
  const std::size_t n = maps.size();
  const std::size_t points = maps.empty() ? 0 : maps.front().size();
  std::vector<Table> tables;
  for (std::size_t op = 0; op < dst.signature().size(); ++op) {
    const unsigned arity = dst.signature()[op].arity;
    Table table;
    table.reserve(ipow(n, arity));
    bool closed = true;
    for_each_tuple(n, arity, [&](std::span<const Index> tuple) {
      if (!closed) return;
      Table result(points);
      std::vector<Index> args(arity);
      for (std::size_t x = 0; x < points; ++x) {
        for (unsigned k = 0; k < arity; ++k) args[k] = maps[tuple[k]][x];
        result[x] = dst.apply(op, args);
      }
      auto it = std::lower_bound(maps.begin(), maps.end(), result, canonical_less);
      if (it == maps.end() || *it != result) {
        closed = false;
        return;
      }
      table.push_back(static_cast<Index>(it - maps.begin()));
    });
    if (!closed) return std::nullopt;
    tables.push_back(std::move(table));
  }
  return tables;
}

}  // namespace

FunctionAlgebra power_algebra(const Algebra& r, const Poset& x) {
  FunctionPoset fp = function_poset(x, r.carrier());
  auto tables = pointwise_tables(r, fp.maps);
  // Pointwise operations of monotone operations send monotone maps to monotone maps.
  Algebra alg = Algebra::trusted(fp.poset, r.signature(), std::move(*tables));
  return FunctionAlgebra{std::move(alg), x, std::move(fp.maps)};
}

Algebra product_algebra(const Algebra& a, const Algebra& b) {
  if (!(a.signature() == b.signature())) throw Error(ErrorCode::SignatureMismatch, "product of unlike algebras");
  Poset carrier = product(a.carrier(), b.carrier());
  const std::size_t nb = b.size();
  std::vector<Table> tables;
  for (std::size_t op = 0; op < a.signature().size(); ++op) {
    const unsigned arity = a.signature()[op].arity;
    Table table;
    for_each_tuple(carrier.size(), arity, [&](std::span<const Index> t) {
      std::vector<Index> left(arity), right(arity);
      for (unsigned k = 0; k < arity; ++k) {
        left[k] = t[k] / static_cast<Index>(nb);
        right[k] = t[k] % static_cast<Index>(nb);
      }
      table.push_back(a.apply(op, left) * static_cast<Index>(nb) + b.apply(op, right));
    });
    tables.push_back(std::move(table));
  }
  std::vector<std::string> labels;
  if (a.has_labels() || b.has_labels()) {
    for (Index i = 0; i < a.size(); ++i)
      for (Index j = 0; j < nb; ++j) labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
  }
  return Algebra::trusted(std::move(carrier), a.signature(), std::move(tables), std::move(labels));
}

bool is_homomorphism(const Algebra& src, const Algebra& dst, const Table& map) {
  if (!(src.signature() == dst.signature()) || map.size() != src.size()) return false;
  if (!is_monotone(src.carrier(), dst.carrier(), map)) return false;
  for (std::size_t op = 0; op < src.signature().size(); ++op) {
    const unsigned arity = src.signature()[op].arity;
    bool ok = true;
    for_each_tuple(src.size(), arity, [&](std::span<const Index> t) {
      if (!ok) return;
      std::vector<Index> image(arity);
      for (unsigned k = 0; k < arity; ++k) image[k] = map[t[k]];
      ok = map[src.apply(op, t)] == dst.apply(op, image);
    });
    if (!ok) return false;
  }
  return true;
}

std::vector<Table> hom_tables(const Algebra& src, const Algebra& dst, bool preserve_bounds) {
  if (!(src.signature() == dst.signature())) throw Error(ErrorCode::SignatureMismatch, "homs between unlike algebras");
  kernels::MapProblem problem = kernels::monotone_problem(src.carrier(), dst.carrier());
  if (preserve_bounds) {
    const auto sb = src.carrier().bottom(), st = src.carrier().top();
    const auto db = dst.carrier().bottom(), dt = dst.carrier().top();
    if (!sb || !st || !db || !dt) throw Error(ErrorCode::NoBounds, "bound preservation needs least and greatest elements");
    if (*sb == *st && *db != *dt) return {};
    problem.allowed.assign(src.size(), {});
    problem.allowed[*sb] = {*db};
    problem.allowed[*st] = {*dt};
  }
  for (std::size_t op = 0; op < src.signature().size(); ++op) {
    problem.cod_ops.push_back(dst.table(op));
    problem.cod_arity.push_back(src.signature()[op].arity);
    for_each_tuple(src.size(), src.signature()[op].arity, [&](std::span<const Index> t) {
      problem.equations.push_back(kernels::Equation{op, std::vector<Index>(t.begin(), t.end()), src.apply(op, t)});
    });
  }
  return kernels::solve(problem);
}

FunctionAlgebra enumerate_homs(const Algebra& src, const Algebra& dst, bool preserve_bounds) {
  auto maps = hom_tables(src, dst, preserve_bounds);
  if (maps.empty()) throw Error(ErrorCode::EmptyCarrier, "there are no homomorphisms to form an algebra from");
  FunctionPoset fp = function_poset_of(src.carrier(), dst.carrier(), std::move(maps));
  auto tables = pointwise_tables(dst, fp.maps);
  if (!tables) throw Error(ErrorCode::PreconditionUnmet, "hom-set is not closed under pointwise operations");
  Algebra alg = Algebra::trusted(fp.poset, dst.signature(), std::move(*tables));
  return FunctionAlgebra{std::move(alg), src.carrier(), std::move(fp.maps)};
}

bool pointwise_op_closed(const Algebra& src, const Algebra& dst) {
  const auto maps = hom_tables(src, dst, false);
  if (maps.empty()) return true;
  auto tables = pointwise_tables(dst, maps);
  return tables.has_value();
}

MonotoneMap eta(const FunctionAlgebra& power, const FunctionAlgebra& homs) {
  const Poset& x = power.dom;
  Table unit(x.size());
  for (Index p = 0; p < x.size(); ++p) {
    Table evaluation(power.maps.size());
    for (std::size_t u = 0; u < power.maps.size(); ++u) evaluation[u] = power.maps[u][p];
    auto idx = homs.index_of(evaluation);
    if (!idx) {
      throw Error(ErrorCode::InvariantViolation,
                  "evaluation at " + std::to_string(p) + " is not a member of the hom-set");
    }
    unit[p] = *idx;
  }
  return MonotoneMap(x, homs.algebra.carrier(), std::move(unit));
}

Subalgebra generated_subalgebra(const Algebra& ambient, const std::vector<Index>& generators) {
  std::vector<bool> in(ambient.size(), false);
  std::vector<Index> members;
  for (Index g : generators) {
    if (g >= ambient.size()) throw Error(ErrorCode::PreconditionUnmet, "generator outside the carrier");
    if (!in[g]) {
      in[g] = true;
      members.push_back(g);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t op = 0; op < ambient.signature().size(); ++op) {
      const std::vector<Index> current = members;
      for_each_tuple(current.size(), ambient.signature()[op].arity, [&](std::span<const Index> t) {
        std::vector<Index> args(t.size());
        for (std::size_t k = 0; k < t.size(); ++k) args[k] = current[t[k]];
        const Index r = ambient.apply(op, args);
        if (!in[r]) {
          in[r] = true;
          members.push_back(r);
          changed = true;
        }
      });
    }
  }
  std::sort(members.begin(), members.end());
  if (members.empty()) throw Error(ErrorCode::EmptyCarrier, "empty subalgebra");

  std::vector<Index> position(ambient.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) position[members[i]] = static_cast<Index>(i);
  std::vector<Table> tables;
  for (std::size_t op = 0; op < ambient.signature().size(); ++op) {
    Table table;
    for_each_tuple(members.size(), ambient.signature()[op].arity, [&](std::span<const Index> t) {
      std::vector<Index> args(t.size());
      for (std::size_t k = 0; k < t.size(); ++k) args[k] = members[t[k]];
      table.push_back(position[ambient.apply(op, args)]);
    });
    tables.push_back(std::move(table));
  }
  std::vector<std::string> labels;
  if (ambient.has_labels())
    for (Index m : members) labels.push_back(ambient.label(m));
  Algebra alg = Algebra::trusted(induced(ambient.carrier(), members), ambient.signature(), std::move(tables),
                                 std::move(labels));
  return Subalgebra{std::move(alg), std::move(members)};
}

Homomorphism::Homomorphism(Algebra src, Algebra dst, Table map)
    : src_(std::move(src)), dst_(std::move(dst)), map_(std::move(map)) {
  if (!is_homomorphism(src_, dst_, map_)) throw Error(ErrorCode::InvariantViolation, "not a homomorphism");
}

EquabilityResult is_equable(const Homomorphism& e, const Algebra& r) {
  if (!(e.src().signature() == r.signature())) throw Error(ErrorCode::SignatureMismatch, "prototype signature differs");
  const auto on_b = hom_tables(e.dst(), r, false);
  const auto on_a = hom_tables(e.src(), r, false);

  EquabilityResult result;
  std::vector<int> preimage(on_a.size(), -1);
  std::vector<Index> image(on_b.size());
  result.injective = true;
  for (std::size_t i = 0; i < on_b.size(); ++i) {
    Table restricted(e.src().size());
    for (std::size_t a = 0; a < restricted.size(); ++a) restricted[a] = on_b[i][e.map()[a]];
    auto it = std::lower_bound(on_a.begin(), on_a.end(), restricted, canonical_less);
    const auto j = static_cast<std::size_t>(it - on_a.begin());
    image[i] = static_cast<Index>(j);
    if (preimage[j] >= 0) {
      result.injective = false;
      if (!result.witness) result.witness = on_a[j];
    }
    preimage[j] = static_cast<int>(i);
  }
  result.surjective = true;
  for (std::size_t j = 0; j < on_a.size(); ++j) {
    if (preimage[j] < 0) {
      result.surjective = false;
      if (!result.witness) result.witness = on_a[j];
    }
  }
  result.inverse_monotone = true;
  for (std::size_t i = 0; i < on_b.size() && result.inverse_monotone; ++i)
    for (std::size_t k = 0; k < on_b.size() && result.inverse_monotone; ++k)
      if (pointwise_leq(r.carrier(), on_a[image[i]], on_a[image[k]]) && !pointwise_leq(r.carrier(), on_b[i], on_b[k]))
        result.inverse_monotone = false;
  result.equable = result.injective && result.surjective && result.inverse_monotone;
  return result;
}

ProductDecomposition decompose_product_hom(const Table& phi, const ProductContext& ctx) {
  const auto zero = ctx.b2.carrier().bottom();
  const auto one = ctx.b1.carrier().top();
  if (!zero || !one) throw Error(ErrorCode::PreconditionUnmet, "B1 needs a top and B2 a bottom");
  if (phi.size() != ctx.b.size() || ctx.b_coords.size() != ctx.b.size() || ctx.a_coords.size() != ctx.a.size()) {
    throw Error(ErrorCode::PreconditionUnmet, "coordinate tables do not match the carriers");
  }
  std::map<std::pair<Index, Index>, Index> at;
  for (std::size_t i = 0; i < ctx.b_coords.size(); ++i) at[ctx.b_coords[i]] = static_cast<Index>(i);
  auto locate = [&](Index first, Index second) {
    auto it = at.find({first, second});
    if (it == at.end()) {
      throw Error(ErrorCode::PreconditionUnmet,
                  "B lacks the point (" + std::to_string(first) + "," + std::to_string(second) + ")");
    }
    return it->second;
  };

  ProductDecomposition out;
  out.phi1.resize(ctx.b1.size());
  out.phi2.resize(ctx.b2.size());
  for (Index b1 = 0; b1 < ctx.b1.size(); ++b1) out.phi1[b1] = ctx.a_coords[phi[locate(b1, *zero)]].first;
  for (Index b2 = 0; b2 < ctx.b2.size(); ++b2) out.phi2[b2] = ctx.a_coords[phi[locate(*one, b2)]].second;

  for (std::size_t i = 0; i < ctx.b.size(); ++i) {
    const auto [b1, b2] = ctx.b_coords[i];
    const auto [a1, a2] = ctx.a_coords[phi[i]];
    if (a1 != out.phi1[b1]) out.first_independent = false;
    if (a2 != out.phi2[b2]) out.second_independent = false;
    if (a1 != out.phi1[b1] || a2 != out.phi2[b2]) out.reconstructs = false;
  }
  out.components_homomorphic =
      is_homomorphism(ctx.b1, ctx.a1, out.phi1) && is_homomorphism(ctx.b2, ctx.a2, out.phi2);
  return out;
}

}  // namespace replete
