#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "replete/poset.hpp"

namespace replete {

struct OpSymbol {
  std::string name;
  unsigned arity = 0;

  friend bool operator==(const OpSymbol&, const OpSymbol&) = default;
};

class Signature {
 public:
  Signature() = default;
  /// Throws SignatureMismatch on duplicate names.
  explicit Signature(std::vector<OpSymbol> ops);

  const std::vector<OpSymbol>& ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  const OpSymbol& operator[](std::size_t i) const { return ops_[i]; }
  std::optional<std::size_t> find(std::string_view name) const;
  /// The unique binary symbol, written `*` in laws.
  std::optional<std::size_t> binary() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<OpSymbol> ops_;
};

/// One binary operation named "choice"; shared by every semilattice here.
const Signature& semilattice_signature();

/// A poset with monotone finitary operations. Immutable; copies share state.
///
/// Operation tables are indexed by argument tuples in big-endian mixed radix:
/// a binary op stores op(a, b) at a * n + b.
class Algebra {
 public:
  /// Validates table shapes and joint monotonicity of every operation.
  Algebra(Poset carrier, Signature sig, std::vector<Table> tables, std::vector<std::string> labels = {});

  /// Skips the monotonicity scan; for operations monotone by construction.
  static Algebra trusted(Poset carrier, Signature sig, std::vector<Table> tables,
                         std::vector<std::string> labels = {});

  const Poset& carrier() const { return rep_->carrier; }
  const Signature& signature() const { return rep_->sig; }
  std::size_t size() const { return rep_->carrier.size(); }
  const Table& table(std::size_t op) const { return rep_->tables[op]; }
  const std::vector<Table>& tables() const { return rep_->tables; }

  Index apply(std::size_t op, std::span<const Index> args) const;
  /// The binary operation, for semilattices.
  Index op(Index a, Index b) const;

  std::string label(Index i) const;
  bool has_labels() const { return !rep_->labels.empty(); }

 private:
  struct Rep {
    Poset carrier;
    Signature sig;
    std::vector<Table> tables;
    std::vector<std::string> labels;
    std::optional<std::size_t> binary;
  };
  explicit Algebra(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  static std::shared_ptr<const Rep> make_rep(Poset carrier, Signature sig, std::vector<Table> tables,
                                             std::vector<std::string> labels);

  std::shared_ptr<const Rep> rep_;
};

/// Exhaustive monotonicity check of every operation (argument by argument).
bool is_monotone_algebra(const Algebra& alg);

enum class Prototype { SigmaJoin, SigmaMeet, A };

/// Σ∨ (2-chain, max), Σ∧ (2-chain, min) and the three-chain ⊥ < m < ⊤ with
/// a ⩂ b = a if a = b, else m.
Algebra make_prototype(Prototype kind);
std::optional<Prototype> parse_prototype(std::string_view name);
std::string to_string(Prototype kind);

/// Element names of the three-chain prototype.
namespace aval {
inline constexpr Index bot = 0;
inline constexpr Index may = 1;
inline constexpr Index top = 2;
/// Coordinates of the embedding into Σ∨ × Σ∧: ⊥ = (0,0), m = (1,0), ⊤ = (1,1).
inline constexpr Index first(Index a) { return a >= may ? 1 : 0; }
inline constexpr Index second(Index a) { return a == top ? 1 : 0; }
/// Inverse of the embedding; (0,1) has no preimage.
std::optional<Index> from_pair(Index first, Index second);
}  // namespace aval

// ---------------------------------------------------------------------------
// Terms and laws

struct Term {
  enum class Kind { Var, Op };
  Kind kind = Kind::Var;
  std::size_t index = 0;  // variable number, or operation number
  std::vector<Term> args;

  static Term var(std::size_t v) { return Term{Kind::Var, v, {}}; }
  static Term apply(std::size_t op, std::vector<Term> args) { return Term{Kind::Op, op, std::move(args)}; }
};

struct Law {
  enum class Kind { Equation, Inequation };
  Kind kind = Kind::Equation;
  Term lhs;
  Term rhs;
  std::vector<std::string> vars;
  std::string text;
};

/// Parses `t1 = t2` or `t1 <= t2`, where terms are built from variables,
/// parentheses and the left-associative binary symbol `*`.
Law parse_law(std::string_view text, const Signature& sig);

namespace laws {
inline constexpr std::string_view idempotency = "x * x = x";
inline constexpr std::string_view commutativity = "x * y = y * x";
inline constexpr std::string_view associativity = "x * (y * z) = (x * y) * z";
inline constexpr std::string_view join = "x <= x * y";
inline constexpr std::string_view meet = "x * y <= x";
}  // namespace laws

struct LawResult {
  bool holds = true;
  /// Variable assignment (in `Law::vars` order) refuting the law.
  std::optional<std::vector<Index>> witness;
};

/// Throws ArityMismatch when the law uses symbols the algebra lacks.
LawResult check_law(const Algebra& alg, const Law& law);
LawResult check_law(const Algebra& alg, std::string_view law_text);
bool is_semilattice(const Algebra& alg);

// ---------------------------------------------------------------------------
// Function algebras

/// An algebra whose element i is the map `maps[i]` on `dom`.
struct FunctionAlgebra {
  Algebra algebra;
  Poset dom;
  std::vector<Table> maps;

  std::optional<Index> index_of(const Table& t) const;
  /// Like index_of, but throws InvariantViolation when absent.
  Index require_index(const Table& t) const;
};

/// R^X: monotone maps X -> R with pointwise operations.
FunctionAlgebra power_algebra(const Algebra& r, const Poset& x);

/// Componentwise operations; pair (a, b) has index a * |B| + b.
Algebra product_algebra(const Algebra& a, const Algebra& b);

bool is_homomorphism(const Algebra& src, const Algebra& dst, const Table& map);

/// All homomorphisms src -> dst as tables in canonical order, possibly none.
/// With `preserve_bounds`, least and greatest elements must be preserved
/// (throws NoBounds when a carrier lacks them).
std::vector<Table> hom_tables(const Algebra& src, const Algebra& dst, bool preserve_bounds);

/// hom(src, dst) or hom_{0,1}(src, dst) with pointwise operations. Throws
/// EmptyCarrier when there are no such homomorphisms and PreconditionUnmet
/// when the hom-set is not closed under the pointwise operations.
FunctionAlgebra enumerate_homs(const Algebra& src, const Algebra& dst, bool preserve_bounds);

/// True iff every pointwise combination of homomorphisms src -> dst is again one.
bool pointwise_op_closed(const Algebra& src, const Algebra& dst);

/// Point evaluation x ↦ (u ↦ u(x)) into `homs`, a hom-set over `power`.
/// Throws InvariantViolation when some evaluation is not a member.
MonotoneMap eta(const FunctionAlgebra& power, const FunctionAlgebra& homs);

struct Subalgebra {
  Algebra algebra;
  /// Ambient indices of the members, ascending; algebra element i is members[i].
  std::vector<Index> members;
};

/// Least subset containing `generators` and closed under every operation.
Subalgebra generated_subalgebra(const Algebra& ambient, const std::vector<Index>& generators);

class Homomorphism {
 public:
  /// Throws InvariantViolation unless `map` is a monotone homomorphism.
  Homomorphism(Algebra src, Algebra dst, Table map);

  const Algebra& src() const { return src_; }
  const Algebra& dst() const { return dst_; }
  const Table& map() const { return map_; }

 private:
  Algebra src_;
  Algebra dst_;
  Table map_;
};

struct EquabilityResult {
  bool equable = false;
  bool injective = false;
  bool surjective = false;
  bool inverse_monotone = false;
  /// A homomorphism A -> R with no extension, or with more than one.
  std::optional<Table> witness;
};

/// Checks that h ↦ h∘e is an order isomorphism hom(B, R) -> hom(A, R).
EquabilityResult is_equable(const Homomorphism& e, const Algebra& r);

/// B ⊆ B1 × B2 mapped into A ⊆ A1 × A2, with B1 a join- and B2 a
/// meet-semilattice.
struct ProductContext {
  Algebra b1;
  Algebra b2;
  Algebra b;
  std::vector<std::pair<Index, Index>> b_coords;
  Algebra a1;
  Algebra a2;
  Algebra a;
  std::vector<std::pair<Index, Index>> a_coords;
};

struct ProductDecomposition {
  Table phi1;  // B1 -> A1
  Table phi2;  // B2 -> A2
  bool first_independent = true;   // π1∘Φ ignores the second coordinate
  bool second_independent = true;  // π2∘Φ ignores the first coordinate
  bool reconstructs = true;        // Φ(b1, b2) = (Φ1(b1), Φ2(b2))
  bool components_homomorphic = true;

  bool ok() const { return first_independent && second_independent && reconstructs && components_homomorphic; }
};

/// Φ1(b1) = π1 Φ(b1, 0), Φ2(b2) = π2 Φ(1, b2), with every property checked.
/// Throws PreconditionUnmet when B misses some (b1, 0) or (1, b2).
ProductDecomposition decompose_product_hom(const Table& phi, const ProductContext& ctx);

}  // namespace replete
