#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "replete/algebra.hpp"
#include "replete/powerdomain.hpp"

namespace replete {

/// The Alexandrov opens (up-sets, including ∅ and X) in ascending bit order,
/// so that valuations are plain arrays indexed by open set.
struct OpenSets {
  Poset space;
  std::vector<ElemSet> sets;

  std::size_t size() const { return sets.size(); }
  /// Throws InvariantViolation if `u` is not open.
  Index index_of(ElemSet u) const;
  Index empty_index() const { return 0; }
  Index full_index() const { return static_cast<Index>(sets.size() - 1); }
};

/// Throws ResourceCapExceeded beyond kMaxOpenSets.
OpenSets open_sets(const Poset& x);

/// Map from opens to the three-chain (⊥ = 0, m = 1, ⊤ = 2).
struct HeckmannValuation {
  Poset owner;
  Table table;  // indexed like OpenSets::sets

  friend bool operator==(const HeckmannValuation& a, const HeckmannValuation& b) { return a.table == b.table; }
};

/// (φ₁, φ₂) with φ₁ a join- and φ₂ a meet-homomorphism on opens, as bit arrays.
struct AValuationPair {
  std::vector<std::uint8_t> phi1;
  std::vector<std::uint8_t> phi2;

  friend bool operator==(const AValuationPair&, const AValuationPair&) = default;
  friend auto operator<=>(const AValuationPair&, const AValuationPair&) = default;
};

/// (φ₁ ∨ ψ₁, φ₂ ∧ ψ₂), the image of the pointwise ⩂.
AValuationPair choice(const AValuationPair& a, const AValuationPair& b);
/// Pointwise ⩂ in the three-chain.
HeckmannValuation choice(const HeckmannValuation& a, const HeckmannValuation& b);
bool pair_leq(const AValuationPair& a, const AValuationPair& b);

/// Predicates R^X for R among the prototypes, all indexed consistently:
/// element i of `sigma_join` and `sigma_meet` is the open set `opens.sets[i]`,
/// and element k of `a` is the pair of opens `coords[k]` = (U₁ ⊇ U₂).
struct PredicateSpace {
  Poset x;
  OpenSets opens;
  FunctionAlgebra sigma_join;
  FunctionAlgebra sigma_meet;
  FunctionAlgebra a;
  std::vector<std::pair<Index, Index>> coords;

  Index a_index(Index u1, Index u2) const;
  /// The product context exhibiting A^X inside Σ∨^X × Σ∧^X, mapping into A.
  ProductContext evaluation_context() const;
};

PredicateSpace predicate_space(const Poset& x);

/// hom_{0,1}(R^X, R) with the point evaluations as unit.
struct Repletion {
  Algebra prototype;
  std::optional<Prototype> kind;  // empty for user-supplied semilattices
  bool experimental = false;
  FunctionAlgebra power;
  FunctionAlgebra homs;
  MonotoneMap unit;
};

Repletion repletion(const Poset& x, const Algebra& r);
Repletion repletion(const Poset& x, Prototype kind);

struct ExtensionReport {
  std::size_t maps_checked = 0;
  std::size_t homs_enumerated = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// For every monotone u: X -> R, Φ_u(φ) = φ(u) must be a homomorphism
/// extending u along the unit, the only one (all homomorphisms out of the
/// repletion are enumerated), and u ↦ Φ_u must be monotone.
ExtensionReport unique_extension_check(const Repletion& rep);

struct SplitResult {
  AValuationPair pair;
  bool reconstructs = false;  // φ(U₁,U₂) = (φ₁(U₁), φ₂(U₂)) everywhere
  bool dominates = false;     // φ₁ >= φ₂
};

/// φ₁(U) = π₁ φ(U, ∅), φ₂(U) = π₂ φ(X, U) for φ in hom_{0,1}(A^X, A).
SplitResult split_phi(const PredicateSpace& space, const Table& phi);
/// Table of φ over A^X from a pair. Throws InvariantViolation if φ₁ ≱ φ₂.
Table pair_to_table(const PredicateSpace& space, const AValuationPair& pair);

/// C = X ∖ ⋃{U | φ₁(U) = 0}, Q = ⋂{U | φ₂(U) = 1}.
FormalLens to_formal_lens(const OpenSets& opens, const AValuationPair& pair);
/// φ₁(U) = [C ∩ U ≠ ∅], φ₂(U) = [Q ⊆ U].
AValuationPair from_formal_lens(const OpenSets& opens, const FormalLens& fl);

struct HCheck {
  bool first = true;
  bool second = true;
  /// Lexicographically least (U, V) open-set indices refuting each condition.
  std::optional<std::pair<Index, Index>> first_witness;
  std::optional<std::pair<Index, Index>> second_witness;

  bool both() const { return first && second; }
};

/// (H1′): φ₁(U) = 0 ⟹ φ₂(V) = φ₂(U ∪ V); (H2′): φ₂(U) = 1 ⟹ φ₁(V) = φ₁(U ∩ V).
HCheck check_H(const OpenSets& opens, const AValuationPair& pair);
/// (H1): α(U) = ⊥ ⟹ α(U ∪ V) = α(V); (H2): α(U) = ⊤ ⟹ α(U ∩ V) = α(V).
HCheck check_H_heckmann(const OpenSets& opens, const HeckmannValuation& alpha);

/// Structural checks short of the H-conditions.
bool is_valuation_shaped(const OpenSets& opens, const HeckmannValuation& alpha);  // monotone, ⊥ at ∅, ⊤ at X
bool is_pair_shaped(const OpenSets& opens, const AValuationPair& pair);  // bounded join-/meet-homs

/// ᾱᵢ = πᵢ ∘ α. Throws InvariantViolation unless α is a Heckmann valuation.
AValuationPair convert(const OpenSets& opens, const HeckmannValuation& alpha);
/// φ̄(U) = (φ₁(U), φ₂(U)). Throws InvariantViolation unless the pair passes (H1′)/(H2′).
HeckmannValuation convert_back(const OpenSets& opens, const AValuationPair& pair);
/// ᾱ(U₁, U₂) = α(U₁) ⩂ α(U₂) as a table over A^X.
Table heckmann_to_table(const PredicateSpace& space, const HeckmannValuation& alpha);

HeckmannValuation delta(const OpenSets& opens, Index x);
/// ⊤ if F ⊆ U, ⊥ if F ∩ U = ∅, m otherwise. Throws EmptyF.
HeckmannValuation delta_F(const OpenSets& opens, ElemSet f);

/// φ₁(U) = 0 iff L ∩ U = ∅; φ₂(U) = 1 iff L ⊆ U.
AValuationPair lens_to_valuation(const OpenSets& opens, ElemSet lens);
/// real_lens ∘ to_formal_lens. Throws HConditionViolated.
ElemSet valuation_to_lens(const OpenSets& opens, const AValuationPair& pair);

/// The three repletions of X with the A-repletion exhibited inside the
/// product of the other two.
struct ErraticSetup {
  Poset x;
  PredicateSpace space;
  Repletion hoare;
  Repletion smyth;
  Repletion a;
  std::vector<AValuationPair> pairs;  // pairs[k] splits a.homs element k
  ProductContext context;             // a.homs ⊆ hoare.homs × smyth.homs, into A ⊆ Σ∨ × Σ∧
};

ErraticSetup erratic_setup(const Poset& x);

struct PhiDecomposition {
  Table phi_h;  // hoare.homs -> Σ∨
  Table phi_s;  // smyth.homs -> Σ∧
  ProductDecomposition checks;
  /// Homomorphisms Ψ with Ψ ∘ π_H = π₁ ∘ Φ (resp. Ψ ∘ π_S = π₂ ∘ Φ).
  std::size_t h_candidates = 0;
  std::size_t s_candidates = 0;

  bool ok() const { return checks.ok() && h_candidates == 1 && s_candidates == 1; }
};

/// Φ_H = π₁ ∘ Φ ∘ ε_H and Φ_S = π₂ ∘ Φ ∘ ε_S, with commutation and uniqueness
/// verified by enumeration.
PhiDecomposition decompose_Phi(const ErraticSetup& setup, const Table& big_phi);

}  // namespace replete
