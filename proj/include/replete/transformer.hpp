#pragma once

#include <string>
#include <vector>

#include "replete/algebra.hpp"
#include "replete/powerdomain.hpp"
#include "replete/valuation.hpp"

namespace replete {

/// Everything needed to move between state and predicate transformers from
/// X to Y over one prototype.
struct TransformerSpace {
  Prototype kind;
  Algebra r;
  Poset x;
  Poset y;
  PredicateSpace preds_x;
  PredicateSpace preds_y;
  FunctionAlgebra power_x;  // R^X
  FunctionAlgebra power_y;  // R^Y
  Repletion rep_y;          // hom_{0,1}(R^Y, R)
  /// Pointwise max and min on power_y, at u * |power_y| + v.
  Table join_y;
  Table meet_y;
};

TransformerSpace transformer_space(const Poset& x, const Poset& y, Prototype kind);

/// Monotone t: X -> hom_{0,1}(R^Y, R); table entries index rep_y.homs.
struct StateTransformer {
  Table table;
  friend bool operator==(const StateTransformer&, const StateTransformer&) = default;
};

/// s in hom_{0,1}(R^Y, R^X); table maps power_y indices to power_x indices.
struct PredicateTransformer {
  Table table;
  friend bool operator==(const PredicateTransformer&, const PredicateTransformer&) = default;
};

std::vector<StateTransformer> enumerate_state_transformers(const TransformerSpace& space);
std::vector<PredicateTransformer> enumerate_predicate_transformers(const TransformerSpace& space);

/// s(u)(x) = t(x)(u).
PredicateTransformer transpose(const TransformerSpace& space, const StateTransformer& t);
/// t(x)(u) = s(u)(x). Throws InvariantViolation if some t(x) leaves the repletion.
StateTransformer untranspose(const TransformerSpace& space, const PredicateTransformer& s);

struct Classification {
  bool angelic = false;  // Σ: preserves ∅, Y and unions
  bool demonic = false;  // Σ: preserves ∅, Y and intersections
  bool erratic = false;  // A: splits into s₁ ⊇ s₂
  bool plotkin = false;  // A: erratic and (H1)/(H2) hold at every point

  std::string describe() const;
};

Classification classify(const TransformerSpace& space, const PredicateTransformer& s);

struct ErraticDecomposition {
  Table s1;  // Σ∨^Y -> Σ∨^X, indices are open sets
  Table s2;  // Σ∧^Y -> Σ∧^X
  ProductDecomposition checks;
  bool dominates = false;  // s₁(U) ⊇ s₂(U) for every open U

  bool ok() const { return checks.ok() && dominates; }
};

/// Throws WrongPrototype unless the space is over A.
ErraticDecomposition decompose_erratic(const TransformerSpace& space, const PredicateTransformer& s);

/// The monotone map X -> PD(Y) a state transformer stands for: down-sets for
/// Σ∨, up-sets for Σ∧, lenses for A (throws HConditionViolated when t(x)
/// is not a Heckmann valuation). Entries index hoare_pd / smyth_pd / plotkin_pd.
Table powerdomain_map(const TransformerSpace& space, const SetPowerdomain& pd, const StateTransformer& t);

/// The powerdomain matching the space's prototype.
SetPowerdomain matching_powerdomain(const TransformerSpace& space);

}  // namespace replete
