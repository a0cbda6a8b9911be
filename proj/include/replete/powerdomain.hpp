#pragma once

#include <optional>
#include <string>
#include <vector>

#include "replete/algebra.hpp"
#include "replete/poset.hpp"

namespace replete {

/// A pair (C, Q) of a nonempty down-set and a nonempty up-set that meet.
struct FormalLens {
  ElemSet c;
  ElemSet q;

  friend bool operator==(const FormalLens&, const FormalLens&) = default;
  friend auto operator<=>(const FormalLens&, const FormalLens&) = default;
};

/// Throws InvariantViolation unless (c, q) is a formal lens of x.
FormalLens make_formal_lens(const Poset& x, ElemSet c, ElemSet q);
std::string to_string(const FormalLens& fl);

/// Powerdomain whose elements are subsets of the base poset.
struct SetPowerdomain {
  Algebra algebra;
  Poset base;
  std::vector<ElemSet> sets;  // element i of the algebra, ascending by bits
  MonotoneMap unit;           // base -> algebra carrier

  std::optional<Index> index_of(ElemSet s) const;
};

struct FormalLensAlgebra {
  Algebra algebra;
  Poset base;
  std::vector<FormalLens> lenses;  // ascending by (c, q)
  MonotoneMap unit;

  std::optional<Index> index_of(const FormalLens& fl) const;
};

/// Nonempty down-sets under inclusion with union; unit x ↦ ↓x.
SetPowerdomain hoare_pd(const Poset& x);
/// Nonempty up-sets under reverse inclusion with union; unit x ↦ ↑x.
SetPowerdomain smyth_pd(const Poset& x);
/// Nonempty order-convex sets (lenses) under the Egli-Milner order, with
/// L ⩂ L' the convex hull of L ∪ L'; unit x ↦ {x}.
SetPowerdomain plotkin_pd(const Poset& x);
/// All formal lenses; C by inclusion, Q by reverse inclusion, both joined by
/// union; unit x ↦ (↓x, ↑x).
FormalLensAlgebra formal_lens_algebra(const Poset& x);

/// L ⊆ ↓L' and L' ⊆ ↑L.
bool em_leq(const Poset& x, ElemSet l1, ElemSet l2);

ElemSet real_lens(const FormalLens& fl);
/// (↓(C ∩ Q), ↑(C ∩ Q)).
FormalLens normalize(const Poset& x, const FormalLens& fl);

/// C ⊆ ↓(C ∩ Q). Q is open, so it is the least open set to test.
bool is_quasilens(const Poset& x, const FormalLens& fl);
/// C ⊆ ↓(C ∩ U) for every up-set U ⊇ Q.
bool is_quasilens_all_opens(const Poset& x, const FormalLens& fl);

/// Join of f over C, in a (J)-algebra. Throws LawUnsatisfied otherwise.
Index hoare_extend(const Algebra& b, const MonotoneMap& f, ElemSet c);
/// Meet of f over Q, in an (M)-algebra.
Index smyth_extend(const Algebra& b, const MonotoneMap& f, ElemSet q);
/// ⩂ of f over L, folded left in ascending element order, in a semilattice.
Index plotkin_extend(const Algebra& b, const MonotoneMap& f, ElemSet l);

enum class PowerdomainKind { Hoare, Smyth, Plotkin };

/// Extension of f to every element of `pd`, as a table pd -> b.
Table extension_table(PowerdomainKind kind, const SetPowerdomain& pd, const Algebra& b, const MonotoneMap& f);

/// Every semilattice with monotone operation on at most `max_size`
/// elements, one per isomorphism class. Computed once per size.
const std::vector<Algebra>& semilattice_family(std::size_t max_size);

}  // namespace replete
