#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "replete/io.hpp"
#include "replete/powerdomain.hpp"

namespace replete::verify {

struct Check {
  std::string name;
  /// The property being checked, stated in words.
  std::string property;
  bool passed = true;
  /// First refuting instance; set exactly when the check failed.
  std::string counterexample;
};

struct Report {
  std::vector<Check> checks;
  double seconds = 0.0;

  bool ok() const;
  std::size_t failures() const;
};

enum class Suite { All, Hoare, Smyth, Plotkin, Repletion, Transformers, Laws };

std::optional<Suite> parse_suite(std::string_view name);
std::string to_string(Suite suite);

struct CorpusEntry {
  std::string name;
  Poset poset;
};

/// A single poset file, or every *.poset / *.json file of a directory in name order.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path);

Report run_suite(Suite suite, const std::vector<CorpusEntry>& corpus);

io::json report_to_json(const Report& report);
std::string report_to_text(const Report& report, bool failures_only = false);

// Individual checks. `name` labels the poset in check names.

/// Hoare, Smyth and formal-lens algebras against their hom_{0,1} representations.
Check hoare_representation(const std::string& name, const Poset& x);
Check smyth_representation(const std::string& name, const Poset& x);
Check formal_lens_representation(const std::string& name, const Poset& x);

/// Unique extension of every monotone f: X -> B along the unit, for every
/// test-family B satisfying the powerdomain's law.
Check freeness(PowerdomainKind kind, const std::string& name, const Poset& x);

Check unique_extension(Prototype kind, const std::string& name, const Poset& x);
/// hom_{0,1}(R^X, R) is closed under the pointwise operation and holds only homomorphisms.
Check op_closure(Prototype kind, const std::string& name, const Poset& x);

/// Generated subalgebra = H-pairs = lens image, with the Egli-Milner order and
/// the convex-hull operation transported exactly.
Check plotkin_identification(const std::string& name, const Poset& x);
/// Lens <-> valuation round trips and order agreement.
Check lens_bridges(const std::string& name, const Poset& x);
/// H-condition consequences on formal lenses and raw pairs.
Check h_lemmas(const std::string& name, const Poset& x);
/// Heckmann valuations <-> pairs, δ constructions.
Check valuation_conversions(const std::string& name, const Poset& x);
/// Every φ in hom_{0,1}(A^X, A) splits and reconstructs with φ₁ >= φ₂.
Check split_reconstruction(const std::string& name, const Poset& x);
/// Every Φ: hom_{0,1}(A^X, A) -> A factors uniquely through the Hoare and Smyth repletions.
Check phi_decomposition(const std::string& name, const Poset& x);

/// Prototype laws, and inheritance by the power algebras over `corpus`.
Check laws(const std::vector<CorpusEntry>& corpus);

/// Transpose bijection and order isomorphism, erratic decomposition and the
/// bijection with monotone maps into the matching powerdomain.
Check transformers(Prototype kind, const std::string& x_name, const Poset& x, const std::string& y_name,
                   const Poset& y);

/// Real and formal lens counts of the two-point antichain against the repletion size.
Check flat_counts();
/// The Plotkin powerdomain of the two-chain is isomorphic to A.
Check plotkin_of_two_chain();

}  // namespace replete::verify
