#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "replete/algebra.hpp"
#include "replete/powerdomain.hpp"
#include "replete/transformer.hpp"
#include "replete/valuation.hpp"

namespace replete::io {

using nlohmann::json;

/// `elements: n` followed by `i < j` lines; `#` starts a comment.
/// Throws ParseError, or the poset validation errors for cyclic input.
Poset parse_poset_text(std::string_view text);
/// {"elements": n, "relations": [[i, j], ...]}.
Poset parse_poset_json(const json& doc);
/// Dispatches on the `.json` extension.
Poset load_poset(const std::filesystem::path& path);

std::string poset_to_text(const Poset& p);
/// Relations are the Hasse covers.
json poset_to_json(const Poset& p);

/// {"carrier": <poset json or file name>, "signature": [{"name", "arity"}],
///  "ops": {"name": nested arrays}}; `base` resolves carrier file names.
Algebra parse_algebra_json(const json& doc, const std::filesystem::path& base = {});
Algebra load_algebra(const std::filesystem::path& path);
json algebra_to_json(const Algebra& alg);

json set_json(ElemSet s);
json powerdomain_to_json(std::string_view kind, const SetPowerdomain& pd);
json powerdomain_to_json(const FormalLensAlgebra& fl);

/// Hasse diagram drawn bottom-up; nodes named L_{i,j,...} after their members.
std::string powerdomain_dot(std::string_view kind, const SetPowerdomain& pd);
/// Nodes named FL_{C}_{Q}.
std::string powerdomain_dot(const FormalLensAlgebra& fl);

std::string_view aval_name(Index v);
json valuation_to_json(const OpenSets& opens, const HeckmannValuation& alpha);
json pair_to_json(const AValuationPair& pair);

json repletion_to_json(const Repletion& rep);
json transformer_to_json(const TransformerSpace& space, const PredicateTransformer& s);

}  // namespace replete::io
