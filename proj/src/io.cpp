#include "replete/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace replete::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::size_t parse_count(std::string_view s, std::size_t line) {
  s = trim(s);
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    fail("line " + std::to_string(line) + ": expected a number, got '" + std::string(s) + "'");
  return v;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json hasse_json(const Poset& p) {
  json out = json::array();
  for (auto [a, b] : p.covers()) out.push_back({a, b});
  return out;
}

json op_json(const Algebra& alg) {
  json rows = json::array();
  for (Index a = 0; a < alg.size(); ++a) {
    json row = json::array();
    for (Index b = 0; b < alg.size(); ++b) row.push_back(alg.op(a, b));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string members_name(ElemSet s) {
  std::string out = "{";
  bool first = true;
  for (Index i : s.members()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

template <class Name>
std::string hasse_dot(std::string_view title, const Poset& order, Name name) {
  std::ostringstream out;
  out << "digraph \"" << title << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
  for (Index i = 0; i < order.size(); ++i) out << "  \"" << name(i) << "\";\n";
  for (auto [a, b] : order.covers()) out << "  \"" << name(a) << "\" -> \"" << name(b) << "\";\n";
  out << "}\n";
  return out.str();
}

// Nested arrays in big-endian argument order.
json nest(const Table& table, std::size_t n, unsigned arity, std::size_t offset) {
  if (arity == 0) return table[offset];
  json out = json::array();
  std::size_t stride = 1;
  for (unsigned k = 1; k < arity; ++k) stride *= n;
  for (std::size_t i = 0; i < n; ++i) out.push_back(nest(table, n, arity - 1, offset + i * stride));
  return out;
}

void flatten(const json& j, unsigned arity, Table& out) {
  if (arity == 0) {
    if (!j.is_number_unsigned()) fail("operation entries must be nonnegative integers");
    out.push_back(j.get<Index>());
    return;
  }
  if (!j.is_array()) fail("operation table nesting is shallower than the arity");
  for (const json& e : j) flatten(e, arity - 1, out);
}

}  // namespace

Poset parse_poset_text(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<std::pair<Index, Index>> rel;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.starts_with("elements:")) {
      if (n) fail("line " + std::to_string(line_no) + ": duplicate 'elements:'");
      n = parse_count(line.substr(9), line_no);
      continue;
    }
    const auto lt = line.find('<');
    if (lt == std::string_view::npos) fail("line " + std::to_string(line_no) + ": expected 'i < j'");
    if (!n) fail("line " + std::to_string(line_no) + ": relation before 'elements:'");
    const std::size_t a = parse_count(line.substr(0, lt), line_no);
    const std::size_t b = parse_count(line.substr(lt + 1), line_no);
    if (a >= *n || b >= *n) fail("line " + std::to_string(line_no) + ": element out of range");
    rel.emplace_back(static_cast<Index>(a), static_cast<Index>(b));
  }
  if (!n) fail("missing 'elements:' line");
  return Poset::from_generators(*n, rel);
}

Poset parse_poset_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_number_unsigned())
    fail("poset JSON needs a nonnegative integer 'elements'");
  const auto n = doc["elements"].get<std::size_t>();
  std::vector<std::pair<Index, Index>> rel;
  if (doc.contains("relations")) {
    if (!doc["relations"].is_array()) fail("'relations' must be an array");
    for (const json& r : doc["relations"]) {
      if (!r.is_array() || r.size() != 2 || !r[0].is_number_unsigned() || !r[1].is_number_unsigned())
        fail("each relation must be a pair [i, j]");
      const auto a = r[0].get<std::size_t>(), b = r[1].get<std::size_t>();
      if (a >= n || b >= n) fail("relation element out of range");
      rel.emplace_back(static_cast<Index>(a), static_cast<Index>(b));
    }
  }
  return Poset::from_generators(n, rel);
}

Poset load_poset(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  if (path.extension() == ".json") {
    try {
      return parse_poset_json(json::parse(text));
    } catch (const json::exception& e) {
      fail(path.string() + ": " + e.what());
    }
  }
  return parse_poset_text(text);
}

std::string poset_to_text(const Poset& p) {
  std::string out = "elements: " + std::to_string(p.size()) + "\n";
  for (auto [a, b] : p.covers()) out += std::to_string(a) + " < " + std::to_string(b) + "\n";
  return out;
}

json poset_to_json(const Poset& p) { return json{{"elements", p.size()}, {"relations", hasse_json(p)}}; }

Algebra parse_algebra_json(const json& doc, const std::filesystem::path& base) {
  if (!doc.is_object()) fail("algebra JSON must be an object");
  if (!doc.contains("carrier")) fail("algebra JSON needs a 'carrier'");
  const json& c = doc["carrier"];
  Poset carrier = c.is_string() ? load_poset(base / c.get<std::string>()) : parse_poset_json(c);

  std::vector<OpSymbol> ops;
  if (doc.contains("signature")) {
    for (const json& s : doc["signature"]) {
      if (!s.is_object() || !s.contains("name") || !s.contains("arity")) fail("signature entries need name and arity");
      ops.push_back(OpSymbol{s["name"].get<std::string>(), s["arity"].get<unsigned>()});
    }
  } else {
    ops = semilattice_signature().ops();
  }
  Signature sig(std::move(ops));
  if (!doc.contains("ops") || !doc["ops"].is_object()) fail("algebra JSON needs an 'ops' object");
  std::vector<Table> tables;
  for (const OpSymbol& op : sig.ops()) {
    if (!doc["ops"].contains(op.name)) fail("missing table for '" + op.name + "'");
    Table t;
    flatten(doc["ops"][op.name], op.arity, t);
    tables.push_back(std::move(t));
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) labels = doc["labels"].get<std::vector<std::string>>();
  return Algebra(std::move(carrier), std::move(sig), std::move(tables), std::move(labels));
}

Algebra load_algebra(const std::filesystem::path& path) {
  try {
    return parse_algebra_json(json::parse(read_file(path)), path.parent_path());
  } catch (const json::exception& e) {
    fail(path.string() + ": " + e.what());
  }
}

json algebra_to_json(const Algebra& alg) {
  json sig = json::array();
  json ops = json::object();
  for (std::size_t k = 0; k < alg.signature().size(); ++k) {
    const OpSymbol& op = alg.signature()[k];
    sig.push_back({{"name", op.name}, {"arity", op.arity}});
    ops[op.name] = nest(alg.table(k), alg.size(), op.arity, 0);
  }
  json out{{"carrier", poset_to_json(alg.carrier())}, {"signature", sig}, {"ops", ops}};
  if (alg.has_labels()) {
    json labels = json::array();
    for (Index i = 0; i < alg.size(); ++i) labels.push_back(alg.label(i));
    out["labels"] = labels;
  }
  return out;
}

json set_json(ElemSet s) { return s.members(); }

json powerdomain_to_json(std::string_view kind, const SetPowerdomain& pd) {
  json elements = json::array();
  for (ElemSet s : pd.sets) elements.push_back(set_json(s));
  return json{{"kind", kind},
              {"base", poset_to_json(pd.base)},
              {"elements", elements},
              {"covers", hasse_json(pd.algebra.carrier())},
              {"op", op_json(pd.algebra)},
              {"unit", pd.unit.table()}};
}

json powerdomain_to_json(const FormalLensAlgebra& fl) {
  json elements = json::array();
  for (const FormalLens& l : fl.lenses) elements.push_back({{"C", set_json(l.c)}, {"Q", set_json(l.q)}});
  return json{{"kind", "formal"},
              {"base", poset_to_json(fl.base)},
              {"elements", elements},
              {"covers", hasse_json(fl.algebra.carrier())},
              {"op", op_json(fl.algebra)},
              {"unit", fl.unit.table()}};
}

std::string powerdomain_dot(std::string_view kind, const SetPowerdomain& pd) {
  return hasse_dot(kind, pd.algebra.carrier(), [&](Index i) { return "L_" + members_name(pd.sets[i]); });
}

std::string powerdomain_dot(const FormalLensAlgebra& fl) {
  return hasse_dot("formal", fl.algebra.carrier(), [&](Index i) {
    return "FL_" + members_name(fl.lenses[i].c) + "_" + members_name(fl.lenses[i].q);
  });
}

std::string_view aval_name(Index v) {
  switch (v) {
    case aval::bot: return "bot";
    case aval::may: return "m";
    case aval::top: return "top";
  }
  return "?";
}

json valuation_to_json(const OpenSets& opens, const HeckmannValuation& alpha) {
  json sets = json::array();
  json values = json::array();
  for (std::size_t i = 0; i < opens.size(); ++i) {
    sets.push_back(set_json(opens.sets[i]));
    values.push_back(aval_name(alpha.table[i]));
  }
  return json{{"owner", poset_to_json(opens.space)}, {"open_sets", sets}, {"values", values}};
}

json pair_to_json(const AValuationPair& pair) { return json{{"phi1", pair.phi1}, {"phi2", pair.phi2}}; }

json repletion_to_json(const Repletion& rep) {
  json out{{"prototype", rep.kind ? to_string(*rep.kind) : std::string("custom")},
           {"experimental", rep.experimental},
           {"predicates", rep.power.maps},
           {"elements", rep.homs.maps},
           {"covers", hasse_json(rep.homs.algebra.carrier())},
           {"op", op_json(rep.homs.algebra)},
           {"unit", rep.unit.table()}};
  return out;
}

json transformer_to_json(const TransformerSpace& space, const PredicateTransformer& s) {
  const Classification c = classify(space, s);
  return json{{"prototype", to_string(space.kind)},
              {"predicates_y", space.power_y.maps},
              {"predicates_x", space.power_x.maps},
              {"table", s.table},
              {"state", untranspose(space, s).table},
              {"flags",
               {{"angelic", c.angelic}, {"demonic", c.demonic}, {"erratic", c.erratic}, {"plotkin", c.plotkin}}}};
}

}  // namespace replete::io
