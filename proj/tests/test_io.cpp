#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "replete/io.hpp"
#include "support.hpp"

using namespace replete;
using namespace testing;
namespace fs = std::filesystem;

namespace {

ErrorCode parse_code(std::string_view text) {
  try {
    io::parse_poset_text(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse failure");
  return ErrorCode::InvariantViolation;
}

fs::path temp_file(const std::string& name, const std::string& body) {
  const fs::path p = fs::temp_directory_path() / ("replete_io_" + name);
  std::ofstream(p) << body;
  return p;
}

}  // namespace

TEST_CASE("poset text format") {
  const Poset p = io::parse_poset_text("# a vee\nelements: 3\n0 < 1   # left\n  0<2\n\n");
  CHECK(p == Poset::from_generators(3, {{0, 1}, {0, 2}}));
  CHECK(io::parse_poset_text("elements: 1") == Poset::chain(1));

  CHECK(parse_code("0 < 1\n") == ErrorCode::ParseError);
  CHECK(parse_code("elements: 2\n0 < 5\n") == ErrorCode::ParseError);
  CHECK(parse_code("elements: 2\n0 - 1\n") == ErrorCode::ParseError);
  CHECK(parse_code("elements: x\n") == ErrorCode::ParseError);
  CHECK(parse_code("elements: 2\nelements: 2\n") == ErrorCode::ParseError);
  CHECK(parse_code("") == ErrorCode::ParseError);
  CHECK(parse_code("elements: 2\n0 < 1\n1 < 0\n") == ErrorCode::AntisymmetryViolation);
  CHECK(parse_code("elements: 0\n") == ErrorCode::EmptyCarrier);

  try {
    io::parse_poset_text("elements: 2\n\n0 ? 1\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("poset round trips") {
  for (const auto& [name, p] : corpus()) {
    CAPTURE(name);
    CHECK(io::parse_poset_text(io::poset_to_text(p)) == p);
    CHECK(io::parse_poset_json(io::poset_to_json(p)) == p);
    CHECK(io::parse_poset_json(io::json::parse(io::poset_to_json(p).dump())) == p);
    // Only covers are written.
    CHECK(io::poset_to_json(p)["relations"].size() == p.covers().size());
  }
  CHECK_THROWS_AS(io::parse_poset_json(io::json{{"elements", -1}}), Error);
  CHECK_THROWS_AS(io::parse_poset_json(io::json{{"elements", 2}, {"relations", 3}}), Error);
  CHECK_THROWS_AS(io::parse_poset_json(io::json::array()), Error);
}

TEST_CASE("loading files") {
  const fs::path t = temp_file("vee.poset", "elements: 3\n0 < 1\n0 < 2\n");
  const fs::path j = temp_file("vee.json", R"({"elements": 3, "relations": [[0, 1], [0, 2]]})");
  CHECK(io::load_poset(t) == io::load_poset(j));
  CHECK_THROWS_AS(io::load_poset(fs::temp_directory_path() / "replete_io_missing.poset"), Error);
}

TEST_CASE("algebra json") {
  const Algebra a = make_prototype(Prototype::A);
  const io::json doc = io::algebra_to_json(a);
  CHECK(doc["signature"][0]["name"] == "choice");
  CHECK(doc["ops"]["choice"][0][2] == aval::may);
  const Algebra back = io::parse_algebra_json(doc);
  CHECK(back.carrier() == a.carrier());
  CHECK(back.tables() == a.tables());
  CHECK(back.label(aval::may) == "m");

  // Signature defaults to one binary "choice"; carriers may be files.
  const fs::path carrier = temp_file("chain2.poset", "elements: 2\n0 < 1\n");
  io::json by_file = io::json::parse(R"({"ops": {"choice": [[0, 1], [1, 1]]}})");
  by_file["carrier"] = carrier.filename().string();
  const Algebra j = io::parse_algebra_json(by_file, carrier.parent_path());
  CHECK(j.tables() == make_prototype(Prototype::SigmaJoin).tables());

  const fs::path alg = temp_file("alg.json", by_file.dump());
  CHECK(io::load_algebra(alg).tables() == j.tables());

  CHECK_THROWS_AS(io::parse_algebra_json(io::json{{"carrier", io::poset_to_json(sigma())}}), Error);
  const std::string chain2 = R"("carrier": {"elements": 2, "relations": [[0, 1]]})";
  CHECK_THROWS_AS(io::parse_algebra_json(io::json::parse("{" + chain2 + R"(, "ops": {"choice": [0, 1, 1, 1]}})")),
                  Error);
  // Not monotone.
  CHECK_THROWS_AS(
      io::parse_algebra_json(io::json::parse("{" + chain2 + R"(, "ops": {"choice": [[1, 0], [0, 0]]}})")), Error);
}

TEST_CASE("powerdomain output") {
  const SetPowerdomain pl = plotkin_pd(discrete(2));
  const io::json j = io::powerdomain_to_json("plotkin", pl);
  CHECK(j["kind"] == "plotkin");
  CHECK(j["elements"].size() == 3);
  CHECK(j["elements"][2] == io::json::array({0, 1}));
  CHECK(j["unit"] == io::json::array({0, 1}));
  CHECK(j["op"][0][1] == 2);

  const std::string dot = io::powerdomain_dot("plotkin", pl);
  CHECK(dot.find("\"L_{0}\" -> \"L_{0,1}\"") == std::string::npos);  // {0} and {0,1} are incomparable
  CHECK(dot.find("\"L_{0,1}\";") != std::string::npos);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  const std::string hdot = io::powerdomain_dot("hoare", hoare_pd(discrete(2)));
  CHECK(hdot.find("\"L_{0}\" -> \"L_{0,1}\"") != std::string::npos);

  const FormalLensAlgebra fl = formal_lens_algebra(sigma());
  const io::json fj = io::powerdomain_to_json(fl);
  CHECK(fj["kind"] == "formal");
  CHECK(fj["elements"].size() == fl.lenses.size());
  CHECK(io::powerdomain_dot(fl).find("\"FL_{0,1}_{1}\"") != std::string::npos);
  // Output is a pure function of the input.
  CHECK(io::powerdomain_to_json(fl).dump() == fj.dump());
}

TEST_CASE("valuation and transformer output") {
  const OpenSets o = open_sets(discrete(2));
  const io::json v = io::valuation_to_json(o, delta_F(o, ElemSet::of({0, 1})));
  CHECK(v["values"] == io::json::array({"bot", "m", "m", "top"}));
  CHECK(v["open_sets"][3] == io::json::array({0, 1}));
  CHECK(io::aval_name(aval::top) == "top");
  CHECK(io::pair_to_json(AValuationPair{{0, 1}, {0, 1}})["phi2"] == io::json::array({0, 1}));

  const Repletion rep = repletion(sigma(), Prototype::SigmaJoin);
  const io::json r = io::repletion_to_json(rep);
  CHECK(r["prototype"] == "sigma-join");
  CHECK(r["elements"].size() == 2);

  const TransformerSpace space = transformer_space(sigma(), sigma(), Prototype::SigmaMeet);
  const auto s = enumerate_predicate_transformers(space).front();
  const io::json t = io::transformer_to_json(space, s);
  CHECK(t["flags"]["demonic"] == true);
  CHECK(t["table"] == io::json(s.table));
}
