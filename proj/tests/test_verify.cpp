#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "replete/verify.hpp"
#include "support.hpp"

using namespace replete;
using namespace testing;
namespace fs = std::filesystem;

namespace {

std::vector<verify::CorpusEntry> small_corpus() {
  std::vector<verify::CorpusEntry> out;
  for (auto& [name, p] : corpus())
    if (p.size() <= 3) out.push_back({name, p});
  return out;
}

}  // namespace

TEST_CASE("suite names") {
  using verify::Suite;
  for (Suite s : {Suite::All, Suite::Hoare, Suite::Smyth, Suite::Plotkin, Suite::Repletion, Suite::Transformers,
                  Suite::Laws})
    CHECK(verify::parse_suite(verify::to_string(s)) == s);
  CHECK_FALSE(verify::parse_suite("bogus").has_value());
}

TEST_CASE("every suite passes on small posets") {
  const auto c = small_corpus();
  for (auto s : {verify::Suite::Laws, verify::Suite::Hoare, verify::Suite::Smyth, verify::Suite::Plotkin,
                 verify::Suite::Repletion}) {
    CAPTURE(verify::to_string(s));
    const verify::Report r = verify::run_suite(s, c);
    CHECK(r.ok());
    CHECK_FALSE(r.checks.empty());
    for (const auto& check : r.checks) {
      CAPTURE(check.name);
      CHECK(check.passed);
      CHECK(check.counterexample.empty());
      CHECK_FALSE(check.property.empty());
    }
  }
  // Duplicate corpus entries are checked once.
  auto twice = c;
  twice.insert(twice.end(), c.begin(), c.end());
  CHECK(verify::run_suite(verify::Suite::Hoare, twice).checks.size() ==
        verify::run_suite(verify::Suite::Hoare, c).checks.size());
}

TEST_CASE("individual checks") {
  CHECK(verify::flat_counts().passed);
  CHECK(verify::plotkin_of_two_chain().passed);
  CHECK(verify::transformers(Prototype::A, "discrete2", discrete(2), "sigma", sigma()).passed);
  const verify::Check h = verify::hoare_representation("vee", Poset::from_generators(3, {{0, 1}, {0, 2}}));
  CHECK(h.passed);
  CHECK(h.name == "hoare-representation[vee]");
}

TEST_CASE("reports") {
  verify::Report r;
  r.checks.push_back({"good", "holds", true, ""});
  r.checks.push_back({"bad", "should hold", false, "x = 1"});
  CHECK_FALSE(r.ok());
  CHECK(r.failures() == 1);

  const std::string text = verify::report_to_text(r);
  CHECK(text.find("PASS  good\n") != std::string::npos);
  CHECK(text.find("FAIL  bad\n") != std::string::npos);
  CHECK(text.find("counterexample: x = 1") != std::string::npos);
  CHECK(text.find("2 checks, 1 failed") != std::string::npos);
  CHECK(verify::report_to_text(r, true).find("good") == std::string::npos);

  const io::json j = verify::report_to_json(r);
  CHECK(j["total"] == 2);
  CHECK(j["failed"] == 1);
  CHECK(j["checks"][1]["counterexample"] == "x = 1");
  CHECK_FALSE(j["checks"][0].contains("counterexample"));
  CHECK_FALSE(j.contains("seconds"));
}

TEST_CASE("resource caps escape the check guard") {
  const std::vector<verify::CorpusEntry> huge{{"wide", Poset::antichain(15)}};
  try {
    verify::run_suite(verify::Suite::Hoare, huge);
    FAIL("expected a resource error");
  } catch (const Error& e) {
    CHECK((e.code() == ErrorCode::ResourceCapExceeded || e.code() == ErrorCode::CarrierTooLarge));
  }
}

TEST_CASE("corpus loading") {
  const fs::path dir = fs::temp_directory_path() / "replete_verify_corpus";
  fs::remove_all(dir);
  fs::create_directories(dir);
  CHECK_THROWS_AS(verify::load_corpus(dir), Error);
  std::ofstream(dir / "b.poset") << "elements: 2\n0 < 1\n";
  std::ofstream(dir / "a.json") << R"({"elements": 2})";
  std::ofstream(dir / "notes.txt") << "ignored";
  const auto c = verify::load_corpus(dir);
  REQUIRE(c.size() == 2);
  CHECK(c[0].name == "a");
  CHECK(c[0].poset == discrete(2));
  CHECK(c[1].poset == sigma());
  CHECK(verify::load_corpus(dir / "b.poset").size() == 1);
  fs::remove_all(dir);
}
