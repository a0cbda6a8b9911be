#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "replete/io.hpp"

namespace fs = std::filesystem;
using replete::io::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string("\"") + REPLETE_CLI_PATH + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string corpus(const std::string& name) { return std::string("\"") + REPLETE_CORPUS_DIR + "/" + name + "\""; }

}  // namespace

TEST_CASE("powerdomain subcommand") {
  const Run r = run("pd --kind plotkin " + corpus("discrete2.poset"));
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["kind"] == "plotkin");
  CHECK(j["elements"].size() == 3);

  const Run dot = run("pd --kind hoare --dot " + corpus("chain3.poset"));
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("digraph", 0) == 0);
  CHECK(dot.out.find("\"L_{0,1}\" -> \"L_{0,1,2}\"") != std::string::npos);

  CHECK(json::parse(run("pd --kind formal " + corpus("discrete2.poset")).out)["elements"].size() == 7);
  CHECK(run("--quiet pd --kind smyth " + corpus("vee.poset")).out.empty());
}

TEST_CASE("repletion, lenses and valuations") {
  const Run r = run("repletion --prototype A " + corpus("discrete2.poset"));
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["elements"].size() == 7);

  const Run l = run("lenses " + corpus("discrete2.poset"));
  CHECK(l.code == 0);
  CHECK(l.out.find("real lenses: 3") != std::string::npos);
  CHECK(l.out.find("formal lenses: 7") != std::string::npos);
  const json lj = json::parse(run("lenses --json " + corpus("discrete2.poset")).out);
  CHECK(lj["real"].size() == 3);
  CHECK(lj["formal"].size() == 7);

  const json v = json::parse(run("valuations --json " + corpus("discrete2.poset")).out);
  REQUIRE(v["valuations"].size() == 7);
  std::size_t heckmann = 0;
  for (const json& row : v["valuations"]) heckmann += row.contains("valuation");
  CHECK(heckmann == 3);
}

TEST_CASE("transformers subcommand") {
  const Run r = run("transformers --prototype A " + corpus("discrete2.poset") + " " + corpus("discrete2.poset"));
  REQUIRE(r.code == 0);
  CHECK(r.out.find("predicate transformers: 49") != std::string::npos);
  std::size_t plotkin = 0, pos = 0;
  while ((pos = r.out.find("]  plotkin\n", pos)) != std::string::npos) ++plotkin, ++pos;
  CHECK(plotkin == 9);
}

TEST_CASE("verify subcommand and determinism") {
  const Run a = run("verify --suite laws --json " + corpus(""));
  const Run b = run("verify --suite laws --json " + corpus(""));
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out)["failed"] == 0);

  const Run h = run("verify --suite hoare " + corpus("vee.poset"));
  CHECK(h.code == 0);
  CHECK(h.out.find("PASS  hoare-representation[vee]") != std::string::npos);

  CHECK(run("pd --kind plotkin " + corpus("diamond.poset")).out ==
        run("pd --kind plotkin " + corpus("diamond.poset")).out);
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 1);
  CHECK(run("pd --kind nonsense " + corpus("vee.poset")).code == 1);
  CHECK(run("verify --suite nonsense " + corpus("vee.poset")).code == 1);
  CHECK(run("pd " + corpus("missing.poset")).code == 1);
  CHECK(run("transformers --prototype B " + corpus("one.poset") + " " + corpus("one.poset")).code == 1);
  CHECK(run("--help").code == 0);

  const fs::path wide = fs::temp_directory_path() / "replete_cli_wide.poset";
  std::ofstream(wide) << "elements: 15\n";
  CHECK(run("pd --kind hoare \"" + wide.string() + "\"").code == 3);
  const fs::path bad = fs::temp_directory_path() / "replete_cli_bad.poset";
  std::ofstream(bad) << "elements: 2\n0 < 1\n1 < 0\n";
  CHECK(run("lenses \"" + bad.string() + "\"").code == 1);
}
