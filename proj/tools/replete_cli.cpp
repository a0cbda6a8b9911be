// Command-line front end: build powerdomains and repletions of a finite poset,
// list lenses and valuations, classify transformers and run the check suites.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "replete/io.hpp"
#include "replete/transformer.hpp"
#include "replete/verify.hpp"

namespace {

using namespace replete;
using io::json;

constexpr int kParseError = 1;
constexpr int kSuiteFailure = 2;
constexpr int kResourceCap = 3;

struct Options {
  bool json = false;
  bool dot = false;
  bool quiet = false;
};

Prototype require_prototype(const std::string& name) {
  auto p = parse_prototype(name);
  if (!p) throw Error(ErrorCode::ParseError, "unknown prototype '" + name + "'");
  return *p;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string bits(const std::vector<std::uint8_t>& v) {
  std::string out;
  for (auto b : v) out += b ? '1' : '0';
  return out;
}

int run_pd(const Options& opt, const std::string& kind, const std::string& path) {
  const Poset x = io::load_poset(path);
  if (kind == "formal") {
    const FormalLensAlgebra fl = formal_lens_algebra(x);
    if (!opt.quiet) std::cout << (opt.dot ? io::powerdomain_dot(fl) : io::powerdomain_to_json(fl).dump(2) + "\n");
    return 0;
  }
  SetPowerdomain pd = kind == "hoare" ? hoare_pd(x) : kind == "smyth" ? smyth_pd(x) : plotkin_pd(x);
  if (!opt.quiet) std::cout << (opt.dot ? io::powerdomain_dot(kind, pd) : io::powerdomain_to_json(kind, pd).dump(2) + "\n");
  return 0;
}

int run_repletion(const Options& opt, const std::string& prototype, const std::string& algebra_path,
                  const std::string& path) {
  const Poset x = io::load_poset(path);
  const Algebra r = algebra_path.empty() ? make_prototype(require_prototype(prototype)) : io::load_algebra(algebra_path);
  const Repletion rep = repletion(x, r);
  if (!opt.quiet) std::cout << io::repletion_to_json(rep).dump(2) << "\n";
  return 0;
}

int run_lenses(const Options& opt, const std::string& path) {
  const Poset x = io::load_poset(path);
  const SetPowerdomain pd = plotkin_pd(x);
  const FormalLensAlgebra fl = formal_lens_algebra(x);
  if (opt.quiet) return 0;
  if (opt.json) {
    json real = json::array(), formal = json::array();
    for (ElemSet l : pd.sets) real.push_back(io::set_json(l));
    for (const FormalLens& l : fl.lenses) {
      const FormalLens n = normalize(x, l);
      formal.push_back({{"C", io::set_json(l.c)},
                        {"Q", io::set_json(l.q)},
                        {"lens", io::set_json(real_lens(l))},
                        {"normalized", {{"C", io::set_json(n.c)}, {"Q", io::set_json(n.q)}}},
                        {"quasilens", is_quasilens(x, l)}});
    }
    std::cout << json{{"real", real}, {"formal", formal}}.dump(2) << "\n";
    return 0;
  }
  std::cout << "real lenses: " << pd.sets.size() << "\n";
  for (ElemSet l : pd.sets) std::cout << "  " << to_string(l) << "\n";
  std::cout << "formal lenses: " << fl.lenses.size() << "\n";
  for (const FormalLens& l : fl.lenses) {
    std::cout << "  " << to_string(l) << "  lens " << to_string(real_lens(l)) << "  normalized "
              << to_string(normalize(x, l)) << "  quasilens " << yes(is_quasilens(x, l)) << "\n";
  }
  return 0;
}

int run_valuations(const Options& opt, const std::string& path) {
  const Poset x = io::load_poset(path);
  const PredicateSpace space = predicate_space(x);
  const Repletion rep = repletion(x, Prototype::A);
  if (opt.quiet) return 0;
  json rows = json::array();
  if (!opt.json) {
    std::cout << "open sets:";
    for (ElemSet u : space.opens.sets) std::cout << " " << to_string(u);
    std::cout << "\n";
  }
  for (const Table& phi : rep.homs.maps) {
    const AValuationPair pair = split_phi(space, phi).pair;
    const HCheck h = check_H(space.opens, pair);
    const FormalLens fl = to_formal_lens(space.opens, pair);
    if (opt.json) {
      json row = io::pair_to_json(pair);
      row["formal_lens"] = {{"C", io::set_json(fl.c)}, {"Q", io::set_json(fl.q)}};
      row["H1'"] = h.first;
      row["H2'"] = h.second;
      if (h.both()) row["valuation"] = io::valuation_to_json(space.opens, convert_back(space.opens, pair))["values"];
      rows.push_back(std::move(row));
    } else {
      std::cout << "  phi1=" << bits(pair.phi1) << " phi2=" << bits(pair.phi2) << "  " << to_string(fl)
                << "  H1'=" << yes(h.first) << " H2'=" << yes(h.second);
      if (h.both()) std::cout << "  lens " << to_string(real_lens(fl));
      std::cout << "\n";
    }
  }
  if (opt.json) std::cout << json{{"owner", io::poset_to_json(x)}, {"valuations", rows}}.dump(2) << "\n";
  return 0;
}

std::string most_specific(Prototype kind, const Classification& c) {
  if (kind == Prototype::A) return c.plotkin ? "plotkin" : c.erratic ? "erratic" : "none";
  return c.describe();
}

int run_transformers(const Options& opt, const std::string& prototype, const std::string& px, const std::string& py) {
  const Prototype kind = require_prototype(prototype);
  const TransformerSpace space = transformer_space(io::load_poset(px), io::load_poset(py), kind);
  const auto preds = enumerate_predicate_transformers(space);
  const auto states = enumerate_state_transformers(space);
  if (opt.quiet) return 0;
  if (opt.json) {
    json rows = json::array();
    for (const auto& s : preds) rows.push_back(io::transformer_to_json(space, s));
    std::cout << json{{"state_transformers", states.size()}, {"transformers", rows}}.dump(2) << "\n";
    return 0;
  }
  std::cout << "state transformers: " << states.size() << "\npredicate transformers: " << preds.size() << "\n";
  std::size_t k = 0;
  for (const auto& s : preds) {
    const StateTransformer t = untranspose(space, s);
    std::cout << "  #" << k++ << " state [";
    for (std::size_t i = 0; i < t.table.size(); ++i) std::cout << (i ? "," : "") << t.table[i];
    std::cout << "]  " << most_specific(kind, classify(space, s)) << "\n";
  }
  return 0;
}

int run_verify(const Options& opt, const std::string& suite_name, const std::string& path) {
  auto suite = verify::parse_suite(suite_name);
  if (!suite) throw Error(ErrorCode::ParseError, "unknown suite '" + suite_name + "'");
  const auto corpus = verify::load_corpus(path);
  const verify::Report report = verify::run_suite(*suite, corpus);
  if (opt.json) {
    std::cout << verify::report_to_json(report).dump(2) << "\n";
  } else {
    std::cout << verify::report_to_text(report, opt.quiet);
  }
  std::cerr << "elapsed " << report.seconds << " s\n";
  return report.ok() ? 0 : kSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite powerdomains, repletions and predicate transformers"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Emit JSON");
  app.add_flag("--dot", opt.dot, "Emit Graphviz DOT where supported");
  app.add_flag("--quiet", opt.quiet, "Suppress normal output");

  std::string kind = "plotkin", prototype = "A", suite = "all", algebra, path, path_y;

  auto* pd = app.add_subcommand("pd", "Build a powerdomain");
  pd->add_option("--kind", kind, "hoare, smyth, plotkin or formal")
      ->check(CLI::IsMember({"hoare", "smyth", "plotkin", "formal"}));
  pd->add_option("poset", path, "Poset file")->required();

  auto* rep = app.add_subcommand("repletion", "Build hom01(R^X, R)");
  rep->add_option("--prototype", prototype, "A, sigma-join or sigma-meet");
  rep->add_option("--algebra", algebra, "Custom semilattice JSON (experimental)");
  rep->add_option("poset", path, "Poset file")->required();

  auto* lenses = app.add_subcommand("lenses", "List real and formal lenses");
  lenses->add_option("poset", path, "Poset file")->required();

  auto* vals = app.add_subcommand("valuations", "List A-valuations with H-flags");
  vals->add_option("poset", path, "Poset file")->required();

  auto* ver = app.add_subcommand("verify", "Run check suites");
  ver->add_option("--suite", suite, "all, hoare, smyth, plotkin, repletion, transformers or laws");
  ver->add_option("path", path, "Poset file or corpus directory")->required();

  auto* tr = app.add_subcommand("transformers", "Enumerate and classify transformers X -> Y");
  tr->add_option("--prototype", prototype, "A, sigma-join or sigma-meet");
  tr->add_option("x", path, "Poset X")->required();
  tr->add_option("y", path_y, "Poset Y")->required();

  for (auto* sub : {pd, rep, lenses, vals, ver, tr}) {
    sub->add_flag("--json", opt.json, "Emit JSON");
    sub->add_flag("--dot", opt.dot, "Emit Graphviz DOT where supported");
    sub->add_flag("--quiet", opt.quiet, "Suppress normal output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParseError;
  }

  try {
    if (pd->parsed()) return run_pd(opt, kind, path);
    if (rep->parsed()) return run_repletion(opt, prototype, algebra, path);
    if (lenses->parsed()) return run_lenses(opt, path);
    if (vals->parsed()) return run_valuations(opt, path);
    if (ver->parsed()) return run_verify(opt, suite, path);
    if (tr->parsed()) return run_transformers(opt, prototype, path, path_y);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::ResourceCapExceeded:
      case ErrorCode::CarrierTooLarge: return kResourceCap;
      default: return kParseError;
    }
  }
  return 0;
}
