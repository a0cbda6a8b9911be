// Acceptance run: one PASS/FAIL line per criterion, exact checks on the shipped
// corpus, each criterion under a 60 second budget.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "replete/powerdomain.hpp"
#include "replete/valuation.hpp"
#include "replete/verify.hpp"

namespace {

using namespace replete;
using verify::Check;
using verify::CorpusEntry;

constexpr double kBudgetSeconds = 60.0;

struct Outcome {
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void take(const Check& c) {
    if (!c.passed) failures.push_back(c.name + ": " + c.counterexample);
  }
};

bool criterion(int n, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.failures.push_back(std::string("error: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= kBudgetSeconds) out.failures.push_back("took " + std::to_string(secs) + " s");
  const bool ok = out.failures.empty();
  std::cout << (ok ? "PASS" : "FAIL") << " AC" << n << " " << title << " (" << secs << " s)\n";
  for (const auto& f : out.failures) std::cout << "    " << f << "\n";
  return ok;
}

}  // namespace

int main() {
  const std::vector<CorpusEntry> corpus = verify::load_corpus(REPLETE_CORPUS_DIR);
  const Poset d2 = Poset::antichain(2);
  bool all = true;

  all &= criterion(1, "flat-domain lens counts", [&](Outcome& o) {
    o.take(verify::flat_counts());
    const auto pl = plotkin_pd(d2);
    const auto fl = formal_lens_algebra(d2);
    const auto rep = repletion(d2, Prototype::A);
    o.require(pl.sets.size() == 3, "real lenses of discrete2: " + std::to_string(pl.sets.size()));
    o.require(fl.lenses.size() == 7, "formal lenses of discrete2: " + std::to_string(fl.lenses.size()));
    o.require(rep.homs.maps.size() == 7, "A-repletion of discrete2: " + std::to_string(rep.homs.maps.size()));
    o.require(rep.homs.maps.size() != pl.sets.size(), "repletion coincides with the Plotkin powerdomain");
  });

  all &= criterion(2, "functional representations", [&](Outcome& o) {
    for (const auto& e : corpus) {
      o.take(verify::hoare_representation(e.name, e.poset));
      o.take(verify::smyth_representation(e.name, e.poset));
      o.take(verify::formal_lens_representation(e.name, e.poset));
    }
  });

  all &= criterion(3, "unique extension along the unit", [&](Outcome& o) {
    for (const auto& e : corpus)
      for (Prototype k : {Prototype::A, Prototype::SigmaJoin, Prototype::SigmaMeet})
        o.take(verify::unique_extension(k, e.name, e.poset));
  });

  all &= criterion(4, "Plotkin identification", [&](Outcome& o) {
    for (const auto& e : corpus) o.take(verify::plotkin_identification(e.name, e.poset));
    o.take(verify::plotkin_of_two_chain());
  });

  all &= criterion(5, "H-condition lemmas on formal lenses", [&](Outcome& o) {
    for (const auto& e : corpus) o.take(verify::h_lemmas(e.name, e.poset));
  });

  all &= criterion(6, "split reconstruction and factorization", [&](Outcome& o) {
    for (const auto& e : corpus) {
      o.take(verify::split_reconstruction(e.name, e.poset));
      o.take(verify::phi_decomposition(e.name, e.poset));
    }
  });

  all &= criterion(7, "law suite", [&](Outcome& o) {
    o.take(verify::laws(corpus));
    const Algebra a = make_prototype(Prototype::A);
    const LawResult j = check_law(a, laws::join), m = check_law(a, laws::meet);
    o.require(!j.holds && j.witness.has_value(), "A satisfies the join law or gave no counterexample");
    o.require(!m.holds && m.witness.has_value(), "A satisfies the meet law or gave no counterexample");
    if (j.witness) std::cout << "    join law fails in A at x=" << (*j.witness)[0] << " y=" << (*j.witness)[1] << "\n";
    if (m.witness) std::cout << "    meet law fails in A at x=" << (*m.witness)[0] << " y=" << (*m.witness)[1] << "\n";
  });

  all &= criterion(8, "transformer suite", [&](Outcome& o) {
    const std::vector<std::pair<std::string, Poset>> small{{"sigma", Poset::chain(2)}, {"discrete2", d2}};
    for (Prototype k : {Prototype::SigmaJoin, Prototype::SigmaMeet, Prototype::A})
      for (const auto& [xn, x] : small)
        for (const auto& [yn, y] : small) o.take(verify::transformers(k, xn, x, yn, y));
  });

  std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
  return all ? 0 : 1;
}
