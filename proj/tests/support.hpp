#pragma once

// Independent oracles shared by the tests: brute-force scans that do not go
// through the library's search kernels or closure routines.

#include <cstdint>
#include <string>
#include <vector>

#include "replete/io.hpp"
#include "replete/poset.hpp"

namespace testing {

using namespace replete;

inline Poset sigma() { return Poset::chain(2); }
inline Poset discrete(std::size_t n) { return Poset::antichain(n); }

/// The shipped corpus, parsed from text so the tests also exercise the parser.
inline std::vector<std::pair<std::string, Poset>> corpus() {
  return {
      {"one", io::parse_poset_text("elements: 1\n")},
      {"sigma", io::parse_poset_text("elements: 2\n0 < 1\n")},
      {"discrete2", io::parse_poset_text("elements: 2\n")},
      {"chain3", io::parse_poset_text("elements: 3\n0 < 1\n1 < 2\n")},
      {"vee", io::parse_poset_text("elements: 3\n0 < 1\n0 < 2\n")},
      {"wedge", io::parse_poset_text("elements: 3\n0 < 2\n1 < 2\n")},
      {"diamond", io::parse_poset_text("elements: 4\n0 < 1\n0 < 2\n1 < 3\n2 < 3\n")},
      {"discrete3", io::parse_poset_text("elements: 3\n")},
      {"n", io::parse_poset_text("elements: 4\n0 < 2\n1 < 2\n1 < 3\n")},
  };
}

/// Every subset of the carrier, ascending by bits.
inline std::vector<ElemSet> all_subsets(const Poset& p) {
  std::vector<ElemSet> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << p.size()); ++b) out.push_back(ElemSet(b));
  return out;
}

inline bool scan_down_closed(const Poset& p, ElemSet s) {
  for (Index a = 0; a < p.size(); ++a)
    for (Index b = 0; b < p.size(); ++b)
      if (s.contains(b) && p.leq(a, b) && !s.contains(a)) return false;
  return true;
}

inline bool scan_up_closed(const Poset& p, ElemSet s) {
  for (Index a = 0; a < p.size(); ++a)
    for (Index b = 0; b < p.size(); ++b)
      if (s.contains(a) && p.leq(a, b) && !s.contains(b)) return false;
  return true;
}

inline bool scan_convex(const Poset& p, ElemSet s) {
  for (Index a = 0; a < p.size(); ++a)
    for (Index b = 0; b < p.size(); ++b)
      for (Index c = 0; c < p.size(); ++c)
        if (s.contains(a) && s.contains(c) && p.leq(a, b) && p.leq(b, c) && !s.contains(b)) return false;
  return true;
}

/// All maps dom -> cod in canonical order (digit i is the image of i), filtered.
template <class Keep>
std::vector<Table> scan_tables(std::size_t dom, std::size_t cod, Keep keep) {
  std::vector<Table> out;
  Table t(dom, 0);
  while (true) {
    if (keep(t)) out.push_back(t);
    std::size_t i = 0;
    while (i < dom && ++t[i] == cod) t[i++] = 0;
    if (i == dom) break;
  }
  return out;
}

inline std::vector<Table> scan_monotone(const Poset& dom, const Poset& cod) {
  return scan_tables(dom.size(), cod.size(), [&](const Table& t) {
    for (Index a = 0; a < dom.size(); ++a)
      for (Index b = 0; b < dom.size(); ++b)
        if (dom.leq(a, b) && !cod.leq(t[a], t[b])) return false;
    return true;
  });
}

/// Pointwise three-chain values of the A-predicate with first support u1 and second u2.
inline Index a_value(bool first, bool second) { return first ? (second ? 2 : 1) : 0; }

}  // namespace testing
