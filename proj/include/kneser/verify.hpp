#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "kneser/polygon.hpp"

namespace kneser {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::uint64_t items = 0;  // objects examined
  std::string witness;      // concrete counterexample when failing
};

struct CertificateReport {
  std::string kind;
  int n = 0;
  std::vector<CheckResult> checks;

  bool pass() const;
  std::string to_text() const;
};

// Streaming check of a "kneser-ham" certificate: header, per-entry
// validity, consecutive disjointness (with wraparound), distinctness and
// count. Keeps only a rank table plus one bit per triangulation; the cycle
// itself is never stored. Malformed input raises Error(parse) with the
// offending line number.
CertificateReport verify_kneser_cycle(std::istream& in, int expected_n, int threads = 1);

// Full pairwise disjointness oracle; feasible for n <= 9.
struct KneserOracle {
  int n = 0;
  std::vector<Triangulation> verts;
  std::unordered_map<std::string, std::size_t> id;
  std::vector<std::vector<bool>> adj;

  bool adjacent(const Triangulation& a, const Triangulation& b) const;
  std::size_t degree(std::size_t v) const;
};

KneserOracle brute_force_kneser_graph(int n);

// Exhaustive structural suites: orbit sizes, rotation disjointness, the
// flip/rotation separation of adjacent triangulations, guide/tree degree
// bounds, and the augmented-factor bounds. Heavy suites switch to a
// deterministic sample beyond their stated exhaustive range.
CertificateReport verify_lemmas(int n);

}  // namespace kneser
