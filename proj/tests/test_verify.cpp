#include "kneser/verify.hpp"

#include <sstream>

#include "doctest.h"
#include "kneser/splice.hpp"

using namespace kneser;

namespace {

std::string render(const HamiltonianCycle& cycle) {
  std::ostringstream out;
  out << "kneser-ham n=" << cycle.n << " len=" << cycle.seq.size() << "\n";
  for (const Triangulation& t : cycle.seq) out << encode(t) << "\n";
  return out.str();
}

CertificateReport verify_text(const std::string& text, int n, int threads = 1) {
  std::istringstream in(text);
  return verify_kneser_cycle(in, n, threads);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const std::string& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace

TEST_CASE("verifier accepts constructed cycles") {
  for (int n = 5; n <= 9; ++n) {
    HamiltonianCycle cycle = build_hamiltonian(n);
    CertificateReport report = verify_text(render(cycle), n);
    CHECK(report.pass());
  }
}

TEST_CASE("verifier result is independent of the thread count") {
  HamiltonianCycle cycle = build_hamiltonian(9);
  std::string text = render(cycle);
  CHECK(verify_text(text, 9, 1).pass());
  CHECK(verify_text(text, 9, 4).pass());

  auto lines = split_lines(text);
  std::swap(lines[5], lines[6]);
  std::string broken = join_lines(lines);
  CertificateReport a = verify_text(broken, 9, 1);
  CertificateReport b = verify_text(broken, 9, 4);
  CHECK_FALSE(a.pass());
  CHECK_FALSE(b.pass());
  CHECK(a.to_text() == b.to_text());
}

TEST_CASE("verifier decision on swapped entries matches ground truth") {
  // Some adjacent swaps produce a different but still valid Hamiltonian
  // cycle; the verifier must accept exactly those and reject the rest.
  for (int n : {6, 7}) {
    HamiltonianCycle cycle = build_hamiltonian(n);
    auto lines = split_lines(render(cycle));
    const std::size_t count = cycle.seq.size();
    for (std::size_t k = 0; k + 1 < count; ++k) {
      auto mutated_seq = cycle.seq;
      std::swap(mutated_seq[k], mutated_seq[k + 1]);
      bool still_valid = true;
      for (std::size_t j = 0; j < count && still_valid; ++j) {
        still_valid = are_disjoint(mutated_seq[j], mutated_seq[(j + 1) % count]);
      }
      auto mutated = lines;
      std::swap(mutated[1 + k], mutated[2 + k]);
      CertificateReport report = verify_text(join_lines(mutated), n);
      CHECK(report.pass() == still_valid);
      for (const CheckResult& c : report.checks) {
        if (!c.pass) CHECK_FALSE(c.witness.empty());
      }
    }
  }
}

TEST_CASE("verifier rejects the fixed-position mutations") {
  for (int n : {6, 7, 8}) {
    OrbitPartition part = orbit_partition(n);
    HamiltonianCycle cycle = build_hamiltonian(n);
    auto lines = split_lines(render(cycle));
    const std::size_t count = cycle.seq.size();

    // swap across the first orbit boundary
    std::size_t boundary = 0;
    for (std::size_t k = 0; k + 1 < count; ++k) {
      if (part.slot_of(cycle.seq[k]).orbit != part.slot_of(cycle.seq[k + 1]).orbit) {
        boundary = k;
        break;
      }
    }
    auto swapped = lines;
    std::swap(swapped[1 + boundary], swapped[2 + boundary]);
    CertificateReport report = verify_text(join_lines(swapped), n);
    CHECK_FALSE(report.pass());

    // duplicates always break distinctness, deletions always break the count
    for (std::size_t k = 0; k < count; ++k) {
      auto mutated = lines;
      mutated[1 + k] = mutated[1 + (k + 2) % count];
      CHECK_FALSE(verify_text(join_lines(mutated), n).pass());
    }
    for (std::size_t k = 0; k < count; ++k) {
      auto mutated = lines;
      mutated.erase(mutated.begin() + 1 + k);
      CHECK_FALSE(verify_text(join_lines(mutated), n).pass());
    }
  }
}

TEST_CASE("verifier reports malformed input as parse errors") {
  CHECK_THROWS_AS(verify_text("", 6), Error);
  CHECK_THROWS_AS(verify_text("bogus header\n", 6), Error);
  CHECK_THROWS_AS(verify_text("kneser-ham n=x len=2\n", 6), Error);
  CHECK_THROWS_AS(verify_text("kneser-ham n=6 len=14\n1-3+1-4\n", 6), Error);
}

TEST_CASE("verifier flags wrong n, bad entries, and wrong counts") {
  HamiltonianCycle cycle = build_hamiltonian(6);
  CHECK_FALSE(verify_text(render(cycle), 7).pass());

  // crossing entry is a check failure, not a parse error
  auto lines = split_lines(render(cycle));
  lines[3] = "1-3,2-4,1-5";
  CHECK_FALSE(verify_text(join_lines(lines), 6).pass());

  lines = split_lines(render(cycle));
  lines[0] = "kneser-ham n=6 len=13";
  CHECK_FALSE(verify_text(join_lines(lines), 6).pass());
}

TEST_CASE("brute-force oracle matches the pentagon cycle structure") {
  KneserOracle oracle = brute_force_kneser_graph(5);
  REQUIRE(oracle.verts.size() == 5);
  for (std::size_t v = 0; v < 5; ++v) CHECK(oracle.degree(v) == 2);

  KneserOracle hexagon = brute_force_kneser_graph(6);
  REQUIRE(hexagon.verts.size() == 14);
  // the star triangulation is disjoint exactly from the five
  // triangulations avoiding every diagonal at vertex 1
  Triangulation star = decode("1-3,1-4,1-5", 6);
  CHECK(hexagon.degree(hexagon.id.at(encode(star))) == 5);

  CHECK_THROWS_AS(brute_force_kneser_graph(10), Error);
}

TEST_CASE("verifier and oracle agree on consecutive pairs") {
  for (int n = 5; n <= 7; ++n) {
    KneserOracle oracle = brute_force_kneser_graph(n);
    HamiltonianCycle cycle = build_hamiltonian(n);
    for (std::size_t k = 0; k < cycle.seq.size(); ++k) {
      const Triangulation& a = cycle.seq[k];
      const Triangulation& b = cycle.seq[(k + 1) % cycle.seq.size()];
      CHECK(oracle.adjacent(a, b));
      CHECK(oracle.adjacent(a, b) == are_disjoint(a, b));
    }
  }
}

TEST_CASE("structural suites pass on small polygons") {
  for (int n = 4; n <= 9; ++n) {
    CertificateReport report = verify_lemmas(n);
    INFO(report.to_text());
    CHECK(report.pass());
  }
  // exactly one size-2 orbit at n = 6
  OrbitPartition part = orbit_partition(6);
  int size_two = 0;
  for (const auto& orbit : part.orbits) {
    if (orbit.size() == 2) ++size_two;
  }
  CHECK(size_two == 1);
}
