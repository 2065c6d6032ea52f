#include "kneser/splice.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"

using namespace kneser;

namespace {

void check_kneser_hamiltonian(const HamiltonianCycle& cycle) {
  REQUIRE(cycle.seq.size() == catalan(cycle.n - 2));
  std::set<std::string> seen;
  for (const Triangulation& t : cycle.seq) {
    CHECK_NOTHROW(validate_triangulation(t));
    CHECK(seen.insert(encode(t)).second);
  }
  for (std::size_t k = 0; k < cycle.seq.size(); ++k) {
    CHECK(are_disjoint(cycle.seq[k], cycle.seq[(k + 1) % cycle.seq.size()]));
  }
}

}  // namespace

TEST_CASE("pentagon cycle is the single orbit") {
  HamiltonianCycle cycle = build_hamiltonian(5);
  check_kneser_hamiltonian(cycle);
  // starts canonical, proceeds by rotation
  CHECK(encode(cycle.seq.front()) == "1-3,1-4");
  CHECK(cycle.seq[1] == rotate(cycle.seq[0], 1));
}

TEST_CASE("spliced cycles span the whole Kneser graph") {
  for (int n = 6; n <= 10; ++n) {
    HamiltonianCycle cycle = build_hamiltonian(n);
    check_kneser_hamiltonian(cycle);
  }
}

TEST_CASE("degenerate polygon sizes") {
  CHECK_THROWS_AS(build_hamiltonian(3), Error);
  CHECK_THROWS_WITH_AS(build_hamiltonian(4),
                       doctest::Contains("single edge"), Error);
}

TEST_CASE("construction is byte-deterministic") {
  HamiltonianCycle a = build_hamiltonian(8);
  HamiltonianCycle b = build_hamiltonian(8);
  CHECK(a.seq == b.seq);
  CHECK(a.checksum == b.checksum);
}

TEST_CASE("hexagon cycle uses the all-ears edge exactly once") {
  HamiltonianCycle cycle = build_hamiltonian(6);
  check_kneser_hamiltonian(cycle);
  Triangulation ears_a = decode("1-3,1-5,3-5", 6);
  Triangulation ears_b = decode("2-4,2-6,4-6", 6);
  int uses = 0;
  for (std::size_t k = 0; k < cycle.seq.size(); ++k) {
    const Triangulation& s = cycle.seq[k];
    const Triangulation& t = cycle.seq[(k + 1) % cycle.seq.size()];
    if ((s == ears_a && t == ears_b) || (s == ears_b && t == ears_a)) ++uses;
  }
  CHECK(uses == 1);
}

TEST_CASE("splice rejects mismatched inputs") {
  OrbitPartition part6 = orbit_partition(6);
  OrbitPartition part7 = orbit_partition(7);
  GuideCycle guide7 = build_guide_cycle(7);
  OrbitTree tree7 = build_orbit_tree(guide7, part7);
  AugmentedFactor factor7 = select_bridges(tree7, part7);
  CHECK_THROWS_AS(splice(part6, tree7, factor7), Error);
}
