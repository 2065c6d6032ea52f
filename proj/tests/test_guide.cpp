#include "kneser/guide.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "kneser/orbits.hpp"

using namespace kneser;

namespace {

Triangulation tri(int n, std::vector<std::pair<int, int>> pairs) {
  Triangulation t;
  t.n = n;
  for (auto [i, j] : pairs) t.diagonals.push_back(Diagonal{i, j});
  std::sort(t.diagonals.begin(), t.diagonals.end());
  return t;
}

}  // namespace

TEST_CASE("guide for the hexagon ends at the all-ears triangulation") {
  GuideCycle guide = build_guide_cycle(6);
  std::vector<Triangulation> expected = {
      tri(6, {{3, 5}, {2, 5}, {1, 5}}), tri(6, {{2, 4}, {2, 5}, {1, 5}}),
      tri(6, {{1, 4}, {2, 4}, {1, 5}}), tri(6, {{1, 3}, {1, 4}, {1, 5}}),
      tri(6, {{1, 3}, {3, 5}, {1, 5}})};
  CHECK(guide.seq == expected);
}

TEST_CASE("guide members all carry the ear and stay flip-connected") {
  for (int n = 6; n <= 10; ++n) {
    GuideCycle guide = build_guide_cycle(n);
    CHECK(guide.seq.size() == catalan(n - 3));
    Diagonal ear{1, n - 1};
    for (std::size_t k = 0; k < guide.seq.size(); ++k) {
      CHECK(guide.seq[k].contains(ear));
      CHECK(flip_adjacent(guide.seq[k], guide.seq[(k + 1) % guide.seq.size()]));
    }
  }
}

TEST_CASE("guide is too small below n = 6") {
  CHECK_THROWS_AS(build_guide_cycle(5), Error);
  CHECK_THROWS_AS(build_guide_cycle(4), Error);
}

TEST_CASE("guide meets every rotation orbit") {
  for (int n = 6; n <= 9; ++n) {
    OrbitPartition part = orbit_partition(n);
    GuideCycle guide = build_guide_cycle(n);
    std::set<int> hit;
    for (const Triangulation& t : guide.seq) hit.insert(part.slot_of(t).orbit);
    CHECK(hit.size() == part.orbits.size());
  }
}

TEST_CASE("guide is an independent set of the Kneser graph") {
  for (int n = 6; n <= 8; ++n) {
    GuideCycle guide = build_guide_cycle(n);
    for (std::size_t a = 0; a < guide.seq.size(); ++a) {
      for (std::size_t b = a + 1; b < guide.seq.size(); ++b) {
        CHECK_FALSE(are_disjoint(guide.seq[a], guide.seq[b]));
      }
    }
  }
}

TEST_CASE("guide occupies at most half of each orbit") {
  for (int n = 6; n <= 10; ++n) {
    OrbitPartition part = orbit_partition(n);
    GuideCycle guide = build_guide_cycle(n);
    std::vector<int> hits(part.orbits.size(), 0);
    for (const Triangulation& t : guide.seq) hits[part.slot_of(t).orbit] += 1;
    for (std::size_t id = 0; id < part.orbits.size(); ++id) {
      CHECK(2 * hits[id] <= part.orbits[id].size());
    }
  }
}
