#include "kneser/bridges.hpp"

#include <algorithm>

#include "doctest.h"

using namespace kneser;

namespace {

Triangulation tri(int n, std::vector<std::pair<int, int>> pairs) {
  Triangulation t;
  t.n = n;
  for (auto [i, j] : pairs) t.diagonals.push_back(Diagonal{i, j});
  std::sort(t.diagonals.begin(), t.diagonals.end());
  return t;
}

bool all_ears_tri(const Triangulation& t) {
  return std::all_of(t.diagonals.begin(), t.diagonals.end(),
                     [&](const Diagonal& d) { return is_ear(d, t.n); });
}

}  // namespace

TEST_CASE("bridge orientation picks a separating rotation sign") {
  Triangulation t = tri(6, {{1, 3}, {1, 4}, {1, 5}});
  Triangulation u = tri(6, {{1, 3}, {3, 5}, {1, 5}});
  CHECK(bridge_orientation(t, u) == 1);
  CHECK(are_disjoint(t, rotate(u, 1)));

  Triangulation a = tri(5, {{1, 3}, {1, 4}});
  Triangulation b = tri(5, {{2, 4}, {1, 4}});
  int eps = bridge_orientation(a, b);
  CHECK(are_disjoint(a, rotate(b, eps)));

  CHECK_THROWS_AS(bridge_orientation(t, rotate(t, 3)), Error);  // not flip-adjacent
}

TEST_CASE("every flip edge admits a separating sign") {
  for (int n : {5, 6, 7}) {
    for (const Triangulation& t : enumerate_triangulations(n)) {
      for (const Diagonal& d : t.diagonals) {
        Triangulation u = flip(t, d);
        int eps = bridge_orientation(t, u);
        CHECK(are_disjoint(t, rotate(u, eps)));
      }
    }
  }
}

TEST_CASE("orbit tree for the hexagon") {
  OrbitPartition part = orbit_partition(6);
  GuideCycle guide = build_guide_cycle(6);
  OrbitTree tree = build_orbit_tree(guide, part);

  REQUIRE(tree.order.size() == 4);
  // first seen orbit is the fans', the all-ears orbit comes last
  CHECK(part.orbits[tree.order.front()].size() == 6);
  int ears = tree.order.back();
  CHECK(part.orbits[ears].size() == 2);
  CHECK(all_ears_tri(part.orbits[ears].rep));
  CHECK(tree.degree(ears) == 1);  // leaf: never a parent

  for (std::size_t rank = 1; rank < tree.order.size(); ++rank) {
    int child = tree.order[rank];
    int parent = tree.parent[child];
    CHECK(tree.rank_of[parent] < tree.rank_of[child]);
    CHECK(flip_adjacent(tree.witness[child].first, tree.witness[child].second));
    CHECK(part.slot_of(tree.witness[child].first).orbit == parent);
    CHECK(part.slot_of(tree.witness[child].second).orbit == child);
  }
}

TEST_CASE("orbit tree spans with one edge per non-root orbit") {
  for (int n = 6; n <= 9; ++n) {
    OrbitPartition part = orbit_partition(n);
    GuideCycle guide = build_guide_cycle(n);
    OrbitTree tree = build_orbit_tree(guide, part);
    CHECK(tree.order.size() == part.orbits.size());
    int edges = 0;
    for (int p : tree.parent) {
      if (p >= 0) ++edges;
    }
    CHECK(edges == static_cast<int>(part.orbits.size()) - 1);
  }
  OrbitPartition p7 = orbit_partition(7);
  OrbitTree t7 = build_orbit_tree(build_guide_cycle(7), p7);
  CHECK(t7.order.size() == 6);
}

TEST_CASE("tree degrees respect the guide occupancy bound") {
  for (int n = 6; n <= 10; ++n) {
    OrbitPartition part = orbit_partition(n);
    GuideCycle guide = build_guide_cycle(n);
    OrbitTree tree = build_orbit_tree(guide, part);
    std::vector<int> hits(part.orbits.size(), 0);
    for (const Triangulation& t : guide.seq) hits[part.slot_of(t).orbit] += 1;
    for (std::size_t id = 0; id < part.orbits.size(); ++id) {
      int deg = tree.degree(static_cast<int>(id));
      CHECK(deg <= 1 + hits[id]);
      CHECK(deg <= part.orbits[id].size());
    }
  }
}

TEST_CASE("bridge selection keeps degrees at most 3 and orbits distinct") {
  for (int n = 6; n <= 9; ++n) {
    OrbitPartition part = orbit_partition(n);
    OrbitTree tree = build_orbit_tree(build_guide_cycle(n), part);
    AugmentedFactor factor = select_bridges(tree, part);
    CHECK(factor.bridges.size() == part.orbits.size() - 1);
    for (const BridgeEdge& bridge : factor.bridges) {
      CHECK(are_disjoint(bridge.a, bridge.b));
      int oa = part.slot_of(bridge.a).orbit;
      int ob = part.slot_of(bridge.b).orbit;
      CHECK(oa != ob);
      CHECK(oa == tree.parent[bridge.child]);
      CHECK(ob == bridge.child);
    }
    int max_degree = 0;
    for (const auto& per_orbit : factor.degree) {
      for (int deg : per_orbit) max_degree = std::max(max_degree, deg);
    }
    CHECK(max_degree <= 3);
  }
}

TEST_CASE("hexagon bridges: three bridges, the all-ears edge hosts one end") {
  OrbitPartition part = orbit_partition(6);
  OrbitTree tree = build_orbit_tree(build_guide_cycle(6), part);
  AugmentedFactor factor = select_bridges(tree, part);
  REQUIRE(factor.bridges.size() == 3);
  int ears = tree.order.back();
  int touching = 0;
  for (const BridgeEdge& bridge : factor.bridges) {
    if (part.slot_of(bridge.b).orbit == ears) ++touching;
    if (part.slot_of(bridge.a).orbit == ears) ++touching;
  }
  CHECK(touching == 1);
  // size-2 orbit: base degree 1, at most one bridge endpoint
  for (int deg : factor.degree[ears]) CHECK(deg <= 2);
}

TEST_CASE("bridges stay bridges under simultaneous rotation") {
  OrbitPartition part = orbit_partition(8);
  OrbitTree tree = build_orbit_tree(build_guide_cycle(8), part);
  AugmentedFactor factor = select_bridges(tree, part);
  for (const BridgeEdge& bridge : factor.bridges) {
    for (int sigma = 0; sigma < 8; ++sigma) {
      CHECK(are_disjoint(rotate(bridge.a, sigma), rotate(bridge.b, sigma)));
    }
  }
}
