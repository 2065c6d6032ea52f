#pragma once

#include <vector>

#include "kneser/guide.hpp"
#include "kneser/orbits.hpp"

namespace kneser {

// Spanning tree on rotation orbits, rooted at the orbit of the guide start.
// Orbits are ordered by first appearance along the guide; each non-root
// orbit records the guide transition that first entered it.
struct OrbitTree {
  int n = 0;
  std::vector<int> order;      // orbit ids by first appearance
  std::vector<int> parent;     // indexed by orbit id; -1 at the root
  std::vector<int> rank_of;    // orbit id -> position in `order`
  // Guide transition (parent-side member, child-side member) per orbit id;
  // unset entries hold empty triangulations.
  std::vector<std::pair<Triangulation, Triangulation>> witness;

  int orbit_count() const { return static_cast<int>(order.size()); }
  int degree(int orbit_id) const;
};

// Kneser edge joining a child orbit to its parent orbit.
struct BridgeEdge {
  int child = -1;        // orbit id
  Triangulation a;       // in the parent orbit
  Triangulation b;       // in the child orbit
};

// The rotation 2-factor together with one selected bridge per tree edge.
// Degrees stay <= 3 and no vertex hosts more than one bridge.
struct AugmentedFactor {
  int n = 0;
  std::vector<BridgeEdge> bridges;          // in first-appearance order of the child
  std::vector<std::vector<int>> degree;     // [orbit id][position] -> degree in the factor
};

OrbitTree build_orbit_tree(const GuideCycle& guide, const OrbitPartition& part);

// Sign e with t disjoint from r^e(u), preferring +1. Defined for
// flip-adjacent pairs; at least one sign always works.
int bridge_orientation(const Triangulation& t, const Triangulation& u);

AugmentedFactor select_bridges(const OrbitTree& tree, const OrbitPartition& part);

}  // namespace kneser
