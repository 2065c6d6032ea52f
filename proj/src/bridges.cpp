#include "kneser/bridges.hpp"

#include <algorithm>

namespace kneser {

int OrbitTree::degree(int orbit_id) const {
  int deg = parent[orbit_id] >= 0 ? 1 : 0;
  for (int p : parent) {
    if (p == orbit_id) ++deg;
  }
  return deg;
}

OrbitTree build_orbit_tree(const GuideCycle& guide, const OrbitPartition& part) {
  if (guide.n != part.n) {
    throw Error(Error::Kind::mismatched_n, "guide and partition built for different n");
  }
  OrbitTree tree;
  tree.n = part.n;
  const std::size_t orbit_count = part.orbits.size();
  tree.parent.assign(orbit_count, -1);
  tree.rank_of.assign(orbit_count, -1);
  tree.witness.assign(orbit_count, {});

  int first = part.slot_of(guide.seq.front()).orbit;
  tree.order.push_back(first);
  tree.rank_of[first] = 0;
  int prev = first;
  for (std::size_t k = 1; k < guide.seq.size(); ++k) {
    int cur = part.slot_of(guide.seq[k]).orbit;
    if (tree.rank_of[cur] < 0) {
      tree.rank_of[cur] = static_cast<int>(tree.order.size());
      tree.order.push_back(cur);
      tree.parent[cur] = prev;
      tree.witness[cur] = {guide.seq[k - 1], guide.seq[k]};
    }
    prev = cur;
  }
  if (tree.order.size() != orbit_count) {
    throw Error(Error::Kind::internal,
                "guide misses " + std::to_string(orbit_count - tree.order.size()) +
                    " rotation orbits");
  }
  return tree;
}

int bridge_orientation(const Triangulation& t, const Triangulation& u) {
  if (!flip_adjacent(t, u)) {
    throw Error(Error::Kind::not_flip_adjacent,
                "bridge orientation needs a flip-adjacent pair: " + encode(t) + " / " + encode(u));
  }
  if (are_disjoint(t, rotate(u, 1))) return 1;
  if (are_disjoint(t, rotate(u, -1))) return -1;
  throw Error(Error::Kind::internal,
              "no rotation sign separates flip-adjacent pair " + encode(t) + " / " + encode(u));
}

AugmentedFactor select_bridges(const OrbitTree& tree, const OrbitPartition& part) {
  if (tree.n != part.n) {
    throw Error(Error::Kind::mismatched_n, "tree and partition built for different n");
  }
  AugmentedFactor factor;
  factor.n = part.n;
  factor.degree.resize(part.orbits.size());
  for (std::size_t id = 0; id < part.orbits.size(); ++id) {
    // Orbit cycles give every member degree 2; a size-2 orbit is a single
    // Kneser edge, degree 1.
    int base_degree = part.orbits[id].size() >= 3 ? 2 : 1;
    factor.degree[id].assign(part.orbits[id].size(), base_degree);
  }
  std::vector<std::vector<bool>> has_bridge(part.orbits.size());
  for (std::size_t id = 0; id < part.orbits.size(); ++id) {
    has_bridge[id].assign(part.orbits[id].size(), false);
  }

  for (std::size_t rank = 1; rank < tree.order.size(); ++rank) {
    int child = tree.order[rank];
    const auto& [witness_parent, witness_child] = tree.witness[child];
    int eps = bridge_orientation(witness_parent, witness_child);
    Triangulation a = witness_parent;
    Triangulation b = rotate(witness_child, eps);

    const OrbitSlot& slot_a = part.slot_of(a);
    const OrbitSlot& slot_b = part.slot_of(b);
    if (slot_a.orbit != tree.parent[child] || slot_b.orbit != child) {
      throw Error(Error::Kind::internal, "bridge endpoints landed in unexpected orbits");
    }
    int size_a = part.orbits[slot_a.orbit].size();
    int size_b = part.orbits[slot_b.orbit].size();

    int chosen = -1;
    for (int sigma = 0; sigma < part.n; ++sigma) {
      int pos_a = (slot_a.position + sigma) % size_a;
      int pos_b = (slot_b.position + sigma) % size_b;
      if (!has_bridge[slot_a.orbit][pos_a] && !has_bridge[slot_b.orbit][pos_b]) {
        chosen = sigma;
        break;
      }
    }
    if (chosen < 0) {
      throw Error(Error::Kind::internal,
                  "no rotation shift leaves both bridge endpoints free (child orbit " +
                      std::to_string(child) + ")");
    }
    int pos_a = (slot_a.position + chosen) % size_a;
    int pos_b = (slot_b.position + chosen) % size_b;
    has_bridge[slot_a.orbit][pos_a] = true;
    has_bridge[slot_b.orbit][pos_b] = true;
    factor.degree[slot_a.orbit][pos_a] += 1;
    factor.degree[slot_b.orbit][pos_b] += 1;

    BridgeEdge edge;
    edge.child = child;
    edge.a = part.orbits[slot_a.orbit].members[pos_a];
    edge.b = part.orbits[slot_b.orbit].members[pos_b];
    if (!are_disjoint(edge.a, edge.b)) {
      throw Error(Error::Kind::internal, "selected bridge endpoints are not disjoint");
    }
    factor.bridges.push_back(std::move(edge));
  }
  return factor;
}

}  // namespace kneser
