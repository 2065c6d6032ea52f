#include "kneser/splice.hpp"

#include <algorithm>

#include "kneser/flip_cycle.hpp"

namespace kneser {

namespace {

struct Linked {
  // Doubly-linked cyclic order over flattened vertex ids; -1 = not spliced in.
  std::vector<std::int64_t> next;
  std::vector<std::int64_t> prev;
};

}  // namespace

HamiltonianCycle splice(const OrbitPartition& part, const OrbitTree& tree,
                        const AugmentedFactor& factor) {
  if (part.n != tree.n || part.n != factor.n) {
    throw Error(Error::Kind::mismatched_n, "splice inputs built for different n");
  }
  const std::size_t orbit_count = part.orbits.size();
  std::vector<std::int64_t> offset(orbit_count + 1, 0);
  for (std::size_t id = 0; id < orbit_count; ++id) {
    offset[id + 1] = offset[id] + part.orbits[id].size();
  }
  auto vid = [&](int orbit, int pos) { return offset[orbit] + pos; };

  Linked cyc;
  cyc.next.assign(static_cast<std::size_t>(offset[orbit_count]), -1);
  cyc.prev.assign(static_cast<std::size_t>(offset[orbit_count]), -1);
  auto link = [&](std::int64_t a, std::int64_t b) {
    cyc.next[a] = b;
    cyc.prev[b] = a;
  };

  int root = tree.order.front();
  int root_size = part.orbits[root].size();
  if (root_size < 3) {
    throw Error(Error::Kind::size_two_orbit, "root orbit too small to seed the splice");
  }
  for (int pos = 0; pos < root_size; ++pos) {
    link(vid(root, pos), vid(root, (pos + 1) % root_size));
  }

  if (factor.bridges.size() + 1 != tree.order.size()) {
    throw Error(Error::Kind::internal, "bridge count does not match the tree");
  }
  // Desk-scale audit: after each splice the partial structure must still be
  // one cycle of the right length.
  const bool audit_steps = part.n <= 9;
  std::int64_t spliced_size = root_size;
  for (const BridgeEdge& bridge : factor.bridges) {
    const OrbitSlot& slot_s = part.slot_of(bridge.a);
    const OrbitSlot& slot_t = part.slot_of(bridge.b);
    int child = slot_t.orbit;
    int child_size = part.orbits[child].size();
    std::int64_t s = vid(slot_s.orbit, slot_s.position);
    std::int64_t rs = vid(slot_s.orbit, (slot_s.position + 1) % part.orbits[slot_s.orbit].size());

    // The child path T, r^{-1}(T), ..., r(T) walks the whole orbit cycle
    // except the occupied edge {T, r(T)}.
    std::vector<std::int64_t> path;
    path.reserve(child_size);
    for (int step = 0; step < child_size; ++step) {
      int pos = slot_t.position - step;
      pos %= child_size;
      if (pos < 0) pos += child_size;
      path.push_back(vid(child, pos));
    }

    if (cyc.next[s] == rs) {
      link(s, path.front());
      for (std::size_t k = 0; k + 1 < path.size(); ++k) link(path[k], path[k + 1]);
      link(path.back(), rs);
    } else if (cyc.prev[s] == rs) {
      link(rs, path.back());
      for (std::size_t k = path.size(); k-- > 1;) link(path[k], path[k - 1]);
      link(path.front(), s);
    } else {
      throw Error(Error::Kind::internal,
                  "active edge {S, r(S)} missing from the partial cycle at child orbit " +
                      std::to_string(child));
    }

    spliced_size += child_size;
    if (audit_steps) {
      std::int64_t steps = 0;
      std::int64_t cur = s;
      do {
        cur = cyc.next[cur];
        ++steps;
      } while (cur != s && steps <= spliced_size);
      if (steps != spliced_size) {
        throw Error(Error::Kind::internal,
                    "partial splice is not a single cycle at child orbit " +
                        std::to_string(child));
      }
    }
  }

  HamiltonianCycle out;
  out.n = part.n;
  std::size_t total = static_cast<std::size_t>(offset[orbit_count]);
  out.seq.reserve(total);
  std::int64_t start = 0;  // orbit 0 holds the overall smallest triangulation
  std::int64_t cur = start;
  do {
    if (cur < 0) throw Error(Error::Kind::internal, "splice left a vertex unlinked");
    auto it = std::upper_bound(offset.begin(), offset.end(), cur) - 1;
    int orbit = static_cast<int>(it - offset.begin());
    int pos = static_cast<int>(cur - *it);
    out.seq.push_back(part.orbits[orbit].members[pos]);
    cur = cyc.next[cur];
  } while (cur != start && out.seq.size() <= total);
  if (out.seq.size() != total) {
    throw Error(Error::Kind::internal, "spliced cycle does not span all triangulations");
  }
  normalize_cycle(out.seq);
  out.checksum = cycle_checksum(out.n);
  return out;
}

HamiltonianCycle build_hamiltonian(int n) {
  if (n <= 3) {
    throw Error(Error::Kind::invalid_size, "need n >= 5, got " + std::to_string(n));
  }
  if (n == 4) {
    throw Error(Error::Kind::unsupported,
                "the Kneser graph of the 4-gon is a single edge between its two "
                "triangulations; no cycle exists");
  }
  if (n == 5) {
    // All five triangulations form one rotation orbit whose cycle is
    // already Hamiltonian.
    OrbitPartition part = orbit_partition(5);
    if (part.orbits.size() != 1) {
      throw Error(Error::Kind::internal, "the 5-gon must have a single rotation orbit");
    }
    HamiltonianCycle out;
    out.n = 5;
    out.seq = orbit_cycle(part.orbits.front());
    normalize_cycle(out.seq);
    out.checksum = cycle_checksum(5);
    return out;
  }
  OrbitPartition part = orbit_partition(n);
  GuideCycle guide = build_guide_cycle(n);
  OrbitTree tree = build_orbit_tree(guide, part);
  AugmentedFactor factor = select_bridges(tree, part);
  return splice(part, tree, factor);
}

std::uint64_t cycle_checksum(int n) {
  auto all = enumerate_triangulations(n);
  std::uint64_t hash = 1469598103934665603ull;
  auto mix = [&](char c) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 1099511628211ull;
  };
  for (const Triangulation& t : all) {
    for (char c : encode(t)) mix(c);
    mix('\n');
  }
  return hash;
}

}  // namespace kneser
