#include "kneser/orbits.hpp"

#include <algorithm>

namespace kneser {

const OrbitSlot& OrbitPartition::slot_of(const Triangulation& t) const {
  auto it = index.find(encode(t));
  if (it == index.end()) {
    throw Error(Error::Kind::internal, "orbit partition has no entry for " + encode(t));
  }
  return it->second;
}

std::uint64_t OrbitPartition::total_members() const {
  std::uint64_t total = 0;
  for (const auto& o : orbits) total += static_cast<std::uint64_t>(o.size());
  return total;
}

RotationOrbit orbit_of(const Triangulation& t) {
  validate_triangulation(t);
  std::vector<Triangulation> cycle;
  cycle.push_back(t);
  for (int k = 1; k < t.n; ++k) {
    Triangulation next = rotate(t, k);
    if (next == t) break;
    cycle.push_back(std::move(next));
  }
  auto rep_it = std::min_element(cycle.begin(), cycle.end());
  RotationOrbit orbit;
  orbit.rep = *rep_it;
  orbit.members.reserve(cycle.size());
  std::size_t start = static_cast<std::size_t>(rep_it - cycle.begin());
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    orbit.members.push_back(cycle[(start + k) % cycle.size()]);
  }
  return orbit;
}

OrbitPartition orbit_partition(int n) {
  if (n < 4) {
    throw Error(Error::Kind::invalid_size, "orbit_partition requires n >= 4, got " + std::to_string(n));
  }
  OrbitPartition part;
  part.n = n;
  auto all = enumerate_triangulations(n);
  std::unordered_map<std::string, bool> seen;
  seen.reserve(all.size() * 2);
  for (const Triangulation& t : all) {
    if (seen.count(encode(t))) continue;
    RotationOrbit orbit = orbit_of(t);
    for (const Triangulation& m : orbit.members) seen.emplace(encode(m), true);
    part.orbits.push_back(std::move(orbit));
  }
  // `all` is sorted and each orbit is first reached through its smallest
  // member, so orbits are already ordered by representative.
  part.index.reserve(all.size() * 2);
  for (std::size_t id = 0; id < part.orbits.size(); ++id) {
    const RotationOrbit& orbit = part.orbits[id];
    for (int pos = 0; pos < orbit.size(); ++pos) {
      part.index.emplace(encode(orbit.members[pos]), OrbitSlot{static_cast<int>(id), pos});
    }
  }
  return part;
}

std::vector<Triangulation> orbit_cycle(const RotationOrbit& orbit) {
  if (orbit.size() < 3) {
    throw Error(Error::Kind::size_two_orbit,
                "orbit of size " + std::to_string(orbit.size()) +
                    " is a single Kneser edge, not a cycle");
  }
  return orbit.members;
}

}  // namespace kneser
