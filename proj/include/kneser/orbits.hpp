#pragma once

#include <unordered_map>
#include <vector>

#include "kneser/polygon.hpp"

namespace kneser {

// Equivalence class of a triangulation under the polygon rotation r.
// members[k] = r^k(rep); rep is the canonically smallest member.
struct RotationOrbit {
  Triangulation rep;
  std::vector<Triangulation> members;

  int size() const { return static_cast<int>(members.size()); }
};

// Where a triangulation sits inside the orbit partition.
struct OrbitSlot {
  int orbit = -1;
  int position = -1;  // member = r^position(rep)
};

// The full partition of T_n into rotation orbits, orbits ordered by their
// representative's encoding.
struct OrbitPartition {
  int n = 0;
  std::vector<RotationOrbit> orbits;
  std::unordered_map<std::string, OrbitSlot> index;  // canonical encoding -> slot

  const OrbitSlot& slot_of(const Triangulation& t) const;
  std::uint64_t total_members() const;
};

RotationOrbit orbit_of(const Triangulation& t);

OrbitPartition orbit_partition(int n);

// The cyclic sequence rep, r(rep), ..., r^{s-1}(rep); consecutive members
// (including wraparound) are disjoint, so it is a cycle in the Kneser graph.
// Orbits of size 2 have no cycle and raise size_two_orbit.
std::vector<Triangulation> orbit_cycle(const RotationOrbit& orbit);

}  // namespace kneser
