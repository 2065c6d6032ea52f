#pragma once

#include <cstdint>
#include <vector>

#include "kneser/bridges.hpp"

namespace kneser {

// Hamiltonian cycle of the Kneser graph of triangulations: all C_{n-2}
// triangulations, consecutive entries (including wraparound) disjoint.
struct HamiltonianCycle {
  int n = 0;
  std::vector<Triangulation> seq;
  std::uint64_t checksum = 0;  // FNV-1a over the sorted encodings
};

// Merges the orbit cycles along the tree: each bridge {S, T} replaces the
// parent-orbit edge {S, r(S)} by the path S, T, r^{-1}(T), ..., r(T), r(S).
HamiltonianCycle splice(const OrbitPartition& part, const OrbitTree& tree,
                        const AugmentedFactor& factor);

// Full pipeline: n = 5 is the lone orbit cycle; n >= 6 runs
// guide -> tree -> bridges -> splice. Output starts at the canonically
// smallest triangulation, oriented toward its smaller neighbor.
HamiltonianCycle build_hamiltonian(int n);

std::uint64_t cycle_checksum(int n);

}  // namespace kneser
