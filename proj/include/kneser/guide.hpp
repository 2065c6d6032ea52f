#pragma once

#include <vector>

#include "kneser/polygon.hpp"

namespace kneser {

// Cycle in Flip(n) whose members all contain the ear diagonal {1, n-1}.
// It is an independent set of the Kneser graph that meets every rotation
// orbit, and it steers the order in which orbit cycles get merged.
struct GuideCycle {
  int n = 0;
  std::vector<Triangulation> seq;

  Diagonal ear() const { return Diagonal{1, n - 1}; }
};

// Appends {1, n-1} to every member of a Hamiltonian cycle of Flip(n-1).
// For n = 6 the start is rotated so the single all-ears member comes last;
// otherwise the canonically smallest member comes first.
GuideCycle build_guide_cycle(int n);

}  // namespace kneser
