#pragma once

#include <vector>

#include "kneser/polygon.hpp"

namespace kneser {

// Hamiltonian cycle in the flip graph of the m-gon: every triangulation
// exactly once, consecutive entries (including wraparound) flip-adjacent.
struct FlipHamCycle {
  int m = 0;
  std::vector<Triangulation> seq;
};

// Deterministic constructive Hamiltonian cycle of Flip(m), m >= 5.
// The result is self-verified (completeness + adjacency) before returning.
FlipHamCycle flip_hamiltonian_cycle(int m);

// Exhaustive lexicographic depth-first search for a Hamiltonian cycle of
// Flip(m). Independent of the constructive scheme; intended for small m.
FlipHamCycle flip_hamiltonian_cycle_backtracking(int m);

// Throws Error(internal) unless `cycle` is a Hamiltonian cycle of Flip(m).
void check_flip_hamiltonian(const FlipHamCycle& cycle);

// Rotate/orient a cyclic sequence so the canonically smallest entry comes
// first, followed by its smaller neighbor.
void normalize_cycle(std::vector<Triangulation>& seq);

}  // namespace kneser
