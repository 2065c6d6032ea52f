#include "kneser/guide.hpp"

#include <algorithm>

#include "kneser/flip_cycle.hpp"

namespace kneser {

namespace {

bool all_ears(const Triangulation& t) {
  for (const Diagonal& d : t.diagonals) {
    if (!is_ear(d, t.n)) return false;
  }
  return true;
}

}  // namespace

GuideCycle build_guide_cycle(int n) {
  if (n <= 5) {
    throw Error(Error::Kind::invalid_size,
                "guide cycle needs n >= 6, got " + std::to_string(n));
  }
  FlipHamCycle inner = flip_hamiltonian_cycle(n - 1);
  GuideCycle guide;
  guide.n = n;
  guide.seq.reserve(inner.seq.size());
  Diagonal ear{1, n - 1};
  for (const Triangulation& t : inner.seq) {
    Triangulation lifted;
    lifted.n = n;
    lifted.diagonals = t.diagonals;
    lifted.diagonals.insert(
        std::upper_bound(lifted.diagonals.begin(), lifted.diagonals.end(), ear), ear);
    guide.seq.push_back(std::move(lifted));
  }
  normalize_cycle(guide.seq);

  if (n == 6) {
    // The size-2 orbit of all-ears triangulations must never act as a
    // parent, so its lone guide member goes last.
    std::size_t pos = guide.seq.size();
    for (std::size_t k = 0; k < guide.seq.size(); ++k) {
      if (all_ears(guide.seq[k])) {
        if (pos != guide.seq.size()) {
          throw Error(Error::Kind::internal, "guide for n = 6 has two all-ears members");
        }
        pos = k;
      }
    }
    if (pos == guide.seq.size()) {
      throw Error(Error::Kind::internal, "guide for n = 6 lacks an all-ears member");
    }
    std::rotate(guide.seq.begin(), guide.seq.begin() + (pos + 1) % guide.seq.size(),
                guide.seq.end());
  }

  for (std::size_t k = 0; k < guide.seq.size(); ++k) {
    if (!guide.seq[k].contains(ear)) {
      throw Error(Error::Kind::internal, "guide member missing the ear diagonal");
    }
    if (!flip_adjacent(guide.seq[k], guide.seq[(k + 1) % guide.seq.size()])) {
      throw Error(Error::Kind::internal, "guide members not flip-adjacent");
    }
  }
  return guide;
}

}  // namespace kneser
