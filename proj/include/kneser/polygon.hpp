#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kneser/error.hpp"

namespace kneser {

// Chord of the convex n-gon with 1-based labels, normalized to i < j.
// Valid diagonals skip at least one vertex on both boundary arcs:
// 2 <= j - i <= n - 2.
struct Diagonal {
  int i = 0;
  int j = 0;

  friend bool operator==(const Diagonal&, const Diagonal&) = default;
  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

// A triangulation of the labeled convex n-gon: exactly n - 3 pairwise
// noncrossing diagonals, kept sorted so the representation is canonical.
struct Triangulation {
  int n = 0;
  std::vector<Diagonal> diagonals;  // sorted ascending (i, j)

  bool contains(const Diagonal& d) const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;
  // Canonical order: (i, j) lexicographic on the sorted diagonal lists.
  friend bool operator<(const Triangulation& a, const Triangulation& b) {
    return a.diagonals < b.diagonals;
  }
};

Diagonal make_diagonal(int i, int j, int n);

bool is_valid_diagonal(const Diagonal& d, int n);

// Cyclic length of a diagonal (2 for an ear).
int diagonal_length(const Diagonal& d, int n);

bool is_ear(const Diagonal& d, int n);

// True iff the endpoints strictly interleave in cyclic order. Diagonals
// sharing an endpoint never cross.
bool crosses(const Diagonal& a, const Diagonal& b);

Diagonal rotate(const Diagonal& d, int k, int n);
Triangulation rotate(const Triangulation& t, int k);

// All triangulations of the n-gon in canonical ascending order.
// n = 3 yields the single empty triangulation.
std::vector<Triangulation> enumerate_triangulations(int n);

// Number of triangulations of an (m+2)-gon; C_0 = 1, C_1 = 1, C_2 = 2, ...
std::uint64_t catalan(int m);

// Replaces d by the opposite diagonal of the quadrilateral formed by the
// two triangles incident to d.
Triangulation flip(const Triangulation& t, const Diagonal& d);

// The replacement diagonal flip() would introduce.
Diagonal flip_partner(const Triangulation& t, const Diagonal& d);

bool are_disjoint(const Triangulation& a, const Triangulation& b);

// True iff the two triangulations differ by exactly one diagonal.
bool flip_adjacent(const Triangulation& a, const Triangulation& b);

// Canonical wire form "i-j,i-j,..." with pairs ascending.
std::string encode(const Triangulation& t);
std::string encode(const Diagonal& d);

Triangulation decode(const std::string& text, int n);

void validate_triangulation(const Triangulation& t);

}  // namespace kneser
