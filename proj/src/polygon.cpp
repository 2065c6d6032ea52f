#include "kneser/polygon.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace kneser {

namespace {

int wrap1(int x, int n) {
  int r = (x - 1) % n;
  if (r < 0) r += n;
  return r + 1;
}

}  // namespace

bool Triangulation::contains(const Diagonal& d) const {
  return std::binary_search(diagonals.begin(), diagonals.end(), d);
}

Diagonal make_diagonal(int i, int j, int n) {
  if (i > j) std::swap(i, j);
  Diagonal d{i, j};
  if (!is_valid_diagonal(d, n)) {
    throw Error(Error::Kind::invalid_label,
                "not a diagonal of the " + std::to_string(n) + "-gon: " + encode(d));
  }
  return d;
}

bool is_valid_diagonal(const Diagonal& d, int n) {
  if (n < 4) return false;
  if (d.i < 1 || d.j > n || d.i >= d.j) return false;
  int gap = d.j - d.i;
  return gap >= 2 && gap <= n - 2;
}

int diagonal_length(const Diagonal& d, int n) {
  int gap = d.j - d.i;
  return std::min(gap, n - gap);
}

bool is_ear(const Diagonal& d, int n) { return diagonal_length(d, n) == 2; }

bool crosses(const Diagonal& a, const Diagonal& b) {
  if (a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j) return false;
  // Normalized endpoints, so interleaving means exactly one of b's
  // endpoints lies strictly inside the arc (a.i, a.j).
  bool bi_inside = a.i < b.i && b.i < a.j;
  bool bj_inside = a.i < b.j && b.j < a.j;
  return bi_inside != bj_inside;
}

Diagonal rotate(const Diagonal& d, int k, int n) {
  int i = wrap1(d.i + k, n);
  int j = wrap1(d.j + k, n);
  if (i > j) std::swap(i, j);
  return Diagonal{i, j};
}

Triangulation rotate(const Triangulation& t, int k) {
  Triangulation out;
  out.n = t.n;
  out.diagonals.reserve(t.diagonals.size());
  for (const Diagonal& d : t.diagonals) out.diagonals.push_back(rotate(d, k, t.n));
  std::sort(out.diagonals.begin(), out.diagonals.end());
  return out;
}

namespace {

// Triangulations of the polygon spanned by the contiguous vertex range
// [a..b] (all diagonals strictly inside it). Classic recursion on the apex
// of the triangle resting on the edge (a, b).
std::vector<std::vector<Diagonal>> enumerate_range(int a, int b) {
  std::vector<std::vector<Diagonal>> out;
  if (b - a + 1 < 4) {
    out.push_back({});
    return out;
  }
  for (int v = a + 1; v < b; ++v) {
    auto left = enumerate_range(a, v);
    auto right = enumerate_range(v, b);
    for (const auto& l : left) {
      for (const auto& r : right) {
        std::vector<Diagonal> diags;
        diags.reserve(l.size() + r.size() + 2);
        diags.insert(diags.end(), l.begin(), l.end());
        diags.insert(diags.end(), r.begin(), r.end());
        if (v - a >= 2) diags.push_back(Diagonal{a, v});
        if (b - v >= 2) diags.push_back(Diagonal{v, b});
        out.push_back(std::move(diags));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Triangulation> enumerate_triangulations(int n) {
  if (n < 3) {
    throw Error(Error::Kind::invalid_size,
                "enumerate_triangulations requires n >= 3, got " + std::to_string(n));
  }
  std::vector<Triangulation> out;
  if (n == 3) {
    out.push_back(Triangulation{3, {}});
    return out;
  }
  auto raw = enumerate_range(1, n);
  out.reserve(raw.size());
  for (auto& diags : raw) {
    std::sort(diags.begin(), diags.end());
    out.push_back(Triangulation{n, std::move(diags)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t catalan(int m) {
  if (m < 0) throw Error(Error::Kind::invalid_size, "catalan index must be nonnegative");
  if (m > 33) throw Error(Error::Kind::invalid_size, "catalan(m) overflows 64 bits beyond m = 33");
  static const auto table = [] {
    std::vector<std::uint64_t> c(34, 0);
    c[0] = 1;
    for (int k = 1; k < 34; ++k) {
      for (int i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
    }
    return c;
  }();
  return table[m];
}

namespace {

bool polygon_edge(int x, int y, int n) {
  if (x > y) std::swap(x, y);
  return y - x == 1 || (x == 1 && y == n);
}

}  // namespace

Diagonal flip_partner(const Triangulation& t, const Diagonal& d) {
  if (!t.contains(d)) {
    throw Error(Error::Kind::not_present, "flip: diagonal " + encode(d) + " not in triangulation");
  }
  // The two faces incident to d have apexes v with both (d.i, v) and
  // (v, d.j) present as boundary edges or diagonals; one per side of d.
  int apex_inside = 0, apex_outside = 0;
  for (int v = 1; v <= t.n; ++v) {
    if (v == d.i || v == d.j) continue;
    bool left = polygon_edge(d.i, v, t.n) ||
                t.contains(Diagonal{std::min(d.i, v), std::max(d.i, v)});
    if (!left) continue;
    bool right = polygon_edge(v, d.j, t.n) ||
                 t.contains(Diagonal{std::min(v, d.j), std::max(v, d.j)});
    if (!right) continue;
    if (d.i < v && v < d.j) {
      apex_inside = v;
    } else {
      apex_outside = v;
    }
  }
  if (apex_inside == 0 || apex_outside == 0) {
    throw Error(Error::Kind::internal, "flip: could not locate both incident triangles");
  }
  int a = apex_inside, b = apex_outside;
  if (a > b) std::swap(a, b);
  return Diagonal{a, b};
}

Triangulation flip(const Triangulation& t, const Diagonal& d) {
  Diagonal star = flip_partner(t, d);
  Triangulation out;
  out.n = t.n;
  out.diagonals.reserve(t.diagonals.size());
  for (const Diagonal& x : t.diagonals) {
    if (!(x == d)) out.diagonals.push_back(x);
  }
  out.diagonals.push_back(star);
  std::sort(out.diagonals.begin(), out.diagonals.end());
  return out;
}

bool are_disjoint(const Triangulation& a, const Triangulation& b) {
  if (a.n != b.n) {
    throw Error(Error::Kind::mismatched_n, "are_disjoint: triangulations of different polygons");
  }
  auto ia = a.diagonals.begin();
  auto ib = b.diagonals.begin();
  while (ia != a.diagonals.end() && ib != b.diagonals.end()) {
    if (*ia == *ib) return false;
    if (*ia < *ib) {
      ++ia;
    } else {
      ++ib;
    }
  }
  return true;
}

bool flip_adjacent(const Triangulation& a, const Triangulation& b) {
  if (a.n != b.n || a.diagonals.size() != b.diagonals.size()) return false;
  std::size_t shared = 0;
  auto ia = a.diagonals.begin();
  auto ib = b.diagonals.begin();
  while (ia != a.diagonals.end() && ib != b.diagonals.end()) {
    if (*ia == *ib) {
      ++shared;
      ++ia;
      ++ib;
    } else if (*ia < *ib) {
      ++ia;
    } else {
      ++ib;
    }
  }
  return shared + 1 == a.diagonals.size();
}

std::string encode(const Diagonal& d) {
  return std::to_string(d.i) + "-" + std::to_string(d.j);
}

std::string encode(const Triangulation& t) {
  std::string out;
  for (std::size_t k = 0; k < t.diagonals.size(); ++k) {
    if (k > 0) out += ',';
    out += encode(t.diagonals[k]);
  }
  return out;
}

namespace {

int parse_label(const std::string& text, std::size_t& pos) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
  if (ec != std::errc() || ptr == text.data() + pos) {
    throw Error(Error::Kind::parse, "decode: expected a vertex label at offset " +
                                        std::to_string(pos) + " in \"" + text + "\"");
  }
  pos = static_cast<std::size_t>(ptr - text.data());
  return value;
}

}  // namespace

Triangulation decode(const std::string& text, int n) {
  if (n < 3) throw Error(Error::Kind::invalid_size, "decode: polygon size must be >= 3");
  Triangulation t;
  t.n = n;
  std::size_t pos = 0;
  if (!text.empty()) {
    while (true) {
      int i = parse_label(text, pos);
      if (pos >= text.size() || text[pos] != '-') {
        throw Error(Error::Kind::parse, "decode: expected '-' at offset " + std::to_string(pos));
      }
      ++pos;
      int j = parse_label(text, pos);
      if (i > j) std::swap(i, j);
      Diagonal d{i, j};
      if (!is_valid_diagonal(d, n)) {
        throw Error(Error::Kind::invalid_label,
                    "decode: " + encode(d) + " is not a diagonal of the " + std::to_string(n) +
                        "-gon");
      }
      t.diagonals.push_back(d);
      if (pos == text.size()) break;
      if (text[pos] != ',') {
        throw Error(Error::Kind::parse, "decode: expected ',' at offset " + std::to_string(pos));
      }
      ++pos;
    }
  }
  std::sort(t.diagonals.begin(), t.diagonals.end());
  validate_triangulation(t);
  return t;
}

void validate_triangulation(const Triangulation& t) {
  if (t.n < 3) throw Error(Error::Kind::invalid_size, "triangulation: polygon size must be >= 3");
  if (t.diagonals.size() != static_cast<std::size_t>(t.n - 3)) {
    throw Error(Error::Kind::cardinality,
                "triangulation of the " + std::to_string(t.n) + "-gon needs " +
                    std::to_string(t.n - 3) + " diagonals, got " +
                    std::to_string(t.diagonals.size()));
  }
  for (std::size_t a = 0; a < t.diagonals.size(); ++a) {
    if (!is_valid_diagonal(t.diagonals[a], t.n)) {
      throw Error(Error::Kind::invalid_label,
                  "triangulation contains invalid diagonal " + encode(t.diagonals[a]));
    }
    if (a > 0 && !(t.diagonals[a - 1] < t.diagonals[a])) {
      throw Error(Error::Kind::cardinality,
                  "triangulation has duplicate diagonal " + encode(t.diagonals[a]));
    }
    for (std::size_t b = a + 1; b < t.diagonals.size(); ++b) {
      if (crosses(t.diagonals[a], t.diagonals[b])) {
        throw Error(Error::Kind::crossing, "diagonals " + encode(t.diagonals[a]) + " and " +
                                               encode(t.diagonals[b]) + " cross");
      }
    }
  }
}

}  // namespace kneser
