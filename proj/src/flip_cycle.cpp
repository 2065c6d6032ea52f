#include "kneser/flip_cycle.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace kneser {

namespace {

// Neighbors of vertex 1 around the polygon [1..t.n], in descending order:
// t.n, then the fan vertices of 1, then 2. Consecutive entries are joined
// by an edge of the triangulation (its link path).
std::vector<int> link_of_vertex1(const Triangulation& t) {
  std::vector<int> link;
  link.push_back(t.n);
  std::vector<int> fan;
  for (const Diagonal& d : t.diagonals) {
    if (d.i == 1) fan.push_back(d.j);
  }
  for (auto it = fan.rbegin(); it != fan.rend(); ++it) link.push_back(*it);
  link.push_back(2);
  return link;
}

Triangulation with_diagonal(const Triangulation& t, int n, const Diagonal& extra) {
  Triangulation out;
  out.n = n;
  out.diagonals = t.diagonals;
  out.diagonals.insert(std::upper_bound(out.diagonals.begin(), out.diagonals.end(), extra), extra);
  return out;
}

void swap_diagonal(Triangulation& t, const Diagonal& remove, const Diagonal& add) {
  auto it = std::lower_bound(t.diagonals.begin(), t.diagonals.end(), remove);
  if (it == t.diagonals.end() || !(*it == remove)) {
    throw Error(Error::Kind::internal, "fiber step: missing diagonal " + encode(remove));
  }
  t.diagonals.erase(it);
  t.diagonals.insert(std::upper_bound(t.diagonals.begin(), t.diagonals.end(), add), add);
}

// Every triangulation of the m-gon arises from a unique triangulation of
// the (m-1)-gon by re-hanging a prefix of the fan at vertex 1 onto the new
// vertex m. The images of one base triangulation form a path in Flip(m):
//
//   fiber[0]   = base + ear {1, m-1}
//   fiber[t+1] = fiber[t] - {1, link[t]} + {link[t+1], m}
//
// fiber.front() keeps the whole fan at 1; fiber.back() has moved it all to
// m and equals the relabeling of `base` onto the polygon [2..m].
std::vector<Triangulation> insertion_fiber(const Triangulation& base, int m) {
  std::vector<int> link = link_of_vertex1(base);
  std::vector<Triangulation> fiber;
  fiber.reserve(link.size());
  fiber.push_back(with_diagonal(base, m, Diagonal{1, m - 1}));
  for (std::size_t t = 1; t < link.size(); ++t) {
    Triangulation next = fiber.back();
    swap_diagonal(next, Diagonal{1, link[t - 1]}, Diagonal{link[t], m});
    fiber.push_back(std::move(next));
  }
  return fiber;
}

struct FlipDiff {
  Diagonal removed;  // in a, not in b
  Diagonal added;    // in b, not in a
};

FlipDiff flip_diff(const Triangulation& a, const Triangulation& b) {
  FlipDiff diff;
  int removed = 0, added = 0;
  for (const Diagonal& d : a.diagonals) {
    if (!b.contains(d)) {
      diff.removed = d;
      ++removed;
    }
  }
  for (const Diagonal& d : b.diagonals) {
    if (!a.contains(d)) {
      diff.added = d;
      ++added;
    }
  }
  if (removed != 1 || added != 1) {
    throw Error(Error::Kind::internal, "expected flip-adjacent pair: " + encode(a) + " / " + encode(b));
  }
  return diff;
}

// A base edge lifts to every fiber level when the flipped quadrilateral is
// disjoint from the star of vertex 1: neither exchanged diagonal touches
// vertex 1 or an edge of its link path.
bool edge_clears_vertex1(const Triangulation& a, const Triangulation& b) {
  FlipDiff diff = flip_diff(a, b);
  if (diff.removed.i == 1 || diff.added.i == 1) return false;
  std::vector<int> link = link_of_vertex1(a);
  for (std::size_t k = 0; k + 1 < link.size(); ++k) {
    Diagonal e{std::min(link[k], link[k + 1]), std::max(link[k], link[k + 1])};
    if (diff.removed == e || diff.added == e) return false;
  }
  return true;
}

FlipHamCycle pentagon_cycle() {
  auto tri = [](int a1, int b1, int a2, int b2) {
    Triangulation t;
    t.n = 5;
    t.diagonals = {Diagonal{a1, b1}, Diagonal{a2, b2}};
    std::sort(t.diagonals.begin(), t.diagonals.end());
    return t;
  };
  FlipHamCycle cycle;
  cycle.m = 5;
  cycle.seq = {tri(1, 3, 1, 4), tri(1, 3, 3, 5), tri(2, 5, 3, 5), tri(2, 4, 2, 5), tri(1, 4, 2, 4)};
  return cycle;
}

FlipHamCycle build_recursive(int m) {
  if (m == 5) return pentagon_cycle();
  if (m == 6) return flip_hamiltonian_cycle_backtracking(6);

  std::vector<Triangulation> base = build_recursive(m - 1).seq;
  const std::size_t n_fibers = base.size();
  std::vector<Triangulation> out;
  out.reserve(catalan(m - 2));

  std::size_t plain_fibers = n_fibers;
  if (n_fibers % 2 == 1) {
    // An odd number of fibers cannot be covered by the plain alternating
    // sweep. Repair: find a base edge whose flip clears vertex 1 and whose
    // fibers have odd length, and cover that pair of fibers with a grid
    // zigzag that enters at the far end of one and leaves at the near end
    // of the other.
    std::size_t defect = n_fibers;
    for (std::size_t j = 0; j < n_fibers; ++j) {
      const Triangulation& a = base[j];
      const Triangulation& b = base[(j + 1) % n_fibers];
      if (!edge_clears_vertex1(a, b)) continue;
      std::size_t fan1 = link_of_vertex1(a).size() - 1;  // fiber length = fan1 + 1
      if ((fan1 + 1) % 2 == 1) {
        defect = j;
        break;
      }
    }
    if (defect == n_fibers) {
      throw Error(Error::Kind::internal,
                  "no usable repair edge in the flip cycle base for m = " + std::to_string(m));
    }
    // Rotate the base cycle so the repair edge sits at (n_fibers-2, n_fibers-1).
    std::vector<Triangulation> rotated(n_fibers);
    std::size_t shift = (defect + 2) % n_fibers;
    for (std::size_t k = 0; k < n_fibers; ++k) rotated[k] = base[(k + shift) % n_fibers];
    base = std::move(rotated);
    plain_fibers = n_fibers - 2;
  }

  for (std::size_t j = 0; j < plain_fibers; ++j) {
    std::vector<Triangulation> fiber = insertion_fiber(base[j], m);
    if (j % 2 == 0) {
      out.insert(out.end(), fiber.begin(), fiber.end());
    } else {
      out.insert(out.end(), fiber.rbegin(), fiber.rend());
    }
  }

  if (plain_fibers != n_fibers) {
    std::vector<Triangulation> fu = insertion_fiber(base[n_fibers - 2], m);
    std::vector<Triangulation> fv = insertion_fiber(base[n_fibers - 1], m);
    if (fu.size() != fv.size() || fu.size() % 2 == 0) {
      throw Error(Error::Kind::internal, "repair fibers must have equal odd length");
    }
    std::size_t levels = fu.size();
    for (std::size_t back = 0; back < levels; ++back) {
      std::size_t level = levels - 1 - back;
      if (back % 2 == 0) {
        out.push_back(fu[level]);
        out.push_back(fv[level]);
      } else {
        out.push_back(fv[level]);
        out.push_back(fu[level]);
      }
    }
  }

  FlipHamCycle cycle;
  cycle.m = m;
  cycle.seq = std::move(out);
  return cycle;
}

}  // namespace

void normalize_cycle(std::vector<Triangulation>& seq) {
  if (seq.size() < 3) return;
  std::size_t best = 0;
  for (std::size_t k = 1; k < seq.size(); ++k) {
    if (seq[k] < seq[best]) best = k;
  }
  std::rotate(seq.begin(), seq.begin() + best, seq.end());
  if (seq.back() < seq[1]) {
    std::reverse(seq.begin() + 1, seq.end());
  }
}

void check_flip_hamiltonian(const FlipHamCycle& cycle) {
  std::uint64_t expected = catalan(cycle.m - 2);
  if (cycle.seq.size() != expected) {
    throw Error(Error::Kind::internal, "flip cycle for m = " + std::to_string(cycle.m) + " has " +
                                           std::to_string(cycle.seq.size()) + " entries, expected " +
                                           std::to_string(expected));
  }
  std::unordered_set<std::string> seen;
  seen.reserve(cycle.seq.size() * 2);
  for (const Triangulation& t : cycle.seq) {
    if (t.n != cycle.m) throw Error(Error::Kind::internal, "flip cycle entry has wrong polygon size");
    validate_triangulation(t);
    if (!seen.insert(encode(t)).second) {
      throw Error(Error::Kind::internal, "flip cycle repeats " + encode(t));
    }
  }
  for (std::size_t k = 0; k < cycle.seq.size(); ++k) {
    const Triangulation& a = cycle.seq[k];
    const Triangulation& b = cycle.seq[(k + 1) % cycle.seq.size()];
    if (!flip_adjacent(a, b)) {
      throw Error(Error::Kind::internal,
                  "flip cycle entries " + std::to_string(k) + " and " + std::to_string(k + 1) +
                      " are not flip-adjacent: " + encode(a) + " / " + encode(b));
    }
  }
}

FlipHamCycle flip_hamiltonian_cycle(int m) {
  if (m <= 4) {
    throw Error(Error::Kind::invalid_size,
                "Flip(" + std::to_string(m) + ") has no Hamiltonian cycle; need m >= 5");
  }
  FlipHamCycle cycle = build_recursive(m);
  normalize_cycle(cycle.seq);
  check_flip_hamiltonian(cycle);
  return cycle;
}

FlipHamCycle flip_hamiltonian_cycle_backtracking(int m) {
  if (m <= 4) {
    throw Error(Error::Kind::invalid_size,
                "Flip(" + std::to_string(m) + ") has no Hamiltonian cycle; need m >= 5");
  }
  std::vector<Triangulation> verts = enumerate_triangulations(m);
  const std::size_t count = verts.size();
  std::unordered_map<std::string, std::size_t> id;
  id.reserve(count * 2);
  for (std::size_t k = 0; k < count; ++k) id.emplace(encode(verts[k]), k);

  std::vector<std::vector<std::size_t>> adj(count);
  for (std::size_t k = 0; k < count; ++k) {
    for (const Diagonal& d : verts[k].diagonals) {
      adj[k].push_back(id.at(encode(flip(verts[k], d))));
    }
    std::sort(adj[k].begin(), adj[k].end());
  }

  // Depth-first search anchored at vertex 0. Children are tried with the
  // fewest onward moves first (ties by index); a branch is cut as soon as
  // some unvisited vertex can no longer pick up two cycle neighbors, which
  // may only come from unvisited vertices, the path end, or vertex 0.
  std::vector<std::size_t> path{0};
  std::vector<bool> visited(count, false);
  std::vector<int> unvisited_degree(count, 0);
  for (std::size_t v = 0; v < count; ++v) unvisited_degree[v] = static_cast<int>(adj[v].size());
  visited[0] = true;
  for (std::size_t nb : adj[0]) unvisited_degree[nb] -= 1;

  std::vector<std::size_t> reach_stack;
  std::vector<unsigned> reach_mark(count, 0);
  unsigned reach_epoch = 0;

  auto feasible = [&](std::size_t end) {
    if (path.size() == count) return true;
    // The cycle must close through an unvisited neighbor of the anchor.
    bool anchor_open = false;
    for (std::size_t nb : adj[0]) {
      if (!visited[nb]) {
        anchor_open = true;
        break;
      }
    }
    if (!anchor_open) return false;
    // Every unvisited vertex still needs two cycle neighbors, drawn from
    // unvisited vertices, the path end, or the anchor.
    for (std::size_t u = 0; u < count; ++u) {
      if (visited[u]) continue;
      int candidates = unvisited_degree[u];
      if (std::binary_search(adj[u].begin(), adj[u].end(), end)) ++candidates;
      if (std::binary_search(adj[u].begin(), adj[u].end(), std::size_t{0})) ++candidates;
      if (candidates < 2) return false;
    }
    // The unvisited region must be reachable from the path end in one piece.
    ++reach_epoch;
    reach_stack.clear();
    std::size_t seen = 0;
    for (std::size_t nb : adj[end]) {
      if (!visited[nb] && reach_mark[nb] != reach_epoch) {
        reach_mark[nb] = reach_epoch;
        reach_stack.push_back(nb);
        ++seen;
      }
    }
    while (!reach_stack.empty()) {
      std::size_t v = reach_stack.back();
      reach_stack.pop_back();
      for (std::size_t nb : adj[v]) {
        if (!visited[nb] && reach_mark[nb] != reach_epoch) {
          reach_mark[nb] = reach_epoch;
          reach_stack.push_back(nb);
          ++seen;
        }
      }
    }
    return seen == count - path.size();
  };

  auto dfs = [&](auto&& self, std::size_t cur) -> bool {
    if (path.size() == count) {
      return std::binary_search(adj[cur].begin(), adj[cur].end(), std::size_t{0});
    }
    std::vector<std::pair<int, std::size_t>> order;
    for (std::size_t cand : adj[cur]) {
      if (!visited[cand]) order.push_back({unvisited_degree[cand], cand});
    }
    std::sort(order.begin(), order.end());
    for (auto [deg, cand] : order) {
      visited[cand] = true;
      path.push_back(cand);
      for (std::size_t nb : adj[cand]) unvisited_degree[nb] -= 1;
      if (feasible(cand) && self(self, cand)) return true;
      for (std::size_t nb : adj[cand]) unvisited_degree[nb] += 1;
      path.pop_back();
      visited[cand] = false;
    }
    return false;
  };

  if (!dfs(dfs, 0)) {
    throw Error(Error::Kind::internal,
                "backtracking found no Hamiltonian cycle in Flip(" + std::to_string(m) + ")");
  }
  FlipHamCycle cycle;
  cycle.m = m;
  cycle.seq.reserve(count);
  for (std::size_t k : path) cycle.seq.push_back(verts[k]);
  normalize_cycle(cycle.seq);
  check_flip_hamiltonian(cycle);
  return cycle;
}

}  // namespace kneser
