#include "kneser/verify.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <thread>

#include "kneser/bridges.hpp"
#include "kneser/guide.hpp"
#include "kneser/orbits.hpp"
#include "kneser/splice.hpp"

namespace kneser {

bool CertificateReport::pass() const {
  for (const CheckResult& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::string CertificateReport::to_text() const {
  std::ostringstream out;
  out << kind << " n=" << n << "\n";
  for (const CheckResult& c : checks) {
    out << "  check " << c.name << ": " << (c.pass ? "pass" : "FAIL") << " (" << c.items
        << " items)";
    if (!c.pass && !c.witness.empty()) out << " witness: " << c.witness;
    out << "\n";
  }
  out << "RESULT " << (pass() ? "pass" : "fail") << " checks=" << checks.size() << "\n";
  return out.str();
}

namespace {

struct HeaderInfo {
  int n = 0;
  std::uint64_t len = 0;
};

HeaderInfo parse_header(const std::string& line) {
  std::istringstream in(line);
  std::string tag, nfield, lenfield;
  in >> tag >> nfield >> lenfield;
  HeaderInfo h;
  if (tag != "kneser-ham" || nfield.rfind("n=", 0) != 0 || lenfield.rfind("len=", 0) != 0) {
    throw Error(Error::Kind::parse, "line 1: expected header \"kneser-ham n=<N> len=<L>\"");
  }
  try {
    h.n = std::stoi(nfield.substr(2));
    h.len = std::stoull(lenfield.substr(4));
  } catch (const std::exception&) {
    throw Error(Error::Kind::parse, "line 1: malformed header numbers");
  }
  return h;
}

// Pairwise disjointness over a block of consecutive entries, split across
// threads. Returns the smallest failing index or npos.
std::size_t scan_block(const std::vector<Triangulation>& block, int threads) {
  const std::size_t pairs = block.size() - 1;
  if (threads <= 1 || pairs < 1024) {
    for (std::size_t k = 0; k < pairs; ++k) {
      if (!are_disjoint(block[k], block[k + 1])) return k;
    }
    return std::string::npos;
  }
  std::vector<std::size_t> firsts(static_cast<std::size_t>(threads), std::string::npos);
  std::vector<std::thread> pool;
  std::size_t chunk = (pairs + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      std::size_t lo = static_cast<std::size_t>(t) * chunk;
      std::size_t hi = std::min(pairs, lo + chunk);
      for (std::size_t k = lo; k < hi; ++k) {
        if (!are_disjoint(block[k], block[k + 1])) {
          firsts[static_cast<std::size_t>(t)] = k;
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  std::size_t best = std::string::npos;
  for (std::size_t f : firsts) best = std::min(best, f);
  return best;
}

}  // namespace

CertificateReport verify_kneser_cycle(std::istream& in, int expected_n, int threads) {
  CertificateReport report;
  report.kind = "kneser-ham";

  std::string line;
  if (!std::getline(in, line)) {
    throw Error(Error::Kind::parse, "line 1: empty input, expected header");
  }
  HeaderInfo header = parse_header(line);
  report.n = header.n;
  if (expected_n > 0 && header.n != expected_n) {
    report.checks.push_back({"header-n", false, 1,
                             "header says n=" + std::to_string(header.n) + ", expected n=" +
                                 std::to_string(expected_n)});
    return report;
  }
  if (header.n < 5) {
    report.checks.push_back({"header-n", false, 1, "no Hamiltonian cycle exists for n < 5"});
    return report;
  }

  // Rank table in enumeration order; one bit of membership per rank.
  auto all = enumerate_triangulations(header.n);
  std::unordered_map<std::string, std::size_t> rank;
  rank.reserve(all.size() * 2);
  for (std::size_t k = 0; k < all.size(); ++k) rank.emplace(encode(all[k]), k);
  std::vector<bool> seen(all.size(), false);

  CheckResult valid{"entries-valid", true, 0, ""};
  CheckResult distinct{"entries-distinct", true, 0, ""};
  CheckResult adjacent{"consecutive-disjoint", true, 0, ""};

  const std::size_t block_max = 1 << 14;
  std::vector<Triangulation> block;
  block.reserve(block_max + 1);
  Triangulation first_entry, prev_entry;
  std::uint64_t count = 0;
  std::uint64_t line_no = 1;
  std::uint64_t block_start_count = 0;

  auto flush_block = [&]() {
    if (block.size() < 2) return;
    std::size_t bad = scan_block(block, threads);
    if (bad != std::string::npos && adjacent.pass) {
      adjacent.pass = false;
      adjacent.witness = "entries " + std::to_string(block_start_count + bad) + " and " +
                         std::to_string(block_start_count + bad + 1) + ": " +
                         encode(block[bad]) + " | " + encode(block[bad + 1]);
    }
    adjacent.items += block.size() - 1;
    Triangulation carry = block.back();
    block.clear();
    block.push_back(std::move(carry));
    block_start_count = count - 1;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() && in.eof()) break;
    Triangulation t;
    try {
      t = decode(line, header.n);
    } catch (const Error& e) {
      if (e.kind() == Error::Kind::parse) {
        throw Error(Error::Kind::parse, "line " + std::to_string(line_no) + ": " + e.what());
      }
      valid.pass = false;
      valid.witness = "line " + std::to_string(line_no) + ": " + e.what();
      report.checks = {valid};
      return report;
    }
    ++valid.items;
    ++count;
    std::size_t r = rank.at(encode(t));
    if (seen[r]) {
      distinct.pass = false;
      if (distinct.witness.empty()) {
        distinct.witness = "entry " + std::to_string(count - 1) + " repeats " + encode(t);
      }
    }
    seen[r] = true;
    if (count == 1) first_entry = t;
    block.push_back(std::move(t));
    if (block.size() > block_max) flush_block();
  }
  distinct.items = count;

  CheckResult total{"count", true, count, ""};
  if (count != header.len) {
    total.pass = false;
    total.witness = "header promises " + std::to_string(header.len) + " entries, stream has " +
                    std::to_string(count);
  }
  std::uint64_t expected = catalan(header.n - 2);
  if (count != expected) {
    total.pass = false;
    total.witness += std::string(total.witness.empty() ? "" : "; ") + "expected " +
                     std::to_string(expected) + " triangulations of the " +
                     std::to_string(header.n) + "-gon, got " + std::to_string(count);
  }

  if (count >= 2) {
    flush_block();
    prev_entry = block.front();
    ++adjacent.items;
    if (adjacent.pass && !are_disjoint(prev_entry, first_entry)) {
      adjacent.pass = false;
      adjacent.witness = "wraparound entries " + std::to_string(count - 1) + " and 0: " +
                         encode(prev_entry) + " | " + encode(first_entry);
    }
  } else if (count < 2 && total.pass) {
    adjacent.pass = false;
    adjacent.witness = "cycle needs at least 3 entries";
  }

  report.checks = {valid, adjacent, distinct, total};
  return report;
}

bool KneserOracle::adjacent(const Triangulation& a, const Triangulation& b) const {
  return adj[id.at(encode(a))][id.at(encode(b))];
}

std::size_t KneserOracle::degree(std::size_t v) const {
  return static_cast<std::size_t>(std::count(adj[v].begin(), adj[v].end(), true));
}

KneserOracle brute_force_kneser_graph(int n) {
  if (n < 4) throw Error(Error::Kind::invalid_size, "oracle needs n >= 4");
  if (n > 9) {
    throw Error(Error::Kind::invalid_size,
                "full adjacency oracle is limited to n <= 9 (quadratic in C_{n-2}); "
                "use the streaming verifier instead");
  }
  KneserOracle oracle;
  oracle.n = n;
  oracle.verts = enumerate_triangulations(n);
  const std::size_t count = oracle.verts.size();
  oracle.id.reserve(count * 2);
  for (std::size_t k = 0; k < count; ++k) oracle.id.emplace(encode(oracle.verts[k]), k);
  oracle.adj.assign(count, std::vector<bool>(count, false));
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a + 1; b < count; ++b) {
      bool d = are_disjoint(oracle.verts[a], oracle.verts[b]);
      oracle.adj[a][b] = d;
      oracle.adj[b][a] = d;
    }
  }
  return oracle;
}

namespace {

bool all_ears(const Triangulation& t) {
  for (const Diagonal& d : t.diagonals) {
    if (!is_ear(d, t.n)) return false;
  }
  return true;
}

CheckResult check_orbit_sizes(const OrbitPartition& part) {
  CheckResult check{"orbit-sizes", true, 0, ""};
  for (const RotationOrbit& orbit : part.orbits) {
    ++check.items;
    int s = orbit.size();
    if (part.n % s != 0) {
      check.pass = false;
      check.witness = "orbit of " + encode(orbit.rep) + " has size " + std::to_string(s) +
                      " which does not divide n";
      break;
    }
    bool ears = all_ears(orbit.rep);
    bool size_two_allowed = (part.n == 4 || part.n == 6) && ears;
    if (s == 2 && !size_two_allowed) {
      check.pass = false;
      check.witness = "unexpected size-2 orbit at " + encode(orbit.rep);
      break;
    }
    if (part.n >= 7 && s < 3) {
      check.pass = false;
      check.witness = "orbit of " + encode(orbit.rep) + " smaller than 3 at n >= 7";
      break;
    }
    if ((part.n == 4 || part.n == 6) && ears && s != 2) {
      check.pass = false;
      check.witness = "all-ears orbit at " + encode(orbit.rep) + " should have size 2";
      break;
    }
  }
  return check;
}

CheckResult check_rotation_disjoint(const std::vector<Triangulation>& all, std::size_t stride) {
  CheckResult check{stride == 1 ? "rotation-disjoint" : "rotation-disjoint-sampled", true, 0, ""};
  for (std::size_t k = 0; k < all.size(); k += stride) {
    ++check.items;
    if (!are_disjoint(all[k], rotate(all[k], 1))) {
      check.pass = false;
      check.witness = encode(all[k]) + " shares a diagonal with its rotation";
      break;
    }
  }
  return check;
}

CheckResult check_flip_rotation(const std::vector<Triangulation>& all, std::size_t stride) {
  CheckResult check{stride == 1 ? "flip-rotation-separation" : "flip-rotation-separation-sampled",
                    true, 0, ""};
  for (std::size_t k = 0; k < all.size() && check.pass; k += stride) {
    for (const Diagonal& d : all[k].diagonals) {
      Triangulation other = flip(all[k], d);
      ++check.items;
      if (!are_disjoint(all[k], rotate(other, 1)) && !are_disjoint(all[k], rotate(other, -1))) {
        check.pass = false;
        check.witness = "flip pair " + encode(all[k]) + " / " + encode(other) +
                        " separated by neither rotation sign";
        break;
      }
    }
  }
  return check;
}

}  // namespace

CertificateReport verify_lemmas(int n) {
  if (n < 4) throw Error(Error::Kind::invalid_size, "structural suites need n >= 4");
  if (n > 14) {
    throw Error(Error::Kind::invalid_size,
                "structural suites are limited to n <= 14; larger n would enumerate "
                "more than a million triangulations");
  }
  CertificateReport report;
  report.kind = "lemma-suites";
  report.n = n;

  OrbitPartition part = orbit_partition(n);
  report.checks.push_back(check_orbit_sizes(part));

  auto all = enumerate_triangulations(n);
  std::size_t stride_rot = n <= 10 ? 1 : (all.size() / 2000 + 1);
  report.checks.push_back(check_rotation_disjoint(all, stride_rot));
  if (n >= 5) {
    // At n = 4 the two rotations of the opposite diagonal coincide, so no
    // sign can separate the lone flip pair; the property starts at n = 5.
    std::size_t stride_flip = n <= 9 ? 1 : (all.size() / 1000 + 1);
    report.checks.push_back(check_flip_rotation(all, stride_flip));
  }

  if (n >= 6) {
    GuideCycle guide = build_guide_cycle(n);
    OrbitTree tree = build_orbit_tree(guide, part);

    CheckResult degree{"orbit-tree-degree", true, 0, ""};
    std::vector<int> guide_hits(part.orbits.size(), 0);
    for (const Triangulation& t : guide.seq) guide_hits[part.slot_of(t).orbit] += 1;
    for (std::size_t id = 0; id < part.orbits.size(); ++id) {
      ++degree.items;
      int deg = tree.degree(static_cast<int>(id));
      int size = part.orbits[id].size();
      if (2 * guide_hits[id] > size || deg > 1 + guide_hits[id] || deg > size) {
        degree.pass = false;
        degree.witness = "orbit " + std::to_string(id) + ": degree " + std::to_string(deg) +
                         ", guide hits " + std::to_string(guide_hits[id]) + ", size " +
                         std::to_string(size);
        break;
      }
    }
    report.checks.push_back(degree);

    AugmentedFactor factor = select_bridges(tree, part);
    CheckResult aug{"augmented-factor", true, 0, ""};
    for (std::size_t id = 0; id < factor.degree.size() && aug.pass; ++id) {
      for (int deg : factor.degree[id]) {
        ++aug.items;
        if (deg > 3) {
          aug.pass = false;
          aug.witness = "vertex in orbit " + std::to_string(id) + " reaches degree " +
                        std::to_string(deg);
          break;
        }
      }
    }
    std::vector<std::pair<int, int>> contracted;
    for (const BridgeEdge& bridge : factor.bridges) {
      ++aug.items;
      int oa = part.slot_of(bridge.a).orbit;
      int ob = part.slot_of(bridge.b).orbit;
      if (oa == ob) {
        aug.pass = false;
        aug.witness = "bridge endpoints share orbit " + std::to_string(oa);
        break;
      }
      if (!are_disjoint(bridge.a, bridge.b)) {
        aug.pass = false;
        aug.witness = "bridge " + encode(bridge.a) + " | " + encode(bridge.b) + " not disjoint";
        break;
      }
      contracted.push_back({std::min(oa, ob), std::max(oa, ob)});
    }
    if (aug.pass) {
      std::vector<std::pair<int, int>> tree_edges;
      for (std::size_t id = 0; id < part.orbits.size(); ++id) {
        int p = tree.parent[id];
        if (p >= 0) tree_edges.push_back({std::min<int>(id, p), std::max<int>(id, p)});
      }
      std::sort(contracted.begin(), contracted.end());
      std::sort(tree_edges.begin(), tree_edges.end());
      if (contracted != tree_edges) {
        aug.pass = false;
        aug.witness = "contracting orbits does not reproduce the tree";
      }
    }
    report.checks.push_back(aug);
  }

  return report;
}

}  // namespace kneser
