#include "kneser/perm.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

namespace kneser {

bool is_permutation(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

bool kg_perm_adjacent(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) {
    throw Error(Error::Kind::mismatched_n, "permutations of different sizes");
  }
  const int n = static_cast<int>(a.size());
  if (n > 64) throw Error(Error::Kind::invalid_size, "adjacency test limited to n <= 64");
  std::vector<int> pos_a(n + 1), pos_b(n + 1);
  for (int k = 0; k < n; ++k) {
    pos_a[a[k]] = k;
    pos_b[b[k]] = k;
  }
  std::uint64_t set_a = 0, set_b = 0;
  for (int v = 1; v <= n - 1; ++v) {
    set_a |= 1ull << pos_a[v];
    set_b |= 1ull << pos_b[v];
    if (set_a == set_b) return false;  // common facet: equal preimages of [v]
  }
  return true;
}

bool is_indecomposable(const Perm& p) {
  int running_max = 0;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    running_max = std::max(running_max, p[k]);
    if (running_max == static_cast<int>(k) + 1) return false;
  }
  return true;
}

bool kg_perm_adjacent_via_quotient(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) {
    throw Error(Error::Kind::mismatched_n, "permutations of different sizes");
  }
  // q = b after a^{-1}: q[a[k]] = b[k]. Equal prefix preimages of [v]
  // correspond exactly to q fixing [v].
  Perm q(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) q[a[k] - 1] = b[k];
  return is_indecomposable(q);
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw Error(Error::Kind::invalid_size, "factorial limited to 0 <= n <= 20");
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t count_indecomposable(int n) {
  if (n < 1 || n > 20) {
    throw Error(Error::Kind::invalid_size, "indecomposable count limited to 1 <= n <= 20");
  }
  std::vector<std::uint64_t> table(n + 1, 0);
  for (int m = 1; m <= n; ++m) {
    std::uint64_t sum = 0;
    for (int k = 1; k < m; ++k) sum += table[k] * factorial(m - k);
    table[m] = factorial(m) - sum;
  }
  return table[n];
}

bool indecomposable_lower_bound_holds(int n) {
  if (n < 2 || n > 20) {
    throw Error(Error::Kind::invalid_size, "bound check limited to 2 <= n <= 20");
  }
  std::uint64_t decomposable = factorial(n) - count_indecomposable(n);
  std::uint64_t rhs = 0;
  for (int p = 1; p <= n - 1; ++p) rhs += factorial(p) * factorial(n - p);
  return decomposable <= rhs;
}

SjtGenerator::SjtGenerator(int m) : m_(m) {
  if (m < 1 || m > 20) throw Error(Error::Kind::invalid_size, "SJT order limited to 1 <= m <= 20");
  perm_.resize(m);
  std::iota(perm_.begin(), perm_.end(), 1);
  dir_.assign(m, -1);
  remaining_ = factorial(m) - 1;
}

bool SjtGenerator::advance() {
  if (remaining_ == 0) return false;
  --remaining_;
  // Largest mobile value: one whose direction points at a smaller neighbor.
  int mobile_pos = -1;
  for (int k = 0; k < m_; ++k) {
    int target = k + dir_[perm_[k] - 1];
    if (target < 0 || target >= m_) continue;
    if (perm_[target] < perm_[k] && (mobile_pos < 0 || perm_[k] > perm_[mobile_pos])) {
      mobile_pos = k;
    }
  }
  if (mobile_pos < 0) {
    throw Error(Error::Kind::internal, "SJT ran out of mobile values early");
  }
  int value = perm_[mobile_pos];
  int target = mobile_pos + dir_[value - 1];
  std::swap(perm_[mobile_pos], perm_[target]);
  for (int v = value + 1; v <= m_; ++v) dir_[v - 1] = -dir_[v - 1];
  return true;
}

std::vector<Perm> sjt_cycle(int m) {
  if (m < 3) {
    throw Error(Error::Kind::invalid_size,
                "adjacent-transposition cycle needs m >= 3, got " + std::to_string(m));
  }
  std::vector<Perm> out;
  out.reserve(factorial(m));
  SjtGenerator gen(m);
  out.push_back(gen.current());
  while (gen.advance()) out.push_back(gen.current());
  return out;
}

void perm_hamiltonian_cycle(int n, const std::function<void(const Perm&)>& sink) {
  if (n < 3) {
    throw Error(Error::Kind::invalid_size,
                "permutohedron cycle needs n >= 3, got " + std::to_string(n));
  }
  // Marking permutations fix n; their clique is the left coset under the
  // cyclic shift rho. Emit each clique as rho^0, rho^2, ..., rho^{n-1},
  // rho^1 applied to the marker, so the path ends at a permutation sending
  // n to 1, which is adjacent to the next marker.
  SjtGenerator gen(n - 1);
  Perm marker(n);
  auto emit_clique = [&](const Perm& inner) {
    for (int k = 0; k < n - 1; ++k) marker[k] = inner[k];
    marker[n - 1] = n;
    auto emit_shift = [&](int j) {
      Perm shifted(n);
      for (int k = 0; k < n; ++k) shifted[k] = (marker[k] - 1 + j) % n + 1;
      sink(shifted);
    };
    emit_shift(0);
    for (int j = 2; j < n; ++j) emit_shift(j);
    emit_shift(1);
  };
  emit_clique(gen.current());
  while (gen.advance()) emit_clique(gen.current());
}

std::vector<Perm> perm_hamiltonian_cycle(int n) {
  std::vector<Perm> out;
  out.reserve(n <= 20 ? factorial(std::min(n, 20)) : 0);
  perm_hamiltonian_cycle(n, [&](const Perm& p) { out.push_back(p); });
  return out;
}

DensityReport density_report(int n, int k) {
  if (n < 2 || n > 20) throw Error(Error::Kind::invalid_size, "density report limited to 2 <= n <= 20");
  if (k < 1) throw Error(Error::Kind::invalid_size, "power k must be >= 1");
  DensityReport report;
  report.n = n;
  report.k = k;
  report.indecomposable = count_indecomposable(n);
  report.total = factorial(n);
  report.ratio = static_cast<double>(report.indecomposable) / static_cast<double>(report.total);
  // I(n) > k/(k+1) n!, compared exactly.
  report.threshold_met = (static_cast<unsigned __int128>(report.indecomposable) *
                          static_cast<unsigned __int128>(k + 1)) >
                         (static_cast<unsigned __int128>(report.total) *
                          static_cast<unsigned __int128>(k));
  return report;
}

std::string encode(const Perm& p) {
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k > 0) out += ' ';
    out += std::to_string(p[k]);
  }
  return out;
}

Perm decode_perm(const std::string& text, int n) {
  std::istringstream in(text);
  Perm p;
  int v;
  while (in >> v) p.push_back(v);
  if (!in.eof()) throw Error(Error::Kind::parse, "permutation line has trailing junk");
  if (static_cast<int>(p.size()) != n || !is_permutation(p)) {
    throw Error(Error::Kind::invalid_label,
                "not a permutation of 1.." + std::to_string(n) + ": \"" + text + "\"");
  }
  return p;
}

namespace {

std::uint64_t lehmer_rank(const Perm& p) {
  const int n = static_cast<int>(p.size());
  std::uint64_t rank = 0;
  for (int k = 0; k < n; ++k) {
    int smaller = 0;
    for (int j = k + 1; j < n; ++j) {
      if (p[j] < p[k]) ++smaller;
    }
    rank = rank * static_cast<std::uint64_t>(n - k) + static_cast<std::uint64_t>(smaller);
  }
  return rank;
}

}  // namespace

CertificateReport verify_perm_cycle(std::istream& in, int expected_n) {
  CertificateReport report;
  report.kind = "perm-ham";

  std::string line;
  if (!std::getline(in, line)) {
    throw Error(Error::Kind::parse, "line 1: empty input, expected header");
  }
  std::istringstream head(line);
  std::string tag, nfield, lenfield;
  head >> tag >> nfield >> lenfield;
  if (tag != "perm-ham" || nfield.rfind("n=", 0) != 0 || lenfield.rfind("len=", 0) != 0) {
    throw Error(Error::Kind::parse, "line 1: expected header \"perm-ham n=<N> len=<L>\"");
  }
  int n = 0;
  std::uint64_t len = 0;
  try {
    n = std::stoi(nfield.substr(2));
    len = std::stoull(lenfield.substr(4));
  } catch (const std::exception&) {
    throw Error(Error::Kind::parse, "line 1: malformed header numbers");
  }
  report.n = n;
  if (expected_n > 0 && n != expected_n) {
    report.checks.push_back({"header-n", false, 1,
                             "header says n=" + std::to_string(n) + ", expected n=" +
                                 std::to_string(expected_n)});
    return report;
  }
  if (n < 3) {
    report.checks.push_back({"header-n", false, 1, "no cycle exists for n < 3"});
    return report;
  }
  if (n > 12) {
    throw Error(Error::Kind::invalid_size,
                "verification bitmap holds n! bits and is limited to n <= 12");
  }

  CheckResult valid{"entries-valid", true, 0, ""};
  CheckResult adjacent{"consecutive-adjacent", true, 0, ""};
  CheckResult distinct{"entries-distinct", true, 0, ""};
  std::vector<bool> seen(factorial(n), false);
  Perm first, prev;
  std::uint64_t count = 0;
  std::uint64_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() && in.eof()) break;
    Perm p;
    try {
      p = decode_perm(line, n);
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
    std::uint64_t r = lehmer_rank(p);
    if (seen[r] && distinct.pass) {
      distinct.pass = false;
      distinct.witness = "entry " + std::to_string(count) + " repeats " + encode(p);
    }
    seen[r] = true;
    if (count > 0) {
      ++adjacent.items;
      if (adjacent.pass && !kg_perm_adjacent(prev, p)) {
        adjacent.pass = false;
        adjacent.witness = "entries " + std::to_string(count - 1) + " and " +
                           std::to_string(count) + ": " + encode(prev) + " | " + encode(p);
      }
    } else {
      first = p;
    }
    prev = std::move(p);
    ++count;
  }
  distinct.items = count;

  CheckResult total{"count", true, count, ""};
  if (count != len || count != factorial(n)) {
    total.pass = false;
    total.witness = "stream has " + std::to_string(count) + " entries, header says " +
                    std::to_string(len) + ", expected " + std::to_string(factorial(n));
  }
  if (count >= 2) {
    ++adjacent.items;
    if (adjacent.pass && !kg_perm_adjacent(prev, first)) {
      adjacent.pass = false;
      adjacent.witness = "wraparound: " + encode(prev) + " | " + encode(first);
    }
  }
  report.checks = {valid, adjacent, distinct, total};
  return report;
}

}  // namespace kneser
