#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "kneser/error.hpp"
#include "kneser/verify.hpp"

namespace kneser {

// One-line notation, 1-based values: perm[k] is the image of position k+1.
using Perm = std::vector<int>;

bool is_permutation(const Perm& p);

// Kneser adjacency on the permutohedron: adjacent iff no k in [1, n-1] has
// equal preimages of {1..k}. Ground-truth facet definition.
bool kg_perm_adjacent(const Perm& a, const Perm& b);

// No proper prefix [1..p] maps onto itself.
bool is_indecomposable(const Perm& p);

// Shortcut adjacency: the quotient of the two permutations is
// indecomposable. Must agree with kg_perm_adjacent.
bool kg_perm_adjacent_via_quotient(const Perm& a, const Perm& b);

// I(n) = n! - sum I(k) (n-k)!; n <= 20 fits in 64 bits.
std::uint64_t count_indecomposable(int n);

std::uint64_t factorial(int n);

// n! - I(n) <= sum_{p=1}^{n-1} p! (n-p)!  (exact integer form)
bool indecomposable_lower_bound_holds(int n);

// All m! permutations, consecutive ones (including wraparound) differing
// by one adjacent transposition.
std::vector<Perm> sjt_cycle(int m);

// Streaming variant of the adjacent-transposition order.
class SjtGenerator {
 public:
  explicit SjtGenerator(int m);
  const Perm& current() const { return perm_; }
  bool advance();  // false once the listing is exhausted

 private:
  int m_;
  Perm perm_;
  std::vector<int> dir_;
  std::uint64_t remaining_;
};

// Hamiltonian cycle of the Kneser graph of the permutohedron: one clique
// path per marking permutation, cliques glued along the SJT order.
std::vector<Perm> perm_hamiltonian_cycle(int n);
void perm_hamiltonian_cycle(int n, const std::function<void(const Perm&)>& sink);

struct DensityReport {
  int n = 0;
  int k = 0;
  std::uint64_t indecomposable = 0;
  std::uint64_t total = 0;  // n!
  double ratio = 0.0;
  bool threshold_met = false;  // I(n) > k/(k+1) * n!
};

DensityReport density_report(int n, int k);

std::string encode(const Perm& p);
Perm decode_perm(const std::string& text, int n);

// Streaming check of a "perm-ham" certificate.
CertificateReport verify_perm_cycle(std::istream& in, int expected_n);

}  // namespace kneser
