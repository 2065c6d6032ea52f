// Command-line front end: constructs and certifies Hamiltonian cycles in
// the Kneser graphs of polygon triangulations and of permutations.
#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "kneser/bridges.hpp"
#include "kneser/flip_cycle.hpp"
#include "kneser/guide.hpp"
#include "kneser/orbits.hpp"
#include "kneser/perm.hpp"
#include "kneser/splice.hpp"
#include "kneser/verify.hpp"

namespace {

using namespace kneser;

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw Error(Error::Kind::parse, "cannot open output file " + path);
  return file;
}

std::istream& open_source(const std::string& path, std::ifstream& file) {
  if (path.empty() || path == "-") return std::cin;
  file.open(path);
  if (!file) throw Error(Error::Kind::parse, "cannot open input file " + path);
  return file;
}

int run_hamcycle(int n, const std::string& out_path, const std::string& format) {
  HamiltonianCycle cycle = build_hamiltonian(n);
  std::ofstream file;
  std::ostream& out = open_sink(out_path, file);
  if (format == "compact") {
    out << "kneser-ham n=" << cycle.n << " len=" << cycle.seq.size() << "\n";
    for (const Triangulation& t : cycle.seq) out << encode(t) << "\n";
  } else {
    for (const Triangulation& t : cycle.seq) {
      out << "{\"diagonals\": [";
      for (std::size_t k = 0; k < t.diagonals.size(); ++k) {
        if (k > 0) out << ",";
        out << "[" << t.diagonals[k].i << "," << t.diagonals[k].j << "]";
      }
      out << "]}\n";
    }
  }
  out.flush();
  return 0;
}

int run_verify(int n, const std::string& in_path, int threads) {
  std::ifstream file;
  std::istream& in = open_source(in_path, file);
  CertificateReport report = verify_kneser_cycle(in, n, threads);
  std::cout << report.to_text();
  return report.pass() ? 0 : 1;
}

int run_orbits(int n) {
  OrbitPartition part = orbit_partition(n);
  for (std::size_t id = 0; id < part.orbits.size(); ++id) {
    std::cout << "orbit " << (id + 1) << " size=" << part.orbits[id].size()
              << " rep=" << encode(part.orbits[id].rep) << "\n";
  }
  return 0;
}

int run_guide(int n) {
  GuideCycle guide = build_guide_cycle(n);
  std::cout << "guide n=" << n << " len=" << guide.seq.size() << "\n";
  for (const Triangulation& t : guide.seq) std::cout << encode(t) << "\n";
  return 0;
}

int run_bridges(int n) {
  OrbitPartition part = orbit_partition(n);
  GuideCycle guide = build_guide_cycle(n);
  OrbitTree tree = build_orbit_tree(guide, part);
  AugmentedFactor factor = select_bridges(tree, part);
  std::cout << "tree n=" << n << " orbits=" << tree.orbit_count() << "\n";
  for (std::size_t rank = 1; rank < tree.order.size(); ++rank) {
    int child = tree.order[rank];
    std::cout << "edge child=" << (child + 1) << " parent=" << (tree.parent[child] + 1)
              << " witness=" << encode(tree.witness[child].first) << "|"
              << encode(tree.witness[child].second) << "\n";
  }
  for (const BridgeEdge& bridge : factor.bridges) {
    std::cout << "bridge child=" << (bridge.child + 1) << " a=" << encode(bridge.a)
              << " b=" << encode(bridge.b) << "\n";
  }
  return 0;
}

int run_lemmas(int n) {
  CertificateReport report = verify_lemmas(n);
  std::cout << report.to_text();
  return report.pass() ? 0 : 1;
}

int run_stats(int n) {
  std::cout << "triangulations n=" << n << " count=" << catalan(n - 2) << "\n";
  if (n >= 4 && n <= 14) {
    OrbitPartition part = orbit_partition(n);
    std::cout << "orbits " << part.orbits.size() << "\n";
    if (n >= 6) {
      std::cout << "guide-length " << catalan(n - 3) << "\n";
      std::cout << "bridges " << (part.orbits.size() - 1) << "\n";
    }
    std::cout << "checksum " << cycle_checksum(n) << "\n";
  }
  return 0;
}

int run_perm_hamcycle(int n, const std::string& out_path) {
  std::ofstream file;
  std::ostream& out = open_sink(out_path, file);
  out << "perm-ham n=" << n << " len=" << factorial(n) << "\n";
  perm_hamiltonian_cycle(n, [&](const Perm& p) { out << encode(p) << "\n"; });
  out.flush();
  return 0;
}

int run_perm_verify(int n, const std::string& in_path) {
  std::ifstream file;
  std::istream& in = open_source(in_path, file);
  CertificateReport report = verify_perm_cycle(in, n);
  std::cout << report.to_text();
  return report.pass() ? 0 : 1;
}

int run_perm_density(int n, int k) {
  DensityReport report = density_report(n, k);
  std::cout << "density n=" << report.n << " k=" << report.k << "\n";
  std::cout << "indecomposable " << report.indecomposable << "\n";
  std::cout << "total " << report.total << "\n";
  std::cout << "ratio " << report.ratio << "\n";
  std::cout << "threshold I(n) > " << report.k << "/" << (report.k + 1) << " * n!: "
            << (report.threshold_met ? "met" : "not met") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian cycles in Kneser graphs of triangulations and permutations"};
  app.require_subcommand(1);

  int n = 0, k = 1, threads = 1;
  std::string out_path, in_path, format = "compact";

  auto* hamcycle = app.add_subcommand("hamcycle", "emit a Hamiltonian Kneser cycle");
  hamcycle->add_option("--n", n, "polygon size")->required();
  hamcycle->add_option("--out", out_path, "output file (default stdout)");
  hamcycle->add_option("--format", format, "compact or jsonl")
      ->check(CLI::IsMember({"compact", "jsonl"}));

  auto* verify = app.add_subcommand("verify", "check a cycle certificate");
  verify->add_option("--n", n, "polygon size")->required();
  verify->add_option("--in", in_path, "certificate file (default stdin)");
  verify->add_option("--threads", threads, "parallel slices for the disjointness scan")
      ->check(CLI::Range(1, 64));

  auto* orbits = app.add_subcommand("orbits", "list rotation orbits");
  orbits->add_option("--n", n, "polygon size")->required();

  auto* guide = app.add_subcommand("guide", "emit the guide cycle");
  guide->add_option("--n", n, "polygon size")->required();

  auto* bridges = app.add_subcommand("bridges", "print the orbit tree and selected bridges");
  bridges->add_option("--n", n, "polygon size")->required();

  auto* lemmas = app.add_subcommand("lemmas", "run the structural certification suites");
  lemmas->add_option("--n", n, "polygon size")->required();

  auto* stats = app.add_subcommand("stats", "summary counts for one polygon size");
  stats->add_option("--n", n, "polygon size")->required();

  auto* perm = app.add_subcommand("perm", "permutohedron pipeline");
  perm->require_subcommand(1);
  auto* perm_ham = perm->add_subcommand("hamcycle", "emit a Hamiltonian Kneser cycle on S_n");
  perm_ham->add_option("--n", n, "number of symbols")->required();
  perm_ham->add_option("--out", out_path, "output file (default stdout)");
  auto* perm_verify = perm->add_subcommand("verify", "check a permutation cycle certificate");
  perm_verify->add_option("--n", n, "number of symbols")->required();
  perm_verify->add_option("--in", in_path, "certificate file (default stdin)");
  auto* perm_density = perm->add_subcommand("density", "report the indecomposable density");
  perm_density->add_option("--n", n, "number of symbols")->required();
  perm_density->add_option("--k", k, "power of the Hamiltonian cycle")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*hamcycle) return run_hamcycle(n, out_path, format);
    if (*verify) return run_verify(n, in_path, threads);
    if (*orbits) return run_orbits(n);
    if (*guide) return run_guide(n);
    if (*bridges) return run_bridges(n);
    if (*lemmas) return run_lemmas(n);
    if (*stats) return run_stats(n);
    if (*perm_ham) return run_perm_hamcycle(n, out_path);
    if (*perm_verify) return run_perm_verify(n, in_path);
    if (*perm_density) return run_perm_density(n, k);
  } catch (const kneser::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == kneser::Error::Kind::internal ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
