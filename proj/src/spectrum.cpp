#include "ramsum/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ramsum/conjugacy.hpp"
#include "ramsum/errors.hpp"
#include "ramsum/ramanujan.hpp"

namespace ramsum {
namespace {

constexpr int kOracleCap = 512;
constexpr int kMaxSweeps = 100;
constexpr double kCompareTolerance = 1e-6;

double offdiag_norm(const std::vector<std::vector<double>>& a) {
  const int n = static_cast<int>(a.size());
  double s = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (p != q) s += a[p][q] * a[p][q];
  return std::sqrt(s);
}

}  // namespace

long long SpectrumMultiset::total_multiplicity() const {
  long long s = 0;
  for (const SpectrumEntry& e : entries) s += e.multiplicity;
  return s;
}

std::vector<BigInt> SpectrumMultiset::expanded() const {
  std::vector<BigInt> out;
  for (const SpectrumEntry& e : entries)
    for (long long i = 0; i < e.multiplicity; ++i) out.push_back(e.eigenvalue);
  return out;
}

SpectrumMultiset spectrum_by_characters(const GroupTable& g, const NormalLattice& l,
                                        const CharacterTable& t, int x) {
  // Thm 1.1 preconditions on the connection set, rechecked instead of trusted.
  const std::vector<int> xg = class_equivalence_set(g, l, x);
  std::vector<char> in_set(g.order(), 0);
  for (int y : xg) in_set[y] = 1;
  for (int y : xg) {
    if (!in_set[g.inv(y)])
      throw VerificationError("[x^G] is not inverse-closed at y=" + std::to_string(y));
    for (int z : t.classes[t.class_of[y]].members)
      if (!in_set[z])
        throw VerificationError("[x^G] is not a union of conjugacy classes at y=" +
                                std::to_string(y));
  }

  std::map<BigInt, long long, std::greater<BigInt>> merged;
  for (const Character& chi : t.characters)
    merged[c_direct(g, t, chi, x)] += chi.degree * chi.degree;
  SpectrumMultiset out;
  for (const auto& [val, mult] : merged) out.entries.push_back(SpectrumEntry{val, mult});
  if (out.total_multiplicity() != g.order())
    throw VerificationError("spectrum multiplicities sum to " +
                            std::to_string(out.total_multiplicity()) + ", want " +
                            std::to_string(g.order()));
  return out;
}

std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const int n = static_cast<int>(a.size());
  const double tol = 1e-12 * std::max(n, 1);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (offdiag_norm(a) < tol) break;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p][q];
        if (apq == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double app = a[p][p];
        const double aqq = a[q][q];
        a[p][p] = app - t * apq;
        a[q][q] = aqq + t * apq;
        a[p][q] = a[q][p] = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const double aip = a[i][p];
          const double aiq = a[i][q];
          a[i][p] = a[p][i] = aip - s * (aiq + tau * aip);
          a[i][q] = a[q][i] = aiq + s * (aip - tau * aiq);
        }
      }
  }
  if (offdiag_norm(a) >= tol)
    throw ConvergenceFailure("Jacobi did not converge in " + std::to_string(kMaxSweeps) +
                             " sweeps (off-diagonal norm " + std::to_string(offdiag_norm(a)) +
                             ")");
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a[i][i];
  std::sort(eig.rbegin(), eig.rend());
  return eig;
}

std::vector<double> spectrum_bruteforce(const GroupTable& g, int x) {
  const int n = g.order();
  if (n > kOracleCap)
    throw GroupTooLargeForOracle("|G| = " + std::to_string(n) + " exceeds the dense cap " +
                                 std::to_string(kOracleCap));
  const std::vector<int> xg = class_equivalence_set_by_closures(g, x);
  std::vector<char> in_set(n, 0);
  for (int y : xg) in_set[y] = 1;
  std::vector<std::vector<double>> adj(n, std::vector<double>(n, 0.0));
  for (int a = 0; a < n; ++a) {
    const int ai = g.inv(a);
    for (int b = 0; b < n; ++b)
      if (in_set[g.mul(b, ai)]) adj[a][b] = 1.0;
  }
  return jacobi_eigenvalues(std::move(adj));
}

SpectrumVerdict verify_spectrum(const GroupTable& g, const NormalLattice& l,
                                const CharacterTable& t, int x) {
  const std::vector<BigInt> expect = spectrum_by_characters(g, l, t, x).expanded();
  const std::vector<double> got = spectrum_bruteforce(g, x);
  if (expect.size() != got.size())
    throw SpectrumMismatch("spectrum sizes differ: " + std::to_string(expect.size()) + " vs " +
                           std::to_string(got.size()));
  SpectrumVerdict verdict;
  for (size_t i = 0; i < got.size(); ++i) {
    const double want = expect[i].convert_to<double>();
    const double dev = std::abs(want - got[i]);
    if (dev > kCompareTolerance)
      throw SpectrumMismatch("position " + std::to_string(i) + ": character value " +
                             expect[i].str() + " vs oracle " + std::to_string(got[i]));
    verdict.max_deviation = std::max(verdict.max_deviation, dev);
  }
  return verdict;
}

}  // namespace ramsum
