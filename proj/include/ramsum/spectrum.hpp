#pragma once

#include <vector>

#include "ramsum/char_table.hpp"
#include "ramsum/cyclotomic.hpp"
#include "ramsum/group.hpp"
#include "ramsum/lattice.hpp"

namespace ramsum {

/// Eigenvalues of Cay(G, [x^G]) with multiplicities: distinct integer values
/// in descending order, multiplicities summing to |G|.
struct SpectrumEntry {
  BigInt eigenvalue;
  long long multiplicity = 0;
};

struct SpectrumMultiset {
  std::vector<SpectrumEntry> entries;
  long long total_multiplicity() const;
  /// All |G| eigenvalues, repeated per multiplicity, descending.
  std::vector<BigInt> expanded() const;
};

/// Eigenvalues from the character table: C_chi(x) with multiplicity
/// chi(1)^2, merged over equal values. Also re-checks the connection-set
/// preconditions (union of classes, inverse-closed) before use.
SpectrumMultiset spectrum_by_characters(const GroupTable& g, const NormalLattice& l,
                                        const CharacterTable& t, int x);

/// Dense oracle: adjacency matrix of Cay(G, [x^G]) (entry a,b set iff
/// b a^-1 lies in [x^G], diagonal included when x is the identity) fed to a
/// cyclic Jacobi eigensolver. Descending. Throws GroupTooLargeForOracle for
/// |G| > 512 and ConvergenceFailure if Jacobi stalls.
std::vector<double> spectrum_bruteforce(const GroupTable& g, int x);

/// Cyclic Jacobi on a symmetric matrix; converged when the off-diagonal
/// Frobenius norm drops below 1e-12 * n, hard cap 100 sweeps. Descending.
std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a);

struct SpectrumVerdict {
  double max_deviation = 0.0;
};

/// Entrywise comparison of the expanded character spectrum against the
/// brute-force list, tolerance 1e-6. Throws SpectrumMismatch with the first
/// differing position.
SpectrumVerdict verify_spectrum(const GroupTable& g, const NormalLattice& l,
                                const CharacterTable& t, int x);

}  // namespace ramsum
