#pragma once

#include <stdexcept>
#include <string>

namespace ramsum {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// group construction
struct NotAPermutation : Error { using Error::Error; };
struct GroupTooLarge : Error { using Error::Error; };
struct NotAGroup : Error { using Error::Error; };

// lattice queries
struct SubgroupNotInLattice : Error { using Error::Error; };
struct NotContained : Error { using Error::Error; };
struct NotMaximalFamily : Error { using Error::Error; };
struct LatticeTooLarge : Error { using Error::Error; };
struct TooManyMaximals : Error { using Error::Error; };

// character tables
struct PrimeSearchFailed : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };
struct OrthogonalityFailure : Error { using Error::Error; };

// exactness violations; each of these is a falsification event, never a
// recoverable condition
struct NonIntegralValue : Error { using Error::Error; };
struct NonExactDivision : Error { using Error::Error; };
struct NotAbelian : Error { using Error::Error; };
struct ConductorMismatch : Error { using Error::Error; };
struct VerificationError : Error { using Error::Error; };

// spectrum oracle
struct GroupTooLargeForOracle : Error { using Error::Error; };
struct ConvergenceFailure : Error { using Error::Error; };
struct SpectrumMismatch : Error { using Error::Error; };

}  // namespace ramsum
