#pragma once

#include <cstdint>
#include <numeric>

namespace ramsum {

/// Classical Moebius function. mu(1) = 1, mu(n) = 0 if n has a squared
/// prime factor, otherwise (-1)^(number of prime factors).
inline long long moebius(long long n) {
  long long r = 1;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      r = -r;
    }
  }
  if (n > 1) r = -r;
  return r;
}

/// Euler totient by trial division.
inline long long totient(long long n) {
  long long r = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      r -= r / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

}  // namespace ramsum
