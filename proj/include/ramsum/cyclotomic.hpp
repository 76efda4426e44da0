#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace ramsum {

using BigInt = boost::multiprecision::cpp_int;

/// Coefficients of the e-th cyclotomic polynomial, low degree first, monic,
/// degree phi(e). Computed exactly by iterated division of x^e - 1 by the
/// Phi_d of the proper divisors d of e. Memoized.
std::vector<BigInt> cyclotomic_polynomial(int e);

/// An exact cyclotomic integer in Z[zeta_e], stored as a length-e integer
/// coefficient vector: value = sum coeffs[j] * zeta_e^j. The stored vector is
/// not canonical; equality and rationality tests reduce modulo Phi_e first
/// (the power basis 1, zeta, ..., zeta^(phi(e)-1) is a Z-basis, so the
/// reduced zero test is exact).
class CycInt {
 public:
  CycInt() : e_(1), c_(1) {}
  explicit CycInt(int conductor);
  /// From an explicit length-e coefficient vector.
  CycInt(int conductor, std::vector<BigInt> coeffs);

  static CycInt integer(int conductor, BigInt v);
  /// zeta_e^k (k taken mod e).
  static CycInt zeta_power(int conductor, long long k);

  int conductor() const { return e_; }
  const std::vector<BigInt>& coeffs() const { return c_; }

  /// Coefficient of zeta^j in the stored (unreduced) vector.
  BigInt& operator[](int j) { return c_[j]; }
  const BigInt& operator[](int j) const { return c_[j]; }

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  CycInt operator*(const CycInt& o) const;  // cyclic convolution mod x^e - 1
  CycInt operator-() const;

  /// Complex conjugation: coeffs[j] -> coeffs[(e-j) mod e].
  CycInt conjugate() const;

  /// Canonical representative modulo Phi_e, padded with zeros to length e.
  std::vector<BigInt> reduced() const;

  bool is_zero() const;
  bool operator==(const CycInt& o) const;
  bool operator!=(const CycInt& o) const { return !(*this == o); }

  /// True iff the value lies in Z (reduced coefficients vanish above degree 0).
  bool is_rational() const;
  /// The rational value; throws NonIntegralValue if the value is not in Z.
  BigInt rational() const;

  /// Comma-separated reduced coefficient vector, the chartab value syntax.
  std::string str() const;

 private:
  int e_;
  std::vector<BigInt> c_;
};

}  // namespace ramsum
