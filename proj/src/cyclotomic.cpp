#include "ramsum/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "ramsum/errors.hpp"
#include "ramsum/numtheory.hpp"

namespace ramsum {

namespace {

// Exact division of integer polynomials, divisor monic. Coefficients low
// degree first. Throws on a nonzero remainder.
std::vector<BigInt> exact_monic_div(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  int dn = static_cast<int>(num.size()) - 1;
  int dd = static_cast<int>(den.size()) - 1;
  std::vector<BigInt> q(dn - dd + 1);
  for (int i = dn; i >= dd; --i) {
    BigInt t = num[i];
    if (t == 0) continue;
    q[i - dd] = t;
    for (int j = 0; j <= dd; ++j) num[i - dd + j] -= t * den[j];
  }
  for (const BigInt& r : num)
    if (r != 0) throw Error("cyclotomic polynomial division left a remainder");
  return q;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(int e) {
  static std::map<int, std::vector<BigInt>> cache;
  static std::mutex mtx;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
  }
  std::vector<BigInt> num(e + 1);
  num[0] = -1;
  num[e] = 1;
  for (int d = 1; d < e; ++d)
    if (e % d == 0) num = exact_monic_div(std::move(num), cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> lock(mtx);
  cache.emplace(e, num);
  return num;
}

CycInt::CycInt(int conductor) : e_(conductor), c_(conductor) {
  if (conductor < 1) throw Error("conductor must be positive");
}

CycInt::CycInt(int conductor, std::vector<BigInt> coeffs) : e_(conductor), c_(std::move(coeffs)) {
  if (conductor < 1) throw Error("conductor must be positive");
  if (static_cast<int>(c_.size()) != e_)
    throw Error("coefficient vector length " + std::to_string(c_.size()) +
                " does not match conductor " + std::to_string(e_));
}

CycInt CycInt::integer(int conductor, BigInt v) {
  CycInt r(conductor);
  r.c_[0] = std::move(v);
  return r;
}

CycInt CycInt::zeta_power(int conductor, long long k) {
  CycInt r(conductor);
  long long j = k % conductor;
  if (j < 0) j += conductor;
  r.c_[static_cast<size_t>(j)] = 1;
  return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  if (e_ != o.e_) throw ConductorMismatch("adding conductors " + std::to_string(e_) + " and " +
                                          std::to_string(o.e_));
  for (int j = 0; j < e_; ++j) c_[j] += o.c_[j];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  if (e_ != o.e_) throw ConductorMismatch("subtracting conductors " + std::to_string(e_) +
                                          " and " + std::to_string(o.e_));
  for (int j = 0; j < e_; ++j) c_[j] -= o.c_[j];
  return *this;
}

CycInt CycInt::operator*(const CycInt& o) const {
  if (e_ != o.e_) throw ConductorMismatch("multiplying conductors " + std::to_string(e_) +
                                          " and " + std::to_string(o.e_));
  CycInt r(e_);
  for (int i = 0; i < e_; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < e_; ++j) {
      if (o.c_[j] == 0) continue;
      int k = i + j;
      if (k >= e_) k -= e_;
      r.c_[k] += c_[i] * o.c_[j];
    }
  }
  return r;
}

CycInt CycInt::operator-() const {
  CycInt r(e_);
  for (int j = 0; j < e_; ++j) r.c_[j] = -c_[j];
  return r;
}

CycInt CycInt::conjugate() const {
  CycInt r(e_);
  for (int j = 0; j < e_; ++j) r.c_[(e_ - j) % e_] = c_[j];
  return r;
}

std::vector<BigInt> CycInt::reduced() const {
  std::vector<BigInt> rem = c_;
  const std::vector<BigInt> phi = cyclotomic_polynomial(e_);
  const int m = static_cast<int>(phi.size()) - 1;  // phi(e)
  for (int i = e_ - 1; i >= m; --i) {
    BigInt t = rem[i];
    if (t == 0) continue;
    for (int j = 0; j <= m; ++j) rem[i - m + j] -= t * phi[j];
  }
  return rem;
}

bool CycInt::is_zero() const {
  for (const BigInt& v : reduced())
    if (v != 0) return false;
  return true;
}

bool CycInt::operator==(const CycInt& o) const {
  if (e_ != o.e_) return false;
  return (*this - o).is_zero();
}

bool CycInt::is_rational() const {
  std::vector<BigInt> r = reduced();
  for (size_t j = 1; j < r.size(); ++j)
    if (r[j] != 0) return false;
  return true;
}

BigInt CycInt::rational() const {
  std::vector<BigInt> r = reduced();
  for (size_t j = 1; j < r.size(); ++j)
    if (r[j] != 0)
      throw NonIntegralValue("cyclotomic value is not a rational integer: " + str());
  return r[0];
}

std::string CycInt::str() const {
  std::vector<BigInt> r = reduced();
  std::ostringstream os;
  for (size_t j = 0; j < r.size(); ++j) {
    if (j) os << ",";
    os << r[j];
  }
  return os.str();
}

}  // namespace ramsum
