#include "ramsum/ramanujan.hpp"

#include <numeric>

#include "ramsum/errors.hpp"
#include "ramsum/numtheory.hpp"

namespace ramsum {
namespace {

constexpr int kMaxSubsetFamily = 20;  // same cap as mu_G's subset enumeration

std::string pair_tag(int chi, int x) {
  return "(chi=" + std::to_string(chi) + ", x=" + std::to_string(x) + ")";
}

long long exact_quotient(long long num, long long den, const std::string& what) {
  if (den == 0 || num % den != 0)
    throw NonExactDivision(what + ": " + std::to_string(num) + " / " + std::to_string(den));
  return num / den;
}

}  // namespace

std::string to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::FullKernel: return "FullKernel";
    case TheoremCase::Expressible: return "Expressible";
    case TheoremCase::NotExpressible: return "NotExpressible";
  }
  return "?";
}

BigInt c_direct(const GroupTable& g, const CharacterTable& t, const Character& chi, int x) {
  const std::vector<int> xg = class_equivalence_set_by_closures(g, x);
  CycInt sum(t.exponent);
  for (int y : xg) sum += chi.values[t.class_of[y]];
  if (!sum.is_rational())
    throw NonIntegralValue("sum over [x^G] is not rational at x=" + std::to_string(x) + ": " +
                           sum.str());
  const BigInt s = sum.rational();
  if (chi.degree == 0 || s % chi.degree != 0)
    throw NonIntegralValue("chi-sum " + s.str() + " not divisible by degree " +
                           std::to_string(chi.degree) + " at x=" + std::to_string(x));
  return s / chi.degree;
}

std::pair<TheoremCase, BigInt> c_theorem(const GroupTable& g, const NormalLattice& l,
                                         const CharacterTable& t, const Character& chi, int x) {
  const int u = l.index_of(normal_closure(g, x));
  const int k = l.index_of(intersect(kernel_of(g, t, chi), l.subgroup(u)));
  const long long xg_size = static_cast<long long>(class_equivalence_set(g, l, x).size());
  if (k == u) return {TheoremCase::FullKernel, BigInt(xg_size)};
  if (!l.expressible(k, u)) return {TheoremCase::NotExpressible, BigInt(0)};
  const std::vector<int>& fam = l.maximal_under(u);
  const int r = static_cast<int>(fam.size());
  if (r > kMaxSubsetFamily)
    throw TooManyMaximals("subset sum over " + std::to_string(r) + " maximals exceeds cap " +
                          std::to_string(kMaxSubsetFamily));
  long long sum = 0;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    int inter = u;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) inter = l.intersection(inter, fam[i]);
    if (!l.contained_in(inter, k)) continue;
    const long long sign = __builtin_popcount(mask) % 2 == 0 ? 1 : -1;
    sum += sign * l.subgroup(inter).order();
  }
  return {TheoremCase::Expressible, BigInt(sum)};
}

std::optional<BigInt> c_minimal(const GroupTable& g, const NormalLattice& l,
                                const CharacterTable& t, const Character& chi, int x) {
  const int u = l.index_of(normal_closure(g, x));
  if (!l.minimal_in_itself(u)) return std::nullopt;
  const int k = l.index_of(intersect(kernel_of(g, t, chi), l.subgroup(u)));
  const long long xg_size = static_cast<long long>(class_equivalence_set(g, l, x).size());
  const long long mu = l.mu(k, u);
  const long long phi = l.phi(k, u);
  return BigInt(exact_quotient(mu * xg_size, phi,
                               "minimal formula at x=" + std::to_string(x)));
}

BigInt c_abelian(const GroupTable& g, const CharacterTable& t, const Character& chi, int x) {
  if (!g.abelian()) throw NotAbelian("c_abelian needs an abelian group");
  const Subgroup cyc = subgroup_generated_by(g, {x});
  const Subgroup k = intersect(kernel_of(g, t, chi), cyc);
  const long long ordx = g.element_order(x);
  const long long m = exact_quotient(ordx, k.order(), "ord(x) / |K|");
  return BigInt(exact_quotient(moebius(m) * totient(ordx), totient(m),
                               "abelian formula at x=" + std::to_string(x)));
}

CChiReport c_report(const GroupTable& g, const NormalLattice& l, const CharacterTable& t,
                    int chi_index, int x) {
  const Character& chi = t.characters.at(chi_index);
  CChiReport rep;
  rep.x = x;
  rep.chi = chi_index;
  rep.direct = c_direct(g, t, chi, x);
  auto [tc, tv] = c_theorem(g, l, t, chi, x);
  rep.theorem_case = tc;
  rep.theorem_value = tv;
  rep.minimal_value = c_minimal(g, l, t, chi, x);
  rep.k_order = intersect(kernel_of(g, t, chi), normal_closure(g, x)).order();
  if (rep.direct != rep.theorem_value)
    throw VerificationError("closed form disagrees with direct sum at " +
                            pair_tag(chi_index, x) + ": " + rep.theorem_value.str() + " vs " +
                            rep.direct.str());
  if (rep.minimal_value && *rep.minimal_value != rep.direct)
    throw VerificationError("minimal-family formula disagrees with direct sum at " +
                            pair_tag(chi_index, x) + ": " + rep.minimal_value->str() + " vs " +
                            rep.direct.str());
  if (g.abelian()) {
    const BigInt ab = c_abelian(g, t, chi, x);
    if (ab != rep.direct)
      throw VerificationError("abelian corollary disagrees with direct sum at " +
                              pair_tag(chi_index, x) + ": " + ab.str() + " vs " +
                              rep.direct.str());
  }
  return rep;
}

long long r_classical_formula(long long n, long long alpha) {
  if (n < 1) throw Error("R_n needs n >= 1");
  const long long a = ((alpha % n) + n) % n;
  const long long m = n / std::gcd(n, a);  // gcd(n, 0) = n
  return exact_quotient(moebius(m) * totient(n), totient(m), "R_" + std::to_string(n));
}

BigInt r_classical_direct(long long n, long long alpha) {
  if (n < 1) throw Error("R_n needs n >= 1");
  CycInt sum(static_cast<int>(n));
  for (long long s = 1; s <= n; ++s) {
    if (std::gcd(s, n) != 1) continue;
    sum += CycInt::zeta_power(static_cast<int>(n), s * (((alpha % n) + n) % n));
  }
  return sum.rational();
}

long long r_classical(long long n, long long alpha) {
  const long long f = r_classical_formula(n, alpha);
  const BigInt d = r_classical_direct(n, alpha);
  if (d != f)
    throw VerificationError("R_" + std::to_string(n) + "(" + std::to_string(alpha) +
                            "): formula " + std::to_string(f) + " != direct sum " + d.str());
  return f;
}

FAndG f_and_g(const GroupTable& g, const NormalLattice& l, const CharacterTable& t,
              const Character& chi) {
  FAndG out;
  out.f.resize(l.size());
  for (int i = 0; i < l.size(); ++i)
    out.f[i] = is_principal_on(g, t, chi, l.subgroup(i)) ? l.subgroup(i).order() : 0;
  out.g = l.mobius_invert(out.f);
  // f(U) = sum over V inside U of g(V): the inversion must round-trip.
  for (int u = 0; u < l.size(); ++u) {
    long long s = 0;
    for (int v = 0; v < l.size(); ++v)
      if (l.contained_in(v, u)) s += out.g[v];
    if (s != out.f[u])
      throw VerificationError("Moebius inversion fails to round-trip at lattice index " +
                              std::to_string(u));
  }
  // g(<x^G>) = C_chi(x), checked once per conjugacy class.
  for (const ConjClass& c : t.classes) {
    const int u = l.index_of(normal_closure(g, c.representative));
    const BigInt direct = c_direct(g, t, chi, c.representative);
    if (BigInt(out.g[u]) != direct)
      throw VerificationError("g_chi(<x^G>) = " + std::to_string(out.g[u]) +
                              " but C_chi(x) = " + direct.str() + " at x=" +
                              std::to_string(c.representative));
  }
  return out;
}

}  // namespace ramsum
