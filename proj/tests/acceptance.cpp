// Acceptance gate: one observable check per criterion, one [PASS]/[FAIL]
// line each, nonzero exit if anything fails. Kept independent of the unit
// test framework so the verdict is a plain transcript.

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "ramsum/char_table.hpp"
#include "ramsum/conjugacy.hpp"
#include "ramsum/errors.hpp"
#include "ramsum/group.hpp"
#include "ramsum/lattice.hpp"
#include "ramsum/numtheory.hpp"
#include "ramsum/ramanujan.hpp"
#include "ramsum/spectrum.hpp"

using namespace ramsum;

namespace {

struct Prepared {
  std::string name;
  GroupTable g;
  NormalLattice l;
  CharacterTable t;
};

int failures = 0;
long long integrality_events = 0;  // NonIntegralValue / NonExactDivision count

void report(int number, const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << number << ". " << name << ": " << detail
            << "\n";
  if (!pass) ++failures;
}

template <typename Fn>
void criterion(int number, const std::string& name, Fn&& fn) {
  try {
    std::string detail = fn();
    report(number, name, true, detail);
  } catch (const std::exception& e) {
    report(number, name, false, e.what());
  }
}

std::string percent(long long part, long long whole) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", 100.0 * static_cast<double>(part) /
                                                static_cast<double>(whole));
  return buf;
}

}  // namespace

int main() {
  std::vector<Prepared> corpus;
  for (const corpus::Entry& e : corpus::all_groups()) {
    GroupTable g = e.group;
    NormalLattice l = enumerate_normal_subgroups(g);
    CharacterTable t = compute_character_table(g);
    corpus.push_back({e.name, std::move(g), std::move(l), std::move(t)});
  }

  criterion(1, "classical agreement n <= 100", [] {
    long long pairs = 0;
    for (long long n = 1; n <= 100; ++n) {
      for (long long alpha = 0; alpha < n; ++alpha) {
        r_classical(n, alpha);  // throws VerificationError on route mismatch
        ++pairs;
      }
      if (r_classical(n, 0) != totient(n)) throw VerificationError("R_n(0) != phi(n)");
    }
    const std::vector<long long> r6 = {2, 1, -1, -2, -1, 1};
    for (long long a = 0; a < 6; ++a)
      if (r_classical(6, a) != r6[a]) throw VerificationError("R_6 spot row mismatch");
    return std::to_string(pairs) + " (n,alpha) pairs, both routes equal";
  });

  // Criteria 2-4 share one sweep over the full (chi, class) grid.
  long long grid_pairs = 0, minimal_fired = 0, abelian_pairs = 0;
  std::string grid_fail, minimal_fail, abelian_fail;
  for (const Prepared& p : corpus) {
    for (int i = 0; i < p.t.class_count(); ++i) {
      for (const ConjClass& cls : p.t.classes) {
        const int x = cls.representative;
        const std::string tag = p.name + " chi=" + std::to_string(i) + " x=@" +
                                std::to_string(x);
        try {
          const BigInt direct = c_direct(p.g, p.t, p.t.characters[i], x);
          const auto [tcase, tval] = c_theorem(p.g, p.l, p.t, p.t.characters[i], x);
          (void)tcase;
          ++grid_pairs;
          if (tval != direct && grid_fail.empty())
            grid_fail = "closed form " + tval.str() + " != direct " + direct.str() + " at " +
                        tag;
          const std::optional<BigInt> mval = c_minimal(p.g, p.l, p.t, p.t.characters[i], x);
          if (mval) {
            ++minimal_fired;
            if (*mval != direct && minimal_fail.empty())
              minimal_fail = "minimal formula " + mval->str() + " != direct " + direct.str() +
                             " at " + tag;
          }
          if (p.g.abelian()) {
            ++abelian_pairs;
            const BigInt aval = c_abelian(p.g, p.t, p.t.characters[i], x);
            if (aval != direct && abelian_fail.empty())
              abelian_fail = "corollary " + aval.str() + " != direct " + direct.str() + " at " +
                             tag;
          }
        } catch (const NonIntegralValue& e) {
          ++integrality_events;
          if (grid_fail.empty()) grid_fail = std::string(e.what()) + " at " + tag;
        } catch (const NonExactDivision& e) {
          ++integrality_events;
          if (grid_fail.empty()) grid_fail = std::string(e.what()) + " at " + tag;
        }
      }
    }
  }

  criterion(2, "route agreement across the corpus", [&]() -> std::string {
    if (!grid_fail.empty()) throw VerificationError(grid_fail);
    return std::to_string(grid_pairs) + " (chi, x) pairs over " +
           std::to_string(corpus.size()) + " groups, exact";
  });

  criterion(3, "minimal-family formula", [&]() -> std::string {
    if (!minimal_fail.empty()) throw VerificationError(minimal_fail);
    if (minimal_fired * 100 <= grid_pairs * 95)
      throw VerificationError("gate fired for only " + std::to_string(minimal_fired) + "/" +
                              std::to_string(grid_pairs) + " pairs");
    return "gate fired " + std::to_string(minimal_fired) + "/" + std::to_string(grid_pairs) +
           " pairs (" + percent(minimal_fired, grid_pairs) + "), all equal to the direct sum";
  });

  criterion(4, "abelian corollary", [&]() -> std::string {
    if (!abelian_fail.empty()) throw VerificationError(abelian_fail);
    return std::to_string(abelian_pairs) + " abelian (chi, x) pairs, exact";
  });

  criterion(5, "classical embedding in Z_n", [&] {
    long long checked = 0;
    for (const Prepared& p : corpus) {
      if (p.name.size() < 2 || p.name[0] != 'Z' ||
          !std::isdigit(static_cast<unsigned char>(p.name[1])))
        continue;
      const long long n = std::stoll(p.name.substr(1));
      if (p.g.order() != n) continue;  // only the plain cyclic entries
      const int x = n == 1 ? 0 : 1;    // the generator
      const int jx = p.t.class_of[x];
      for (long long alpha = 0; alpha < n; ++alpha) {
        const CycInt want = CycInt::zeta_power(static_cast<int>(n), alpha);
        int hits = 0;
        for (const Character& chi : p.t.characters) {
          if (!(chi.values[jx] == want)) continue;
          ++hits;
          if (c_direct(p.g, p.t, chi, x) != r_classical_formula(n, alpha))
            throw VerificationError("C_chi_alpha(1) != R_n(alpha) at n=" + std::to_string(n) +
                                    ", alpha=" + std::to_string(alpha));
          ++checked;
        }
        if (hits != 1)
          throw VerificationError("chi_alpha not unique at n=" + std::to_string(n) +
                                  ", alpha=" + std::to_string(alpha));
      }
    }
    if (checked != 300)  // sum of n over n = 1..24
      throw VerificationError("embedding sweep covered " + std::to_string(checked) +
                              " pairs, want 300");
    return std::to_string(checked) + " (n, alpha) pairs for n <= 24, exact";
  });

  criterion(6, "spectrum against the dense oracle", [&] {
    long long sets = 0;
    double worst = 0.0;
    for (const Prepared& p : corpus) {
      if (p.g.order() > 64) continue;
      long long degsq = 0;
      for (const Character& chi : p.t.characters) degsq += chi.degree * chi.degree;
      if (degsq != p.g.order())
        throw VerificationError("sum of squared degrees != |G| for " + p.name);
      for (const ConjClass& cls : p.t.classes) {
        const SpectrumVerdict v = verify_spectrum(p.g, p.l, p.t, cls.representative);
        worst = std::max(worst, v.max_deviation);
        ++sets;
      }
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", worst);
    return std::to_string(sets) + " connection sets, max |lambda - oracle| = " + buf;
  });

  criterion(7, "lattice laws", [&] {
    long long checks = 0;
    for (const Prepared& p : corpus) {
      const NormalLattice& l = p.l;
      // Sum identity: sum of mu_G(V,U) over W <= V <= U is [W = U].
      for (int u = 0; u < l.size(); ++u)
        for (int w = 0; w < l.size(); ++w) {
          if (!l.contained_in(w, u)) continue;
          long long s = 0;
          for (int v = 0; v < l.size(); ++v)
            if (l.contained_in(w, v) && l.contained_in(v, u)) s += l.mu(v, u);
          if (s != (w == u ? 1 : 0))
            throw VerificationError("mu sum identity fails in " + p.name);
          ++checks;
        }
      // Vanishing below non-expressible subgroups.
      for (int u = 0; u < l.size(); ++u)
        for (int v = 0; v < l.size(); ++v) {
          if (!l.contained_in(v, u) || v == u || l.expressible(v, u)) continue;
          if (l.mu(v, u) != 0) throw VerificationError("mu fails to vanish in " + p.name);
          ++checks;
        }
      // Minimality <=> index-product identity, families of size <= 4.
      for (int u = 0; u < l.size(); ++u) {
        const std::vector<int>& fam = l.maximal_under(u);
        const int r = static_cast<int>(fam.size());
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
          if (__builtin_popcount(mask) > 4) continue;
          std::vector<int> family;
          long long prod = 1;
          int inter = u;
          for (int i = 0; i < r; ++i)
            if (mask & (1u << i)) {
              family.push_back(fam[i]);
              prod *= l.subgroup(u).order() / l.subgroup(fam[i]).order();
              inter = l.intersection(inter, fam[i]);
            }
          const bool crt = prod == l.subgroup(u).order() / l.subgroup(inter).order();
          if (l.minimal_in_itself(u, family) != crt)
            throw VerificationError("minimality/CRT equivalence fails in " + p.name);
          ++checks;
        }
      }
      // phi: product form equals alternating expansion when M_G(U) is minimal.
      for (int u = 0; u < l.size(); ++u) {
        if (!l.minimal_in_itself(u)) continue;
        for (int k = 0; k < l.size(); ++k) {
          if (!l.contained_in(k, u) || (k != u && !l.expressible(k, u))) continue;
          const std::vector<int> fam = l.maximal_containing(u, k);
          const int r = static_cast<int>(fam.size());
          long long expansion = 0;
          for (unsigned mask = 0; mask < (1u << r); ++mask) {
            long long term = (r - __builtin_popcount(mask)) % 2 == 0 ? 1 : -1;
            for (int i = 0; i < r; ++i)
              if (mask & (1u << i))
                term *= l.subgroup(u).order() / l.subgroup(fam[i]).order();
            expansion += term;
          }
          if (expansion != l.phi(k, u))
            throw VerificationError("phi expansion fails in " + p.name);
          ++checks;
        }
      }
      // |[x^G]| identity for every element.
      for (int x = 0; x < p.g.order(); ++x) {
        const int u = l.index_of(normal_closure(p.g, x));
        long long s = 0;
        for (int v = 0; v < l.size(); ++v)
          if (l.contained_in(v, u)) s += l.subgroup(v).order() * l.mu(v, u);
        if (s != static_cast<long long>(class_equivalence_set(p.g, l, x).size()))
          throw VerificationError("|[x^G]| identity fails in " + p.name);
        ++checks;
      }
      // Abelian mu comparison on cyclic subgroup pairs.
      if (p.g.abelian()) {
        for (int y = 0; y < p.g.order(); ++y) {
          const Subgroup cy = subgroup_generated_by(p.g, {y});
          for (int x : cy.members) {
            const Subgroup cx = subgroup_generated_by(p.g, {x});
            const long long ratio = p.g.element_order(y) / p.g.element_order(x);
            if (mu_g(l, cx, cy) != moebius(ratio))
              throw VerificationError("abelian mu identity fails in " + p.name);
            ++checks;
          }
        }
      }
    }
    return std::to_string(checks) + " identities across " + std::to_string(corpus.size()) +
           " groups, exact";
  });

  criterion(8, "Klein four-group counterexample", [] {
    const GroupTable g = corpus::klein_four();
    const NormalLattice l = enumerate_normal_subgroups(g);
    const int top = l.full_index();
    if (l.mu(l.trivial_index(), top) != 2)
      throw VerificationError("mu_G(1, G) = " + std::to_string(l.mu(0, top)) + ", want 2");
    if (l.maximal_under(top).size() != 3)
      throw VerificationError("expected three maximal subgroups");
    if (l.minimal_in_itself(top))
      throw VerificationError("the three maximals must not be minimal in itself");
    long long s = 0;
    for (int v = 0; v < l.size(); ++v)
      if (l.contained_in(l.trivial_index(), v) && l.contained_in(v, top)) s += l.mu(v, top);
    if (s != 0) throw VerificationError("1 - 3 + 2 does not telescope to zero");
    return "mu_G(1,G) = 2, family not minimal, sum 1 - 3 + 2 = 0";
  });

  criterion(9, "integrality", [&]() -> std::string {
    if (integrality_events != 0)
      throw VerificationError(std::to_string(integrality_events) +
                              " NonIntegralValue/NonExactDivision events");
    return "zero NonIntegralValue / NonExactDivision events over the corpus run";
  });

  criterion(10, "negative controls", [] {
    const GroupTable g = corpus::s3();
    const CharacterTable t = compute_character_table(g);
    std::string bad = format_character_table(t);
    bad.replace(bad.find("-1"), 2, "1");  // break row orthogonality
    bool orth = false;
    try {
      std::istringstream in(bad);
      parse_character_table(g, in);
    } catch (const OrthogonalityFailure&) {
      orth = true;
    }
    if (!orth) throw VerificationError("perturbed table was accepted");

    CharacterTable dup = t;
    dup.characters[0].values = dup.characters[1].values;
    bool mism = false;
    try {
      verify_spectrum(g, enumerate_normal_subgroups(g), dup, 1);
    } catch (const SpectrumMismatch&) {
      mism = true;
    }
    if (!mism) throw VerificationError("corrupted spectrum fixture was accepted");

    bool notgroup = false;
    try {
      build_from_table(5, {{1, 2, 3, 4, 5},
                           {2, 1, 4, 5, 3},
                           {3, 4, 5, 1, 2},
                           {4, 5, 2, 3, 1},
                           {5, 3, 1, 2, 4}});
    } catch (const NotAGroup&) {
      notgroup = true;
    }
    if (!notgroup) throw VerificationError("non-associative Latin square was accepted");
    return "OrthogonalityFailure, SpectrumMismatch, NotAGroup all raised";
  });

  std::cout << (10 - failures) << "/10 criteria passed\n";
  return failures == 0 ? 0 : 1;
}
