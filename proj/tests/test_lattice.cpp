#include <doctest.h>

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "ramsum/conjugacy.hpp"
#include "ramsum/errors.hpp"
#include "ramsum/lattice.hpp"
#include "ramsum/numtheory.hpp"

using namespace ramsum;

namespace {

// Independent oracle: all normal subgroups by brute force — closures of
// every generating set of size <= 3, kept when conjugation-closed. Rank-3
// generation covers every subgroup of the corpus groups (largest elementary
// abelian factor is Z2^3).
std::vector<std::vector<int>> normal_subgroups_bruteforce(const GroupTable& g) {
  const int n = g.order();
  std::set<std::vector<int>> all;
  all.insert({0});
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int c = b; c < n; ++c) all.insert(subgroup_generated_by(g, {a, b, c}).members);
  std::vector<std::vector<int>> normal;
  for (const std::vector<int>& members : all) {
    Subgroup s = Subgroup::from_members(members, n);
    bool ok = true;
    for (int x : members)
      for (int t = 0; t < n && ok; ++t)
        if (!s.contains(g.mul(g.mul(t, x), g.inv(t)))) ok = false;
    if (ok) normal.push_back(members);
  }
  std::sort(normal.begin(), normal.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return normal;
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("enumeration matches the brute-force oracle") {
  for (const corpus::Entry& e : corpus::all_groups()) {
    if (e.group.order() > 16) continue;  // keep the cubic oracle fast
    INFO(e.name);
    const NormalLattice lat = enumerate_normal_subgroups(e.group);
    const std::vector<std::vector<int>> oracle = normal_subgroups_bruteforce(e.group);
    REQUIRE(lat.size() == static_cast<int>(oracle.size()));
    for (int i = 0; i < lat.size(); ++i) CHECK(lat.subgroup(i).members == oracle[i]);
  }
}

TEST_CASE("S3 lattice") {
  const GroupTable g = corpus::s3();
  const NormalLattice lat = enumerate_normal_subgroups(g);
  REQUIRE(lat.size() == 3);
  CHECK(lat.subgroup(0).order() == 1);
  CHECK(lat.subgroup(1).members == std::vector<int>{0, 2, 5});
  CHECK(lat.subgroup(2).order() == 6);
  CHECK(lat.maximal_under(2) == std::vector<int>{1});
  CHECK(lat.maximal_under(1) == std::vector<int>{0});
  CHECK(lat.minimal_in_itself(2));
  CHECK(lat.mu(0, 1) == -1);
  CHECK(lat.mu(0, 2) == 0);   // {1} is not an intersection of maximals of S3
  CHECK(lat.phi(0, 1) == 2);
  CHECK(lat.expressible(0, 1));
  CHECK_FALSE(lat.expressible(0, 2));
}

TEST_CASE("Klein four-group counterexample") {
  // Three maximal normal subgroups intersect trivially but CRT fails:
  // |G|/|M1 n M2 n M3| = 4 while the index product is 8.
  const GroupTable g = corpus::klein_four();
  const NormalLattice lat = enumerate_normal_subgroups(g);
  REQUIRE(lat.size() == 5);
  const int full = lat.full_index();
  const std::vector<int>& maxs = lat.maximal_under(full);
  REQUIRE(maxs.size() == 3);
  for (int m : maxs) CHECK(lat.subgroup(m).order() == 2);
  CHECK_FALSE(lat.minimal_in_itself(full));
  // Any two of the three are already minimal and intersect trivially.
  CHECK(lat.minimal_in_itself(full, {maxs[0], maxs[1]}));
  CHECK(lat.intersection(maxs[0], maxs[1]) == lat.trivial_index());
  // mu counts even minus odd expressions: three pairs minus one triple.
  CHECK(lat.mu(lat.trivial_index(), full) == 2);
  // Lemma: sum of mu over the interval is zero off the diagonal: 1 - 3 + 2.
  long long sum = 0;
  for (int v = 0; v < lat.size(); ++v)
    if (lat.contained_in(v, full)) sum += lat.mu(v, full);
  CHECK(sum == 0);
}

TEST_CASE("Z6 generalized phi specializes to Euler phi") {
  const GroupTable g = corpus::cyclic(6);
  const NormalLattice lat = enumerate_normal_subgroups(g);
  REQUIRE(lat.size() == 4);
  const int full = lat.full_index();
  CHECK(lat.maximal_under(full).size() == 2);
  CHECK(lat.phi(lat.trivial_index(), full) == totient(6));
  CHECK(lat.mu(lat.trivial_index(), full) == moebius(6));
  CHECK(lat.minimal_in_itself(full));
}

TEST_CASE("mu sum identity on every corpus lattice") {
  for (const corpus::Entry& e : corpus::all_groups()) {
    INFO(e.name);
    const NormalLattice lat = enumerate_normal_subgroups(e.group);
    for (int u = 0; u < lat.size(); ++u)
      for (int w = 0; w < lat.size(); ++w) {
        if (!lat.contained_in(w, u)) continue;
        long long s = 0;
        for (int v = 0; v < lat.size(); ++v)
          if (lat.contained_in(w, v) && lat.contained_in(v, u)) s += lat.mu(v, u);
        CHECK(s == (w == u ? 1 : 0));
      }
  }
}

TEST_CASE("mu vanishes below non-expressible subgroups") {
  for (const corpus::Entry& e : corpus::all_groups()) {
    INFO(e.name);
    const NormalLattice lat = enumerate_normal_subgroups(e.group);
    for (int u = 0; u < lat.size(); ++u)
      for (int v = 0; v < lat.size(); ++v) {
        if (v == u || !lat.contained_in(v, u) || lat.expressible(v, u)) continue;
        for (int w = 0; w < lat.size(); ++w)
          if (lat.contained_in(w, v)) CHECK(lat.mu(w, u) == 0);
      }
  }
}

TEST_CASE("minimality is the CRT index product") {
  for (const corpus::Entry& e : corpus::all_groups()) {
    INFO(e.name);
    const NormalLattice lat = enumerate_normal_subgroups(e.group);
    for (int u = 0; u < lat.size(); ++u) {
      const std::vector<int>& fam = lat.maximal_under(u);
      const int r = static_cast<int>(fam.size());
      for (unsigned mask = 0; mask < (1u << r); ++mask) {
        if (__builtin_popcount(mask) > 4) continue;
        std::vector<int> sub;
        int inter = u;
        long long prod = 1;
        for (int i = 0; i < r; ++i)
          if (mask & (1u << i)) {
            sub.push_back(fam[i]);
            inter = lat.intersection(inter, fam[i]);
            prod *= lat.subgroup(u).order() / lat.subgroup(fam[i]).order();
          }
        const bool crt =
            lat.subgroup(u).order() / lat.subgroup(inter).order() == prod;
        CHECK(lat.minimal_in_itself(u, sub) == crt);
      }
    }
  }
}

TEST_CASE("expressibility decision") {
  for (const corpus::Entry& e : corpus::all_groups()) {
    INFO(e.name);
    const NormalLattice lat = enumerate_normal_subgroups(e.group);
    for (int u = 0; u < lat.size(); ++u)
      for (int v = 0; v < lat.size(); ++v) {
        if (!lat.contained_in(v, u)) continue;
        // Oracle: scan every subfamily of M_G(U) for one intersecting to V.
        const std::vector<int>& fam = lat.maximal_under(u);
        const int r = static_cast<int>(fam.size());
        bool found = false;
        for (unsigned mask = 1; mask < (1u << r) && !found; ++mask) {
          int inter = u;
          for (int i = 0; i < r; ++i)
            if (mask & (1u << i)) inter = lat.intersection(inter, fam[i]);
          found = inter == v;
        }
        if (v != u) CHECK(lat.expressible(v, u) == found);
      }
  }
}

TEST_CASE("moebius inversion round-trips") {
  const GroupTable g = corpus::d4();
  const NormalLattice lat = enumerate_normal_subgroups(g);
  std::vector<long long> f(lat.size());
  for (int i = 0; i < lat.size(); ++i) f[i] = 7 * i * i - 3 * i + 1;
  const std::vector<long long> gv = lat.mobius_invert(f);
  for (int u = 0; u < lat.size(); ++u) {
    long long s = 0;
    for (int v = 0; v < lat.size(); ++v)
      if (lat.contained_in(v, u)) s += gv[v];
    CHECK(s == f[u]);
  }
}

TEST_CASE("lattice errors") {
  const GroupTable g = corpus::s3();
  const NormalLattice lat = enumerate_normal_subgroups(g);
  const Subgroup z2 = subgroup_generated_by(g, {1});  // not normal in S3
  CHECK_THROWS_AS(lat.index_of(z2), SubgroupNotInLattice);
  CHECK_THROWS_AS(lat.maximal_containing(0, lat.full_index()), NotContained);
  CHECK_THROWS_AS(lat.minimal_in_itself(2, std::vector<int>{0}), NotMaximalFamily);
}

}  // TEST_SUITE
