#include "ramsum/lattice.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "ramsum/errors.hpp"

namespace ramsum {

namespace {

constexpr int kMaxLatticeSize = 100'000;
// Subset enumeration over M_G(U,V) is exponential; desk-scale groups stay in
// single digits.
constexpr int kMaxMaximals = 20;
constexpr long long kMuOverCap = std::numeric_limits<long long>::min();

bool is_conjugation_closed(const GroupTable& g, const Subgroup& s) {
  for (int x : s.members)
    for (int a = 0; a < g.order(); ++a)
      if (!s.contains(g.mul(g.mul(a, x), g.inv(a)))) return false;
  return true;
}

}  // namespace

NormalLattice enumerate_normal_subgroups(const GroupTable& g) {
  const int n = g.order();

  // Seed with the trivial subgroup and the normal closure of every
  // conjugacy class; every normal subgroup is a join of class closures, so
  // closing under pairwise join and intersection reaches all of them.
  std::map<std::vector<int>, int> seen;
  std::vector<Subgroup> subs;
  auto add = [&](Subgroup s) -> int {
    auto it = seen.find(s.members);
    if (it != seen.end()) return it->second;
    if (static_cast<int>(subs.size()) >= kMaxLatticeSize)
      throw LatticeTooLarge("more than " + std::to_string(kMaxLatticeSize) +
                            " normal subgroups");
    int idx = static_cast<int>(subs.size());
    seen.emplace(s.members, idx);
    subs.push_back(std::move(s));
    return idx;
  };

  add(Subgroup::from_members({0}, n));
  for (const ConjClass& c : conjugacy_classes(g)) add(subgroup_generated_by(g, c.members));

  for (size_t i = 0; i < subs.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      add(intersect(subs[i], subs[j]));
      std::vector<int> both = subs[i].members;
      both.insert(both.end(), subs[j].members.begin(), subs[j].members.end());
      add(subgroup_generated_by(g, both));
    }
  }

  NormalLattice l;
  l.subgroups_ = std::move(subs);
  std::sort(l.subgroups_.begin(), l.subgroups_.end());

  const int m = l.size();
  for (const Subgroup& s : l.subgroups_) {
    if (!is_conjugation_closed(g, s))
      throw VerificationError("lattice member of order " + std::to_string(s.order()) +
                              " is not conjugation-closed");
  }

  l.contained_.assign(m, std::vector<char>(m, 0));
  for (int v = 0; v < m; ++v)
    for (int u = 0; u < m; ++u)
      l.contained_[v][u] = l.subgroups_[u].contains(l.subgroups_[v]) ? 1 : 0;

  // maximal_[u]: proper G-normal subgroups of U with nothing strictly between
  l.maximal_.assign(m, {});
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) {
      if (v == u || !l.contained_[v][u]) continue;
      bool maximal = true;
      for (int w = 0; w < m && maximal; ++w) {
        if (w == v || w == u) continue;
        if (l.contained_[v][w] && l.contained_[w][u]) maximal = false;
      }
      if (maximal) l.maximal_[u].push_back(v);
    }
  }

  l.inter_.assign(m, std::vector<int>(m, -1));
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index[l.subgroups_[i].members] = i;
  for (int a = 0; a < m; ++a) {
    l.inter_[a][a] = a;
    for (int b = 0; b < a; ++b) {
      Subgroup s = intersect(l.subgroups_[a], l.subgroups_[b]);
      auto it = index.find(s.members);
      if (it == index.end())
        throw VerificationError("lattice not closed under intersection");
      l.inter_[a][b] = l.inter_[b][a] = it->second;
    }
  }

  // Full mu table: for each pair V <= U enumerate nonempty subsets E of
  // M_G(U,V) with intersection exactly V and tally (-1)^|E|. Pairs whose
  // family exceeds the cap get a sentinel and fail only when queried.
  l.mu_.assign(m, std::vector<long long>(m, 0));
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) {
      if (!l.contained_[v][u]) continue;
      if (v == u) {
        l.mu_[u][v] = 1;
        continue;
      }
      std::vector<int> fam;
      for (int mi : l.maximal_[u])
        if (l.contained_[v][mi]) fam.push_back(mi);
      int r = static_cast<int>(fam.size());
      if (r > kMaxMaximals) {
        l.mu_[u][v] = kMuOverCap;
        continue;
      }
      long long acc = 0;
      for (unsigned mask = 1; mask < (1u << r); ++mask) {
        int cur = u;
        for (int t = 0; t < r; ++t)
          if (mask & (1u << t)) cur = l.inter_[cur][fam[t]];
        if (cur == v) acc += (__builtin_popcount(mask) % 2 == 0) ? 1 : -1;
      }
      l.mu_[u][v] = acc;
    }
  }
  return l;
}

int NormalLattice::index_of(const Subgroup& s) const {
  auto it = std::lower_bound(subgroups_.begin(), subgroups_.end(), s);
  if (it == subgroups_.end() || !(*it == s))
    throw SubgroupNotInLattice("subgroup of order " + std::to_string(s.order()) +
                               " is not a lattice member");
  return static_cast<int>(it - subgroups_.begin());
}

const std::vector<int>& NormalLattice::maximal_under(int u) const { return maximal_[u]; }

std::vector<int> NormalLattice::maximal_containing(int u, int v) const {
  if (!contained_[v][u]) throw NotContained("V is not contained in U");
  std::vector<int> out;
  for (int mi : maximal_[u])
    if (contained_[v][mi]) out.push_back(mi);
  return out;
}

long long NormalLattice::mu(int v, int u) const {
  if (!contained_[v][u]) throw NotContained("mu_G(V,U) requires V <= U");
  if (mu_[u][v] == kMuOverCap)
    throw TooManyMaximals("M_G(U,V) exceeds the cap of " + std::to_string(kMaxMaximals));
  return mu_[u][v];
}

long long NormalLattice::phi(int v, int u) const {
  if (!contained_[v][u]) throw NotContained("phi_G(V,U) requires V <= U");
  if (v == u) return 1;
  if (!expressible(v, u)) return 1;
  unsigned long long prod = 1;
  for (int mi : maximal_containing(u, v)) {
    auto f = static_cast<unsigned long long>(subgroup(u).order() / subgroup(mi).order() - 1);
    if (f != 0 && prod > std::numeric_limits<long long>::max() / f)
      throw Error("phi_G overflows a 64-bit integer");
    prod *= f;
  }
  return static_cast<long long>(prod);
}

bool NormalLattice::expressible(int v, int u) const {
  if (!contained_[v][u]) throw NotContained("expressibility requires V <= U");
  if (v == u) return false;  // "some" means a nonempty family
  int cur = u;
  for (int mi : maximal_[u])
    if (contained_[v][mi]) cur = inter_[cur][mi];
  return cur == v;
}

bool NormalLattice::minimal_in_itself(int u, const std::vector<int>& family) const {
  const auto& maximals = maximal_[u];
  for (int mi : family)
    if (std::find(maximals.begin(), maximals.end(), mi) == maximals.end())
      throw NotMaximalFamily("family member is not in M_G(U)");
  int r = static_cast<int>(family.size());
  if (r > kMaxMaximals)
    throw TooManyMaximals("family of size " + std::to_string(r) + " exceeds cap");
  int total = u;
  for (int mi : family) total = inter_[total][mi];
  for (unsigned mask = 0; mask + 1 < (1u << r); ++mask) {  // all proper subsets
    int cur = u;
    for (int t = 0; t < r; ++t)
      if (mask & (1u << t)) cur = inter_[cur][family[t]];
    if (cur == total) return false;
  }
  return true;
}

std::vector<long long> NormalLattice::mobius_invert(const std::vector<long long>& f) const {
  const int m = size();
  std::vector<long long> g(m, 0);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v)
      if (contained_[v][u]) g[u] += f[v] * mu(v, u);
  return g;
}

std::vector<Subgroup> maximal_g_normal(const NormalLattice& l, const Subgroup& u) {
  std::vector<Subgroup> out;
  for (int mi : l.maximal_under(l.index_of(u))) out.push_back(l.subgroup(mi));
  return out;
}

std::vector<Subgroup> maximal_g_normal_containing(const NormalLattice& l, const Subgroup& u,
                                                  const Subgroup& v) {
  std::vector<Subgroup> out;
  for (int mi : l.maximal_containing(l.index_of(u), l.index_of(v))) out.push_back(l.subgroup(mi));
  return out;
}

long long mu_g(const NormalLattice& l, const Subgroup& v, const Subgroup& u) {
  return l.mu(l.index_of(v), l.index_of(u));
}

long long phi_g(const NormalLattice& l, const Subgroup& v, const Subgroup& u) {
  return l.phi(l.index_of(v), l.index_of(u));
}

bool expressible_as_maximal_intersection(const NormalLattice& l, const Subgroup& v,
                                         const Subgroup& u) {
  return l.expressible(l.index_of(v), l.index_of(u));
}

bool is_minimal_in_itself(const NormalLattice& l, const Subgroup& u,
                          const std::vector<Subgroup>& family) {
  std::vector<int> idx;
  for (const Subgroup& s : family) idx.push_back(l.index_of(s));
  return l.minimal_in_itself(l.index_of(u), idx);
}

}  // namespace ramsum
