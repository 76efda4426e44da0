#include "ramsum/conjugacy.hpp"

#include <algorithm>

#include "ramsum/errors.hpp"
#include "ramsum/lattice.hpp"

namespace ramsum {

bool Subgroup::contains(const Subgroup& other) const {
  for (int x : other.members)
    if (!mask[x]) return false;
  return true;
}

bool Subgroup::operator<(const Subgroup& o) const {
  if (members.size() != o.members.size()) return members.size() < o.members.size();
  return members < o.members;
}

Subgroup Subgroup::from_members(std::vector<int> members, int n) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup s;
  s.mask.assign(n, 0);
  for (int x : members) s.mask[x] = 1;
  s.members = std::move(members);
  return s;
}

std::vector<ConjClass> conjugacy_classes(const GroupTable& g) {
  const int n = g.order();
  std::vector<char> visited(n, 0);
  std::vector<ConjClass> classes;
  for (int x = 0; x < n; ++x) {
    if (visited[x]) continue;
    ConjClass c;
    for (int a = 0; a < n; ++a) {
      int y = g.mul(g.mul(a, x), g.inv(a));
      if (!visited[y]) {
        visited[y] = 1;
        c.members.push_back(y);
      }
    }
    std::sort(c.members.begin(), c.members.end());
    c.representative = c.members.front();
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), [](const ConjClass& a, const ConjClass& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.representative < b.representative;
  });
  return classes;
}

Subgroup subgroup_generated_by(const GroupTable& g, const std::vector<int>& seeds) {
  const int n = g.order();
  std::vector<char> mask(n, 0);
  std::vector<int> queue;
  mask[0] = 1;
  queue.push_back(0);
  for (int s : seeds) {
    if (!mask[s]) {
      mask[s] = 1;
      queue.push_back(s);
    }
  }
  // close under products; inverses follow in a finite group
  for (size_t i = 0; i < queue.size(); ++i) {
    for (size_t j = 0; j < queue.size(); ++j) {
      int p = g.mul(queue[i], queue[j]);
      if (!mask[p]) {
        mask[p] = 1;
        queue.push_back(p);
      }
    }
  }
  return Subgroup::from_members(std::move(queue), n);
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<int> m;
  for (int x : a.members)
    if (b.mask[x]) m.push_back(x);
  return Subgroup::from_members(std::move(m), static_cast<int>(a.mask.size()));
}

Subgroup normal_closure(const GroupTable& g, int x) {
  const int n = g.order();
  std::vector<int> cls;
  for (int a = 0; a < n; ++a) cls.push_back(g.mul(g.mul(a, x), g.inv(a)));
  return subgroup_generated_by(g, cls);
}

std::vector<int> class_equivalence_set(const GroupTable& g, const NormalLattice& lattice, int x) {
  return class_set_of_subgroup(g, lattice, normal_closure(g, x));
}

std::vector<int> class_equivalence_set_by_closures(const GroupTable& g, int x) {
  Subgroup cl = normal_closure(g, x);
  std::vector<int> out;
  for (int y = 0; y < g.order(); ++y)
    if (normal_closure(g, y) == cl) out.push_back(y);
  return out;
}

std::vector<int> class_set_of_subgroup(const GroupTable& g, const NormalLattice& lattice,
                                       const Subgroup& v) {
  (void)g;
  int vi = lattice.index_of(v);
  std::vector<char> excluded(v.mask.size(), 0);
  for (int w = 0; w < lattice.size(); ++w) {
    if (w == vi || !lattice.contained_in(w, vi)) continue;
    for (int y : lattice.subgroup(w).members) excluded[y] = 1;
  }
  std::vector<int> out;
  for (int y : v.members)
    if (!excluded[y]) out.push_back(y);
  return out;
}

}  // namespace ramsum
