#pragma once

#include <vector>

#include "ramsum/group.hpp"

namespace ramsum {

class NormalLattice;

/// One conjugacy class: sorted member indices, representative = smallest.
struct ConjClass {
  int representative = 0;
  std::vector<int> members;
  int size() const { return static_cast<int>(members.size()); }
};

/// A subgroup as a sorted member list plus a constant-time membership mask.
/// Identity by canonical member list.
struct Subgroup {
  std::vector<int> members;  // sorted
  std::vector<char> mask;    // size n

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int x) const { return mask[x] != 0; }
  bool contains(const Subgroup& other) const;
  bool operator==(const Subgroup& o) const { return members == o.members; }
  bool operator<(const Subgroup& o) const;  // (order, lexicographic members)

  static Subgroup from_members(std::vector<int> members, int n);
};

/// Partition of 0..n-1 into conjugacy classes, sorted by (size, representative);
/// the identity class {0} comes first.
std::vector<ConjClass> conjugacy_classes(const GroupTable& g);

/// Subgroup generated by the given elements (BFS closure under products).
Subgroup subgroup_generated_by(const GroupTable& g, const std::vector<int>& seeds);

/// Intersection of two subgroups of the same group.
Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// Smallest normal subgroup containing x: the closure of the conjugacy
/// class of x.
Subgroup normal_closure(const GroupTable& g, int x);

/// [x^G]: all y with normal_closure(y) == normal_closure(x). Computed by the
/// subgroup-difference formula over the normal lattice.
std::vector<int> class_equivalence_set(const GroupTable& g, const NormalLattice& lattice, int x);

/// Same set by pairwise closure comparison, no lattice. Debug oracle, O(n^2)
/// closures.
std::vector<int> class_equivalence_set_by_closures(const GroupTable& g, int x);

/// [V^G]: members of V in no proper G-normal subgroup of G contained in V.
/// Empty iff V is not the normal closure of a single class. Throws
/// SubgroupNotInLattice if V is not a lattice member.
std::vector<int> class_set_of_subgroup(const GroupTable& g, const NormalLattice& lattice,
                                       const Subgroup& v);

}  // namespace ramsum
