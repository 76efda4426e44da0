#pragma once

#include <vector>

#include "ramsum/conjugacy.hpp"
#include "ramsum/group.hpp"

namespace ramsum {

/// The lattice of all normal subgroups of a fixed finite group, with
/// containment, per-subgroup maximal G-normal families, memoized pairwise
/// intersections and the full table of the generalized Moebius function
/// mu_G. Immutable after construction; queries are pure.
///
/// mu_G(V,U) is 1 on the diagonal, otherwise the signed count of ways to
/// write V as an intersection of maximal G-normal subgroups of U
/// (even representations minus odd ones), and 0 when no such representation
/// exists. phi_G(V,U) is the product of (|U|/|M| - 1) over the maximal
/// G-normal subgroups of U containing V, when V is such an intersection.
class NormalLattice {
 public:
  int size() const { return static_cast<int>(subgroups_.size()); }
  const Subgroup& subgroup(int i) const { return subgroups_[i]; }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }

  int trivial_index() const { return 0; }
  int full_index() const { return size() - 1; }

  /// Index of an equal subgroup; throws SubgroupNotInLattice.
  int index_of(const Subgroup& s) const;

  /// v subseteq u, by lattice indices.
  bool contained_in(int v, int u) const { return contained_[v][u] != 0; }

  /// M_G(U): maximal G-normal subgroups of U, as lattice indices.
  const std::vector<int>& maximal_under(int u) const;

  /// M_G(U,V): the members of M_G(U) that contain V. Throws NotContained
  /// unless V subseteq U.
  std::vector<int> maximal_containing(int u, int v) const;

  /// Lattice index of the intersection, from the memoized table.
  int intersection(int a, int b) const { return inter_[a][b]; }

  long long mu(int v, int u) const;
  long long phi(int v, int u) const;

  /// True iff intersecting all of M_G(U,V) gives back V (and V != U).
  bool expressible(int v, int u) const;

  /// True iff no proper subfamily of `family` (subset of M_G(U)) has the
  /// same total intersection. The empty family is minimal.
  bool minimal_in_itself(int u, const std::vector<int>& family) const;
  /// Shorthand for the full family M_G(U).
  bool minimal_in_itself(int u) const { return minimal_in_itself(u, maximal_under(u)); }

  /// Moebius inversion: g(U) = sum over V subseteq U of f(V) mu_G(V,U).
  /// f is indexed by lattice index.
  std::vector<long long> mobius_invert(const std::vector<long long>& f) const;

  friend NormalLattice enumerate_normal_subgroups(const GroupTable& g);

 private:
  NormalLattice() = default;

  std::vector<Subgroup> subgroups_;             // sorted by (order, members)
  std::vector<std::vector<char>> contained_;    // contained_[v][u]
  std::vector<std::vector<int>> maximal_;       // maximal_[u] = M_G(U), ascending
  std::vector<std::vector<int>> inter_;         // intersection indices
  std::vector<std::vector<long long>> mu_;      // mu_[u][v], -1 slots unused
};

/// Enumerates all normal subgroups of g: normal closures of the conjugacy
/// classes, closed under pairwise join and intersection to a fixed point.
/// Throws LatticeTooLarge beyond 10^5 subgroups.
NormalLattice enumerate_normal_subgroups(const GroupTable& g);

// Free-function forms of the lattice queries, taking explicit subgroups.
std::vector<Subgroup> maximal_g_normal(const NormalLattice& l, const Subgroup& u);
std::vector<Subgroup> maximal_g_normal_containing(const NormalLattice& l, const Subgroup& u,
                                                  const Subgroup& v);
long long mu_g(const NormalLattice& l, const Subgroup& v, const Subgroup& u);
long long phi_g(const NormalLattice& l, const Subgroup& v, const Subgroup& u);
bool expressible_as_maximal_intersection(const NormalLattice& l, const Subgroup& v,
                                         const Subgroup& u);
bool is_minimal_in_itself(const NormalLattice& l, const Subgroup& u,
                          const std::vector<Subgroup>& family);

}  // namespace ramsum
