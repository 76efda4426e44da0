#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramsum {

/// A finite group as a dense multiplication table over element indices
/// 0..n-1. The identity always has index 0. Immutable once built; all
/// queries are O(1) table lookups.
class GroupTable {
 public:
  int order() const { return n_; }
  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int element_order(int a) const { return order_[a]; }
  int identity() const { return 0; }

  /// lcm of all element orders.
  long long exponent() const;
  bool abelian() const;

  /// Indices of the input generators after the deterministic BFS indexing.
  /// Empty for table-built groups.
  const std::vector<int>& generator_indices() const { return gen_idx_; }

  /// Multiplication table as 1-based rows, the `table` file form.
  std::vector<std::vector<int>> rows_1based() const;

  friend GroupTable build_from_generators(int degree,
                                          const std::vector<std::vector<int>>& generators,
                                          int max_order);
  friend GroupTable build_from_table(int n, const std::vector<std::vector<int>>& rows);

 private:
  GroupTable() = default;
  void finish();  // inv_, order_ from mul_

  int n_ = 0;
  std::vector<int> mul_;   // row-major n*n
  std::vector<int> inv_;
  std::vector<int> order_;
  std::vector<int> gen_idx_;
};

/// Closure of permutation generators under composition. Each generator is a
/// list of 1-based images of 1..degree. Elements are indexed in breadth-first
/// discovery order with generators applied in input order, identity first.
/// Throws NotAPermutation or GroupTooLarge (closure exceeds max_order).
GroupTable build_from_generators(int degree,
                                 const std::vector<std::vector<int>>& generators,
                                 int max_order = 4096);

/// Validates an explicit n x n Cayley table (1-based entries, element 1 the
/// identity). Checks the Latin-square property, inverses and associativity;
/// throws NotAGroup with the first failing axiom and a witness.
GroupTable build_from_table(int n, const std::vector<std::vector<int>>& rows);

/// Smallest k >= 1 with a^k = identity.
int element_order(const GroupTable& g, int a);

/// Reads a group file: '#' starts a comment line; first payload line is
/// either `perm <degree>` followed by one generator per line, or `table <n>`
/// followed by n rows. Throws FormatError on malformed input.
GroupTable parse_group_file(std::istream& in, int max_order = 4096);
GroupTable load_group_file(const std::string& path, int max_order = 4096);

}  // namespace ramsum
