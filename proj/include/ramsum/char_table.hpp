#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ramsum/conjugacy.hpp"
#include "ramsum/cyclotomic.hpp"
#include "ramsum/group.hpp"

namespace ramsum {

/// One character: degree chi(1) and one exact value per conjugacy class.
/// Rows of a computed table are irreducible; sum_of() builds reducible ones.
struct Character {
  long long degree = 0;
  std::vector<CycInt> values;
};

/// The irreducible character table of a group, all values exact cyclotomic
/// integers with conductor = exponent of G. Classes are in
/// conjugacy_classes() order; characters are sorted by (degree, then
/// lexicographic reduced value vectors) so output is deterministic.
struct CharacterTable {
  int exponent = 1;
  std::vector<ConjClass> classes;
  std::vector<int> class_of;  // element index -> class index
  std::vector<Character> characters;

  int class_count() const { return static_cast<int>(classes.size()); }
};

/// Dixon-Burnside: simultaneous eigenvectors of the class-sum matrices over
/// a prime field F_p (p = 1 mod exponent, p > 2 sqrt |G|), lifted to exact
/// cyclotomic values by a mod-p DFT over power-map classes. No floating
/// point anywhere. Throws PrimeSearchFailed if no suitable prime exists
/// below the search bound.
CharacterTable compute_character_table(const GroupTable& g);

/// Reads the chartab format and validates every table invariant before
/// acceptance. Throws FormatError (syntax, class-representative mismatch,
/// non-integer degree) or OrthogonalityFailure (with the failing pair).
CharacterTable parse_character_table(const GroupTable& g, std::istream& in);
CharacterTable load_character_table(const GroupTable& g, const std::string& path);

/// chartab format: header `chartab e=<exponent> classes=<k>`, one line of k
/// class-representative element indices, then k lines of k values; a value
/// is a comma-separated length-e integer vector, values separated by ';'.
std::string format_character_table(const CharacterTable& t);

/// Checks row count, integer degrees, sum of squared degrees, row norms and
/// exact column orthogonality. Throws FormatError or OrthogonalityFailure.
void validate_character_table(const GroupTable& g, const CharacterTable& t);

/// Ker(chi) = { x : chi(x) = chi(1) } as a Subgroup; always normal in G.
Subgroup kernel_of(const GroupTable& g, const CharacterTable& t, const Character& chi);

/// True iff chi is principal on N, i.e. N is inside Ker(chi).
bool is_principal_on(const GroupTable& g, const CharacterTable& t, const Character& chi,
                     const Subgroup& n);

/// Non-negative integer combination of table rows (a not necessarily
/// irreducible character). multiplicities has one entry per table row.
Character sum_of(const CharacterTable& t, const std::vector<long long>& multiplicities);

}  // namespace ramsum
