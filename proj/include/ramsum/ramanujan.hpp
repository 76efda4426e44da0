#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramsum/char_table.hpp"
#include "ramsum/conjugacy.hpp"
#include "ramsum/cyclotomic.hpp"
#include "ramsum/group.hpp"
#include "ramsum/lattice.hpp"

namespace ramsum {

/// The three branches of the closed form for C_chi(x), keyed by
/// K = Ker(chi) intersect <x^G>: K equals the closure, K is an intersection
/// of maximal G-normal subgroups of the closure, or neither.
enum class TheoremCase { FullKernel, Expressible, NotExpressible };

std::string to_string(TheoremCase c);

/// All routes to C_chi(x) for one (character, element) pair. direct always
/// equals theorem_value, and equals minimal_value when the minimal-family
/// gate admits the product formula; c_report enforces both.
struct CChiReport {
  int x = 0;
  int chi = 0;  // row index in the (canonically sorted) character table
  BigInt direct;
  TheoremCase theorem_case = TheoremCase::FullKernel;
  BigInt theorem_value;
  std::optional<BigInt> minimal_value;
  long long k_order = 0;  // |Ker(chi) intersect <x^G>|
};

/// (1/chi(1)) sum of chi over [x^G], in exact cyclotomic arithmetic. The
/// equivalence set is computed from normal closures alone, independent of
/// the lattice code paths the closed forms use. Throws NonIntegralValue if
/// the sum fails to reduce to an integer divisible by the degree.
BigInt c_direct(const GroupTable& g, const CharacterTable& t, const Character& chi, int x);

/// Closed form: |[x^G]| when K = <x^G>; the signed subset sum over
/// E within M_G(<x^G>) with intersection inside K when K is expressible as
/// an intersection of maximals; otherwise 0.
std::pair<TheoremCase, BigInt> c_theorem(const GroupTable& g, const NormalLattice& l,
                                         const CharacterTable& t, const Character& chi, int x);

/// Product form mu_G(K, <x^G>) |[x^G]| / phi_G(K, <x^G>), defined only when
/// M_G(<x^G>) is minimal in itself; absent otherwise. The division must be
/// exact; a remainder is a falsification and throws NonExactDivision.
std::optional<BigInt> c_minimal(const GroupTable& g, const NormalLattice& l,
                                const CharacterTable& t, const Character& chi, int x);

/// Abelian specialization: mu(ord(x)/|K|) phi(ord(x)) / phi(ord(x)/|K|) with
/// K = Ker(chi) intersect <x>. Throws NotAbelian for nonabelian input.
BigInt c_abelian(const GroupTable& g, const CharacterTable& t, const Character& chi, int x);

/// Runs every applicable route for table row chi_index and element x and
/// cross-checks them; disagreement throws VerificationError naming the pair.
CChiReport c_report(const GroupTable& g, const NormalLattice& l, const CharacterTable& t,
                    int chi_index, int x);

/// Classical Ramanujan sum R_n(alpha) two ways: the mu/phi formula and the
/// exact root-of-unity sum with conductor n. r_classical checks they agree
/// (VerificationError otherwise) and returns the common value.
long long r_classical_formula(long long n, long long alpha);
BigInt r_classical_direct(long long n, long long alpha);
long long r_classical(long long n, long long alpha);

/// f_chi(V) = |V| if chi is principal on V else 0, and its Moebius transform
/// g_chi over the lattice, both indexed by lattice index. Asserts the two
/// defining identities g_chi(<x^G>) = C_chi(x) and f = sum of g over
/// sub-members; failure throws VerificationError.
struct FAndG {
  std::vector<long long> f;
  std::vector<long long> g;
};
FAndG f_and_g(const GroupTable& g, const NormalLattice& l, const CharacterTable& t,
              const Character& chi);

}  // namespace ramsum
