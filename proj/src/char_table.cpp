#include "ramsum/char_table.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "ramsum/errors.hpp"

namespace ramsum {
namespace {

constexpr long long kPrimeSearchBound = 100'000'000;

long long mulmod(long long a, long long b, long long p) {
  return static_cast<long long>(static_cast<__int128>(a) * b % p);
}

long long powmod(long long a, long long e, long long p) {
  long long r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

long long invmod(long long a, long long p) { return powmod(a, p - 2, p); }

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Smallest prime p = 1 (mod e) with p*p > 4n, so every character degree and
// every multiplicity in the DFT lift is determined by its residue mod p.
long long find_splitting_prime(long long e, long long n) {
  for (long long p = e + 1; p <= kPrimeSearchBound; p += e)
    if (p * p > 4 * n && is_prime(p)) return p;
  throw PrimeSearchFailed("no prime p = 1 (mod " + std::to_string(e) + ") with p > 2*sqrt(" +
                          std::to_string(n) + ") below " + std::to_string(kPrimeSearchBound));
}

long long primitive_root(long long p) {
  std::vector<long long> qs;
  long long m = p - 1;
  for (long long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      qs.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) qs.push_back(m);
  for (long long g = 2; g < p; ++g) {
    bool ok = true;
    for (long long q : qs)
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw Error("no primitive root mod " + std::to_string(p));
}

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;  // row-major

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> rref(Mat& a, long long p) {
  int rows = static_cast<int>(a.size());
  int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[r], a[pr]);
    long long inv = invmod(a[r][c], p);
    for (int j = c; j < cols; ++j) a[r][j] = mulmod(a[r][j], inv, p);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      long long f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] = (a[i][j] - mulmod(f, a[r][j], p) % p + p) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Kernel basis of a square matrix over F_p, columns in ascending free-column
// order so the splitting is deterministic.
std::vector<Vec> kernel_basis(Mat a, long long p) {
  int n = static_cast<int>(a.size());
  std::vector<int> pivots = rref(a, p);
  std::vector<char> is_pivot(n, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<Vec> basis;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Vec v(n, 0);
    v[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - a[r][c]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// Matrix of M restricted to span(basis): solves B X = M B column by column.
// basis vectors are columns, ambient dimension k, subspace dimension d.
Mat restriction_matrix(const Mat& m, const std::vector<Vec>& basis, long long p) {
  int k = static_cast<int>(m.size());
  int d = static_cast<int>(basis.size());
  Mat aug(k, Vec(2 * d, 0));
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < k; ++i) aug[i][j] = basis[j][i];
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < k; ++i) {
      long long s = 0;
      for (int t = 0; t < k; ++t) s = (s + mulmod(m[i][t], basis[j][t], p)) % p;
      aug[i][d + j] = s;
    }
  std::vector<int> pivots = rref(aug, p);
  if (static_cast<int>(pivots.size()) != d || pivots.back() != d - 1)
    throw Error("class-sum matrix does not preserve the eigenspace");
  Mat x(d, Vec(d, 0));
  for (int r = 0; r < d; ++r)
    for (int j = 0; j < d; ++j) x[r][j] = aug[r][d + j];
  for (int r = d; r < k; ++r)
    for (int j = 0; j < d; ++j)
      if (aug[r][d + j] != 0) throw Error("class-sum matrix does not preserve the eigenspace");
  return x;
}

bool character_row_less(const Character& a, const Character& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  for (size_t j = 0; j < a.values.size(); ++j) {
    const std::vector<BigInt> ca = a.values[j].reduced();
    const std::vector<BigInt> cb = b.values[j].reduced();
    if (ca != cb) return ca < cb;
  }
  return false;
}

}  // namespace

CharacterTable compute_character_table(const GroupTable& g) {
  CharacterTable table;
  table.classes = conjugacy_classes(g);
  const int n = g.order();
  const int k = static_cast<int>(table.classes.size());
  table.class_of.assign(n, -1);
  for (int j = 0; j < k; ++j)
    for (int x : table.classes[j].members) table.class_of[x] = j;

  const int e = g.exponent();
  table.exponent = e;
  if (n == 1) {
    table.characters.push_back(Character{1, {CycInt::integer(1, 1)}});
    return table;
  }

  const long long p = find_splitting_prime(e, n);
  std::vector<int> reps(k), csize(k), inv_class(k);
  for (int j = 0; j < k; ++j) {
    reps[j] = table.classes[j].representative;
    csize[j] = static_cast<int>(table.classes[j].members.size());
    inv_class[j] = table.class_of[g.inv(reps[j])];
  }

  // Class-sum structure constants a[i][j][t] = #{ u in C_i : u^-1 z_t in C_j }
  // give the matrices M_i acting on the k-dimensional class algebra.
  std::vector<Mat> class_mat(k, Mat(k, Vec(k, 0)));
  for (int i = 0; i < k; ++i)
    for (int u : table.classes[i].members) {
      int ui = g.inv(u);
      for (int t = 0; t < k; ++t) {
        int j = table.class_of[g.mul(ui, reps[t])];
        ++class_mat[i][j][t];
      }
    }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int t = 0; t < k; ++t) class_mat[i][j][t] %= p;

  // Split the common eigenspaces: start with the full space and refine with
  // each class matrix until every space is a line.
  std::vector<std::vector<Vec>> spaces;
  {
    std::vector<Vec> full;
    for (int j = 0; j < k; ++j) {
      Vec v(k, 0);
      v[j] = 1;
      full.push_back(std::move(v));
    }
    spaces.push_back(std::move(full));
  }
  for (int i = 1; i < k; ++i) {
    bool done = true;
    for (const auto& s : spaces)
      if (s.size() > 1) done = false;
    if (done) break;
    std::vector<std::vector<Vec>> next;
    for (auto& s : spaces) {
      int d = static_cast<int>(s.size());
      if (d == 1) {
        next.push_back(std::move(s));
        continue;
      }
      Mat x = restriction_matrix(class_mat[i], s, p);
      int found = 0;
      for (long long lam = 0; lam < p && found < d; ++lam) {
        Mat shifted = x;
        for (int r = 0; r < d; ++r) shifted[r][r] = (shifted[r][r] - lam % p + p) % p;
        std::vector<Vec> ker = kernel_basis(shifted, p);
        if (ker.empty()) continue;
        std::vector<Vec> ambient;
        for (const Vec& c : ker) {
          Vec v(k, 0);
          for (int t = 0; t < d; ++t)
            for (int j = 0; j < k; ++j) v[j] = (v[j] + mulmod(c[t], s[t][j], p)) % p;
          ambient.push_back(std::move(v));
        }
        found += static_cast<int>(ambient.size());
        next.push_back(std::move(ambient));
      }
      if (found != d) throw Error("class matrix failed to split over F_p");
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != k)
    throw Error("eigenspace count " + std::to_string(spaces.size()) + " != class count " +
                std::to_string(k));

  // Per character: normalize u(1) = 1, recover the degree from the
  // orthogonality relation d^2 = |G| / sum_j u_j u_{j*} / |C_j|, then the
  // mod-p character values chi(z_j) = d u_j / |C_j|.
  std::vector<Vec> chi_mod(k);
  std::vector<long long> degree(k);
  for (int c = 0; c < k; ++c) {
    Vec u = spaces[c][0];
    if (u[0] == 0) throw Error("eigenvector vanishes at the identity class");
    long long norm = invmod(u[0], p);
    for (int j = 0; j < k; ++j) u[j] = mulmod(u[j], norm, p);
    long long s = 0;
    for (int j = 0; j < k; ++j) {
      long long term = mulmod(u[j], u[inv_class[j]], p);
      s = (s + mulmod(term, invmod(csize[j] % p, p), p)) % p;
    }
    if (s == 0) throw Error("degenerate eigenvector norm");
    long long d2 = mulmod(n % p, invmod(s, p), p);
    long long d = -1;
    for (long long t = 1; 2 * t <= p - 1; ++t)
      if (mulmod(t, t, p) == d2) {
        d = t;
        break;
      }
    if (d < 0 || n % d != 0) throw Error("character degree not recovered mod p");
    degree[c] = d;
    chi_mod[c].assign(k, 0);
    for (int j = 0; j < k; ++j)
      chi_mod[c][j] = mulmod(mulmod(d, u[j], p), invmod(csize[j] % p, p), p);
  }

  // Power-map classes: pcl[j][s] = class of z_j^s, shared by every lift.
  std::vector<std::vector<int>> pcl(k, std::vector<int>(e));
  for (int j = 0; j < k; ++j) {
    int x = g.identity();
    for (int s = 0; s < e; ++s) {
      pcl[j][s] = table.class_of[x];
      x = g.mul(x, reps[j]);
    }
  }

  // Lift: chi(z_j) = sum_t m_t zeta^t with m_t = (1/e) sum_s chi(z_j^s) z^-st
  // mod p, where z is a primitive e-th root of unity in F_p. Each m_t is a
  // genuine multiplicity, so 0 <= m_t <= d < p/2 identifies it exactly.
  const long long z = powmod(primitive_root(p), (p - 1) / e, p);
  const long long inv_e = invmod(e % p, p);
  std::vector<long long> zpow(e);
  zpow[0] = 1;
  for (int t = 1; t < e; ++t) zpow[t] = mulmod(zpow[t - 1], z, p);
  for (int c = 0; c < k; ++c) {
    Character chi;
    chi.degree = degree[c];
    chi.values.reserve(k);
    for (int j = 0; j < k; ++j) {
      CycInt val(e);
      long long msum = 0;
      for (int t = 0; t < e; ++t) {
        long long m = 0;
        for (int s = 0; s < e; ++s) {
          int zexp = static_cast<int>((static_cast<long long>(e) * e - static_cast<long long>(s) * t % e) % e);
          m = (m + mulmod(chi_mod[c][pcl[j][s]], zpow[zexp], p)) % p;
        }
        m = mulmod(m, inv_e, p);
        if (m > degree[c])
          throw Error("root-of-unity multiplicity " + std::to_string(m) + " exceeds degree");
        msum += m;
        if (m != 0) val += CycInt::zeta_power(e, t) * CycInt::integer(e, m);
      }
      if (msum != degree[c]) throw Error("root-of-unity multiplicities do not sum to the degree");
      chi.values.push_back(std::move(val));
    }
    if (!chi.values[0].is_rational() || chi.values[0].rational() != chi.degree)
      throw Error("lifted degree disagrees with mod-p degree");
    table.characters.push_back(std::move(chi));
  }

  std::sort(table.characters.begin(), table.characters.end(), character_row_less);
  validate_character_table(g, table);
  return table;
}

void validate_character_table(const GroupTable& g, const CharacterTable& t) {
  const int k = t.class_count();
  const long long n = g.order();
  if (static_cast<int>(t.characters.size()) != k)
    throw OrthogonalityFailure("table has " + std::to_string(t.characters.size()) +
                               " rows for " + std::to_string(k) + " classes");
  BigInt deg2 = 0;
  for (int r = 0; r < k; ++r) {
    const Character& chi = t.characters[r];
    if (static_cast<int>(chi.values.size()) != k)
      throw FormatError("row " + std::to_string(r) + " has " +
                        std::to_string(chi.values.size()) + " values, want " + std::to_string(k));
    if (!chi.values[0].is_rational())
      throw FormatError("row " + std::to_string(r) + " has a non-integer degree");
    if (chi.values[0].rational() != chi.degree || chi.degree <= 0)
      throw FormatError("row " + std::to_string(r) + " degree mismatch");
    deg2 += BigInt(chi.degree) * chi.degree;
  }
  if (deg2 != n)
    throw OrthogonalityFailure("sum of squared degrees is " + deg2.str() + ", want " +
                               std::to_string(n));
  // Row norms and pairwise row orthogonality, both exact.
  for (int r = 0; r < k; ++r)
    for (int s = r; s < k; ++s) {
      const int e = t.exponent;
      CycInt acc(e);
      for (int j = 0; j < k; ++j) {
        CycInt term = t.characters[r].values[j] * t.characters[s].values[j].conjugate();
        acc += term * CycInt::integer(e, static_cast<long long>(t.classes[j].members.size()));
      }
      CycInt want = CycInt::integer(e, r == s ? n : 0);
      if (acc != want)
        throw OrthogonalityFailure("rows " + std::to_string(r) + "," + std::to_string(s) +
                                   ": inner product " + acc.str());
    }
  // Column orthogonality: sum_chi chi(a) conj(chi(b)) = delta_ab |G| / |C_a|.
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) {
      const int e = t.exponent;
      CycInt acc(e);
      for (int r = 0; r < k; ++r)
        acc += t.characters[r].values[a] * t.characters[r].values[b].conjugate();
      long long want = a == b ? n / static_cast<long long>(t.classes[a].members.size()) : 0;
      if (acc != CycInt::integer(e, want))
        throw OrthogonalityFailure("columns " + std::to_string(a) + "," + std::to_string(b) +
                                   ": inner product " + acc.str());
    }
}

std::string format_character_table(const CharacterTable& t) {
  std::ostringstream out;
  out << "chartab e=" << t.exponent << " classes=" << t.class_count() << "\n";
  for (int j = 0; j < t.class_count(); ++j)
    out << (j ? " " : "") << t.classes[j].representative;
  out << "\n";
  for (const Character& chi : t.characters) {
    for (int j = 0; j < t.class_count(); ++j) out << (j ? ";" : "") << chi.values[j].str();
    out << "\n";
  }
  return out.str();
}

CharacterTable parse_character_table(const GroupTable& g, std::istream& in) {
  CharacterTable t;
  t.classes = conjugacy_classes(g);
  const int k = static_cast<int>(t.classes.size());
  t.class_of.assign(g.order(), -1);
  for (int j = 0; j < k; ++j)
    for (int x : t.classes[j].members) t.class_of[x] = j;

  std::string line;
  auto next_line = [&]() {
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_line()) throw FormatError("empty character table file");
  {
    std::istringstream head(line);
    std::string tag, etok, ktok;
    head >> tag >> etok >> ktok;
    if (tag != "chartab" || etok.rfind("e=", 0) != 0 || ktok.rfind("classes=", 0) != 0)
      throw FormatError("bad chartab header: " + line);
    try {
      t.exponent = std::stoi(etok.substr(2));
      if (std::stoi(ktok.substr(8)) != k)
        throw FormatError("header declares " + ktok.substr(8) + " classes, group has " +
                          std::to_string(k));
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw FormatError("bad chartab header: " + line);
    }
    if (t.exponent != g.exponent())
      throw FormatError("header exponent " + std::to_string(t.exponent) +
                        " != group exponent " + std::to_string(g.exponent()));
  }

  if (!next_line()) throw FormatError("missing class representative line");
  {
    std::istringstream reps(line);
    for (int j = 0; j < k; ++j) {
      int r;
      if (!(reps >> r)) throw FormatError("expected " + std::to_string(k) + " class representatives");
      if (r < 0 || r >= g.order() || t.class_of[r] != j)
        throw FormatError("class representative " + std::to_string(r) +
                          " does not represent class " + std::to_string(j));
    }
    int extra;
    if (reps >> extra) throw FormatError("trailing data on class representative line");
  }

  for (int r = 0; r < k; ++r) {
    if (!next_line()) throw FormatError("expected " + std::to_string(k) + " character rows");
    Character chi;
    std::istringstream row(line);
    std::string value;
    while (std::getline(row, value, ';')) {
      std::vector<BigInt> coeffs;
      std::istringstream vals(value);
      std::string tok;
      while (std::getline(vals, tok, ',')) {
        const size_t a = tok.find_first_not_of(" \t");
        if (a == std::string::npos) throw FormatError("empty coefficient in row " + std::to_string(r));
        const size_t b = tok.find_last_not_of(" \t");
        try {
          coeffs.emplace_back(tok.substr(a, b - a + 1));
        } catch (const std::exception&) {
          throw FormatError("bad coefficient '" + tok + "' in row " + std::to_string(r));
        }
      }
      if (static_cast<int>(coeffs.size()) != t.exponent)
        throw FormatError("value with " + std::to_string(coeffs.size()) + " coefficients in row " +
                          std::to_string(r) + ", want " + std::to_string(t.exponent));
      chi.values.push_back(CycInt(t.exponent, std::move(coeffs)));
    }
    if (static_cast<int>(chi.values.size()) != k)
      throw FormatError("row " + std::to_string(r) + " has " + std::to_string(chi.values.size()) +
                        " values, want " + std::to_string(k));
    if (!chi.values[0].is_rational())
      throw FormatError("row " + std::to_string(r) + " has a non-integer degree");
    const BigInt deg = chi.values[0].rational();
    if (deg <= 0 || deg > g.order())
      throw FormatError("row " + std::to_string(r) + " has degree " + deg.str());
    chi.degree = deg.convert_to<long long>();
    t.characters.push_back(std::move(chi));
  }
  if (next_line()) throw FormatError("trailing data after character rows");

  std::sort(t.characters.begin(), t.characters.end(), character_row_less);
  validate_character_table(g, t);
  return t;
}

CharacterTable load_character_table(const GroupTable& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open character table file: " + path);
  return parse_character_table(g, in);
}

Subgroup kernel_of(const GroupTable& g, const CharacterTable& t, const Character& chi) {
  const CycInt deg = CycInt::integer(t.exponent, chi.degree);
  std::vector<int> members;
  for (int j = 0; j < t.class_count(); ++j)
    if (chi.values[j] == deg)
      members.insert(members.end(), t.classes[j].members.begin(), t.classes[j].members.end());
  return Subgroup::from_members(members, g.order());
}

bool is_principal_on(const GroupTable& g, const CharacterTable& t, const Character& chi,
                     const Subgroup& n) {
  (void)g;
  const CycInt deg = CycInt::integer(t.exponent, chi.degree);
  for (int x : n.members)
    if (chi.values[t.class_of[x]] != deg) return false;
  return true;
}

Character sum_of(const CharacterTable& t, const std::vector<long long>& multiplicities) {
  if (multiplicities.size() != t.characters.size())
    throw Error("need one multiplicity per table row");
  Character out;
  out.values.assign(t.class_count(), CycInt(t.exponent));
  for (size_t r = 0; r < multiplicities.size(); ++r) {
    const long long m = multiplicities[r];
    if (m < 0) throw Error("multiplicities must be non-negative");
    if (m == 0) continue;
    const CycInt scale = CycInt::integer(t.exponent, m);
    out.degree += m * t.characters[r].degree;
    for (int j = 0; j < t.class_count(); ++j) out.values[j] += t.characters[r].values[j] * scale;
  }
  return out;
}

}  // namespace ramsum
