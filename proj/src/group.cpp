#include "ramsum/group.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "ramsum/errors.hpp"

namespace ramsum {

namespace {

// Full associativity check up to this order, random sampling above.
constexpr int kExhaustiveAssocLimit = 512;
constexpr long long kSampledTriples = 1'000'000;

std::string triple(int a, int b, int c) {
  std::ostringstream os;
  os << "(" << a << "," << b << "," << c << ")";
  return os.str();
}

void check_axioms(const GroupTable& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a)
      throw NotAGroup("element 0 is not an identity, witness " + std::to_string(a));
  }
  // Latin-square property: rows and columns are permutations.
  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      int p = g.mul(a, b);
      if (seen[p]) throw NotAGroup("row " + std::to_string(a) + " is not a permutation");
      seen[p] = 1;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int a = 0; a < n; ++a) {
      int p = g.mul(a, b);
      if (seen[p]) throw NotAGroup("column " + std::to_string(b) + " is not a permutation");
      seen[p] = 1;
    }
  }
  auto assoc = [&](int a, int b, int c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
      throw NotAGroup("associativity fails at " + triple(a, b, c));
  };
  if (n <= kExhaustiveAssocLimit) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    // Fixed seed: the build must be deterministic.
    std::mt19937_64 rng(0x5eedu);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (long long i = 0; i < kSampledTriples; ++i) assoc(pick(rng), pick(rng), pick(rng));
  }
}

}  // namespace

void GroupTable::finish() {
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (mul(a, b) == 0) {
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] < 0) throw NotAGroup("element " + std::to_string(a) + " has no inverse");
    if (mul(inv_[a], a) != 0)
      throw NotAGroup("left/right inverse mismatch at " + std::to_string(a));
  }
  order_.assign(n_, 0);
  for (int a = 0; a < n_; ++a) {
    int k = 1, p = a;
    while (p != 0) {
      p = mul(p, a);
      ++k;
      if (k > n_ + 1) throw NotAGroup("power sequence of " + std::to_string(a) + " misses identity");
    }
    order_[a] = a == 0 ? 1 : k;
  }
}

long long GroupTable::exponent() const {
  long long e = 1;
  for (int a = 0; a < n_; ++a) e = std::lcm<long long>(e, order_[a]);
  return e;
}

bool GroupTable::abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<int>> GroupTable::rows_1based() const {
  std::vector<std::vector<int>> rows(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) rows[a][b] = mul(a, b) + 1;
  return rows;
}

GroupTable build_from_generators(int degree, const std::vector<std::vector<int>>& generators,
                                 int max_order) {
  if (degree < 1) throw NotAPermutation("degree must be positive");
  if (generators.empty()) throw NotAPermutation("generator list is empty");

  // 0-based image vectors
  std::vector<std::vector<int>> gens;
  for (size_t gi = 0; gi < generators.size(); ++gi) {
    const auto& im = generators[gi];
    if (static_cast<int>(im.size()) != degree)
      throw NotAPermutation("generator " + std::to_string(gi) + " has " +
                            std::to_string(im.size()) + " images, expected " +
                            std::to_string(degree));
    std::vector<char> seen(degree, 0);
    std::vector<int> g(degree);
    for (int i = 0; i < degree; ++i) {
      int v = im[i];
      if (v < 1 || v > degree)
        throw NotAPermutation("generator " + std::to_string(gi) + ": image " +
                              std::to_string(v) + " out of range");
      if (seen[v - 1])
        throw NotAPermutation("generator " + std::to_string(gi) + ": duplicate image " +
                              std::to_string(v));
      seen[v - 1] = 1;
      g[i] = v - 1;
    }
    gens.push_back(std::move(g));
  }

  // BFS closure. (a*b)(i) = a(b(i)); new elements are found by right
  // multiplication with the generators in input order.
  std::vector<int> ident(degree);
  std::iota(ident.begin(), ident.end(), 0);
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems;
  elems.push_back(ident);
  index[ident] = 0;
  std::vector<int> gen_idx(gens.size(), -1);
  for (size_t head = 0; head < elems.size(); ++head) {
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      std::vector<int> w(degree);
      for (int i = 0; i < degree; ++i) w[i] = elems[head][gens[gi][i]];
      auto it = index.find(w);
      if (it == index.end()) {
        if (static_cast<int>(elems.size()) >= max_order)
          throw GroupTooLarge("closure exceeds cap " + std::to_string(max_order));
        it = index.emplace(std::move(w), static_cast<int>(elems.size())).first;
        elems.push_back(it->first);
      }
      if (head == 0) gen_idx[gi] = it->second;
    }
  }

  GroupTable g;
  g.n_ = static_cast<int>(elems.size());
  g.mul_.resize(static_cast<size_t>(g.n_) * g.n_);
  std::vector<int> w(degree);
  for (int a = 0; a < g.n_; ++a) {
    for (int b = 0; b < g.n_; ++b) {
      for (int i = 0; i < degree; ++i) w[i] = elems[a][elems[b][i]];
      g.mul_[static_cast<size_t>(a) * g.n_ + b] = index.at(w);
    }
  }
  g.gen_idx_ = gen_idx;
  check_axioms(g);
  g.finish();
  return g;
}

GroupTable build_from_table(int n, const std::vector<std::vector<int>>& rows) {
  if (n < 1) throw NotAGroup("order must be positive");
  if (static_cast<int>(rows.size()) != n) throw NotAGroup("expected " + std::to_string(n) + " rows");
  GroupTable g;
  g.n_ = n;
  g.mul_.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(rows[a].size()) != n)
      throw NotAGroup("row " + std::to_string(a + 1) + " has wrong length");
    for (int b = 0; b < n; ++b) {
      int v = rows[a][b];
      if (v < 1 || v > n)
        throw NotAGroup("entry " + std::to_string(v) + " at (" + std::to_string(a + 1) + "," +
                        std::to_string(b + 1) + ") out of range");
      g.mul_[static_cast<size_t>(a) * n + b] = v - 1;
    }
  }
  check_axioms(g);
  g.finish();
  return g;
}

int element_order(const GroupTable& g, int a) { return g.element_order(a); }

namespace {

std::vector<std::string> payload_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::vector<int> parse_ints(const std::string& line, const char* what) {
  std::istringstream is(line);
  std::vector<int> v;
  int x;
  while (is >> x) v.push_back(x);
  is.clear();
  std::string rest;
  if (is >> rest) throw FormatError(std::string("unexpected token in ") + what + ": " + rest);
  if (v.empty()) throw FormatError(std::string("empty ") + what + " line");
  return v;
}

}  // namespace

GroupTable parse_group_file(std::istream& in, int max_order) {
  auto lines = payload_lines(in);
  if (lines.empty()) throw FormatError("group file has no payload lines");
  std::istringstream head(lines[0]);
  std::string form;
  long long m = 0;
  if (!(head >> form >> m)) throw FormatError("bad header line: " + lines[0]);
  if (form == "perm") {
    if (m < 1) throw FormatError("degree must be positive");
    std::vector<std::vector<int>> gens;
    for (size_t i = 1; i < lines.size(); ++i) gens.push_back(parse_ints(lines[i], "generator"));
    if (gens.empty()) throw FormatError("perm form needs at least one generator line");
    return build_from_generators(static_cast<int>(m), gens, max_order);
  }
  if (form == "table") {
    if (m < 1) throw FormatError("order must be positive");
    if (m > max_order) throw GroupTooLarge("table order exceeds cap " + std::to_string(max_order));
    if (lines.size() != static_cast<size_t>(m) + 1)
      throw FormatError("expected " + std::to_string(m) + " table rows, got " +
                        std::to_string(lines.size() - 1));
    std::vector<std::vector<int>> rows;
    for (size_t i = 1; i < lines.size(); ++i) rows.push_back(parse_ints(lines[i], "table row"));
    return build_from_table(static_cast<int>(m), rows);
  }
  throw FormatError("unknown group file form: " + form);
}

GroupTable load_group_file(const std::string& path, int max_order) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open group file: " + path);
  return parse_group_file(in, max_order);
}

}  // namespace ramsum
