#include "foxcalc/catalog.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace foxcalc {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

bool is_power_of(int n, int p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, int order, std::vector<int> table,
                         int pgroup_prime)
    : name_(std::move(name)), order_(order), table_(std::move(table)),
      pgroup_prime_(pgroup_prime) {
  if (order_ < 1) throw std::invalid_argument("group order must be positive");
  if (table_.size() != static_cast<std::size_t>(order_) * order_)
    throw std::invalid_argument("multiplication table has wrong size");
  for (int v : table_)
    if (v < 0 || v >= order_)
      throw std::invalid_argument("table entry out of range");
  for (int a = 0; a < order_; ++a)
    if (mul(0, a) != a || mul(a, 0) != a)
      throw std::invalid_argument("identity is not at index 0");
  // Latin square: each row and column is a permutation.
  std::vector<char> seen(order_);
  for (int a = 0; a < order_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < order_; ++b) {
      int v = mul(a, b);
      if (seen[v]) throw std::invalid_argument("table row is not a permutation");
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < order_; ++b) {
      int v = mul(b, a);
      if (seen[v]) throw std::invalid_argument("table column is not a permutation");
      seen[v] = 1;
    }
  }
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      for (int c = 0; c < order_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw std::invalid_argument("table is not associative");
  inv_.assign(order_, -1);
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (mul(a, b) == 0) inv_[a] = b;
  if (pgroup_prime_ != 0) {
    if (!is_prime(pgroup_prime_))
      throw std::invalid_argument("pgroup tag is not prime");
    if (!is_power_of(order_, pgroup_prime_))
      throw std::invalid_argument("pgroup tag inconsistent with order");
  }
}

int FiniteGroup::pow(int a, std::int64_t e) const {
  // a^|G| = identity, so reduce the exponent first
  std::int64_t r = e % order_;
  if (r < 0) r += order_;
  int acc = 0;
  for (std::int64_t i = 0; i < r; ++i) acc = mul(acc, a);
  return acc;
}

int FiniteGroup::element_order(int a) const {
  int acc = a, n = 1;
  while (acc != 0) {
    acc = mul(acc, a);
    ++n;
  }
  return n;
}

// ---------------------------------------------------------------------------
// exchange format

FiniteGroup load_group(const std::string& text) {
  std::istringstream in(text);
  std::string key;
  if (!(in >> key) || key != "order")
    throw std::invalid_argument("group file must start with 'order N'");
  int order = 0;
  if (!(in >> order) || order < 1)
    throw std::invalid_argument("bad group order");
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  for (auto& v : table)
    if (!(in >> v)) throw std::invalid_argument("truncated multiplication table");
  std::string name = "unnamed";
  int pgroup = 0;
  while (in >> key) {
    if (key == "name") {
      if (!(in >> name)) throw std::invalid_argument("missing name value");
    } else if (key == "pgroup") {
      if (!(in >> pgroup)) throw std::invalid_argument("missing pgroup value");
    } else {
      throw std::invalid_argument("unexpected line key '" + key + "'");
    }
  }
  return FiniteGroup(name, order, std::move(table), pgroup);
}

std::string save_group(const FiniteGroup& g) {
  std::ostringstream os;
  os << "order " << g.order() << "\n";
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      if (b) os << ' ';
      os << g.mul(a, b);
    }
    os << "\n";
  }
  os << "name " << g.name() << "\n";
  if (g.pgroup_prime() != 0) os << "pgroup " << g.pgroup_prime() << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// builtin library

namespace {

FiniteGroup cyclic(int n, std::string name, int pgroup) {
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  return FiniteGroup(std::move(name), n, std::move(t), pgroup);
}

// indices a1*n2 + a2, so (0,0) = 0 stays the identity
FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2,
                           std::string name, int pgroup) {
  int n1 = g1.order(), n2 = g2.order(), n = n1 * n2;
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int p = g1.mul(a / n2, b / n2);
      int q = g2.mul(a % n2, b % n2);
      t[a * n + b] = p * n2 + q;
    }
  return FiniteGroup(std::move(name), n, std::move(t), pgroup);
}

FiniteGroup symmetric3() {
  // permutations of {0,1,2} in lexicographic one-line order, identity first
  const std::array<std::array<int, 3>, 6> perms = {{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  auto find = [&](const std::array<int, 3>& p) {
    for (int i = 0; i < 6; ++i)
      if (perms[i] == p) return i;
    return -1;
  };
  std::vector<int> t(36);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      t[a * 6 + b] = find(c);
    }
  return FiniteGroup("S3", 6, std::move(t), 0);
}

// r^i s^j with r^4 = s^2 = e, s r s = r^-1; index i + 4j
FiniteGroup dihedral4() {
  std::vector<int> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int i = a % 4, j = a / 4, i2 = b % 4, j2 = b / 4;
      int i3 = ((j ? i - i2 : i + i2) % 4 + 4) % 4;
      int j3 = (j + j2) % 2;
      t[a * 8 + b] = i3 + 4 * j3;
    }
  return FiniteGroup("D4", 8, std::move(t), 2);
}

// 0..7 = 1, -1, i, -i, j, -j, k, -k
FiniteGroup quaternion8() {
  // axis 0 = 1, 1 = i, 2 = j, 3 = k; sign in {1,-1}
  auto axis = [](int e) { return e / 2; };
  auto sign = [](int e) { return e % 2 ? -1 : 1; };
  auto code = [](int ax, int sg) { return 2 * ax + (sg < 0 ? 1 : 0); };
  std::vector<int> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ax1 = axis(a), ax2 = axis(b);
      int sg = sign(a) * sign(b);
      int ax3;
      if (ax1 == 0) ax3 = ax2;
      else if (ax2 == 0) ax3 = ax1;
      else if (ax1 == ax2) { ax3 = 0; sg = -sg; }                 // i*i = -1
      else {
        ax3 = 6 - ax1 - ax2;                                      // {i,j,k} third axis
        // i*j = k, j*k = i, k*i = j are the positive cycles
        bool positive = (ax2 - ax1 + 3) % 3 == 1;
        if (!positive) sg = -sg;
      }
      t[a * 8 + b] = code(ax3, sg);
    }
  return FiniteGroup("Q8", 8, std::move(t), 2);
}

// upper unitriangular 3x3 over Z/3: (a,b,c) with index 9a + 3b + c and
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b')
FiniteGroup heisenberg27() {
  std::vector<int> t(27 * 27);
  for (int x = 0; x < 27; ++x)
    for (int y = 0; y < 27; ++y) {
      int a = x / 9, b = (x / 3) % 3, c = x % 3;
      int a2 = y / 9, b2 = (y / 3) % 3, c2 = y % 3;
      int a3 = (a + a2) % 3, b3 = (b + b2) % 3, c3 = (c + c2 + a * b2) % 3;
      t[x * 27 + y] = a3 * 9 + b3 * 3 + c3;
    }
  return FiniteGroup("Heis27", 27, std::move(t), 3);
}

std::vector<GroupPtr> make_catalog() {
  std::vector<FiniteGroup> gs;
  gs.push_back(cyclic(1, "trivial", 0));
  gs.push_back(cyclic(2, "Z/2", 2));
  gs.push_back(cyclic(3, "Z/3", 3));
  gs.push_back(cyclic(4, "Z/4", 2));
  gs.push_back(direct_product(cyclic(2, "", 2), cyclic(2, "", 2), "Z/2xZ/2", 2));
  gs.push_back(cyclic(5, "Z/5", 5));
  gs.push_back(symmetric3());
  gs.push_back(cyclic(6, "Z/6", 0));
  gs.push_back(cyclic(8, "Z/8", 2));
  gs.push_back(direct_product(cyclic(2, "", 2), cyclic(4, "", 2), "Z/2xZ/4", 2));
  gs.push_back(dihedral4());
  gs.push_back(quaternion8());
  gs.push_back(direct_product(cyclic(2, "", 2),
                              direct_product(cyclic(2, "", 2), cyclic(2, "", 2), "", 2),
                              "Z/2^3", 2));
  gs.push_back(cyclic(9, "Z/9", 3));
  gs.push_back(direct_product(cyclic(3, "", 3), cyclic(3, "", 3), "Z/3xZ/3", 3));
  gs.push_back(heisenberg27());
  gs.push_back(cyclic(27, "Z/27", 3));
  std::vector<GroupPtr> out;
  out.reserve(gs.size());
  for (auto& g : gs) out.push_back(std::make_shared<FiniteGroup>(std::move(g)));
  return out;
}

}  // namespace

const std::vector<GroupPtr>& builtin_catalog() {
  static const std::vector<GroupPtr> catalog = make_catalog();
  return catalog;
}

GroupPtr find_group(std::string_view name) {
  for (const GroupPtr& g : builtin_catalog())
    if (g->name() == name) return g;
  return nullptr;
}

}  // namespace foxcalc
