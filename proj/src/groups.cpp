#include "hopfpar/groups.hpp"

#include <array>
#include <algorithm>

namespace hopfpar {

std::size_t GroupTable::inverse(std::size_t g) const {
  for (std::size_t h = 0; h < order(); ++h)
    if (mul(g, h) == 0) return h;
  throw std::invalid_argument("group element without inverse");
}

bool GroupTable::is_group(std::string* why) const {
  const std::size_t n = order();
  auto fail = [&](const std::string& w) {
    if (why) *why = w;
    return false;
  };
  if (n == 0) return fail("empty table");
  for (std::size_t g = 0; g < n; ++g) {
    if (table[g].size() != n) return fail("ragged table");
    for (std::size_t h = 0; h < n; ++h)
      if (table[g][h] >= n) return fail("entry out of range");
  }
  for (std::size_t g = 0; g < n; ++g)
    if (mul(0, g) != g || mul(g, 0) != g)
      return fail("element 0 is not an identity");
  for (std::size_t g = 0; g < n; ++g) {
    bool has_inv = false;
    for (std::size_t h = 0; h < n; ++h)
      if (mul(g, h) == 0 && mul(h, g) == 0) has_inv = true;
    if (!has_inv) return fail("missing inverse for element " + std::to_string(g));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          return fail("associativity fails at (" + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c) + ")");
  return true;
}

GroupTable GroupTable::trivial() {
  GroupTable g;
  g.table = {{0}};
  g.names = {"e"};
  return g;
}

GroupTable GroupTable::cyclic(std::size_t n) {
  GroupTable g;
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
  g.names.push_back("e");
  for (std::size_t a = 1; a < n; ++a)
    g.names.push_back(a == 1 ? "g" : "g" + std::to_string(a));
  return g;
}

GroupTable GroupTable::direct_product(const GroupTable& a, const GroupTable& b) {
  GroupTable g;
  const std::size_t na = a.order(), nb = b.order();
  g.table.assign(na * nb, std::vector<std::size_t>(na * nb));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          g.table[i * nb + j][k * nb + l] = a.mul(i, k) * nb + b.mul(j, l);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      g.names.push_back("(" + a.name(i) + "," + b.name(j) + ")");
  return g;
}

GroupTable GroupTable::symmetric3() {
  // permutations of {0,1,2}: e, r=(012), r2, s=(01), sr, sr2
  std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  auto compose = [&](int x, int y) {  // x after y
    std::array<int, 3> c{};
    for (int i = 0; i < 3; ++i) c[i] = perms[x][perms[y][i]];
    for (std::size_t k = 0; k < perms.size(); ++k)
      if (perms[k] == c) return static_cast<std::size_t>(k);
    throw std::logic_error("S3 composition escaped the table");
  };
  GroupTable g;
  g.table.assign(6, std::vector<std::size_t>(6));
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y) g.table[x][y] = compose(x, y);
  g.names = {"e", "r", "r2", "s", "sr", "sr2"};
  return g;
}

GroupTable GroupTable::dihedral4() {
  // <r, s | r^4 = s^2 = e, srs = r^-1>, elements r^i s^j, j in {0,1}
  GroupTable g;
  g.table.assign(8, std::vector<std::size_t>(8));
  auto enc = [](std::size_t i, std::size_t j) { return i + 4 * j; };
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          // (r^i s^j)(r^k s^l) = r^{i + k*(-1)^j} s^{j+l}
          std::size_t exp = j ? (i + 4 - k % 4) % 4 : (i + k) % 4;
          g.table[enc(i, j)][enc(k, l)] = enc(exp, (j + l) % 2);
        }
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < 4; ++i) {
      std::string nm = i ? "r" + std::to_string(i) : "";
      if (j) nm += "s";
      g.names.push_back(nm.empty() ? "e" : nm);
    }
  return g;
}

GroupTable GroupTable::quaternion8() {
  // {1, -1, i, -i, j, -j, k, -k} encoded 0..7 as (unit, sign)
  // unit: 0=1, 1=i, 2=j, 3=k ; index = unit*2 + (sign<0)
  auto mulq = [](int a, int b, int& sign) {
    // quaternion unit multiplication
    static const int tbl[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    sign = sgn[a][b];
    return tbl[a][b];
  };
  GroupTable g;
  g.table.assign(8, std::vector<std::size_t>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int s;
      int u = mulq(a / 2, b / 2, s);
      int sign = ((a % 2) ^ (b % 2)) ? -s : s;
      g.table[a][b] = static_cast<std::size_t>(u * 2 + (sign < 0 ? 1 : 0));
    }
  g.names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return g;
}

HopfData group_algebra(const GroupTable& g, const FieldSpec& f) {
  std::string why;
  if (!g.is_group(&why))
    throw std::invalid_argument("group_algebra: table is not a group: " + why);
  const std::size_t n = g.order();
  HopfData h;
  h.algebra.field = f;
  h.algebra.dim = n;
  h.algebra.mult = Matrix(f, n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      h.algebra.mult.at(g.mul(a, b), a * n + b) = Scalar::one(f);
  h.algebra.unit = Matrix(f, n, 1);
  h.algebra.unit.at(0, 0) = Scalar::one(f);
  h.coalgebra.field = f;
  h.coalgebra.dim = n;
  h.coalgebra.comult = Matrix(f, n * n, n);
  for (std::size_t a = 0; a < n; ++a)
    h.coalgebra.comult.at(a * n + a, a) = Scalar::one(f);
  h.coalgebra.counit = Matrix(f, 1, n);
  for (std::size_t a = 0; a < n; ++a)
    h.coalgebra.counit.at(0, a) = Scalar::one(f);
  h.antipode = Matrix(f, n, n);
  for (std::size_t a = 0; a < n; ++a)
    h.antipode.at(g.inverse(a), a) = Scalar::one(f);
  h.antipode_inverse = h.antipode;  // S^2 = id on group algebras
  for (std::size_t a = 0; a < n; ++a) h.algebra.labels.push_back(g.name(a));
  h.coalgebra.labels = h.algebra.labels;
  require_pass(verify_hopf(h));
  return h;
}

HopfData dual_group_algebra(const GroupTable& g, const FieldSpec& f) {
  return dual_hopf(group_algebra(g, f));
}

HopfData sweedler_h4(const FieldSpec& f) {
  if (f.characteristic == 2)
    throw std::invalid_argument("Sweedler H4 requires characteristic != 2");
  // basis order: 1, g, x, gx
  const std::size_t n = 4;
  HopfData h;
  h.algebra.field = f;
  h.algebra.dim = n;
  h.algebra.labels = {"1", "g", "x", "gx"};
  h.coalgebra.field = f;
  h.coalgebra.dim = n;
  h.coalgebra.labels = h.algebra.labels;
  h.algebra.mult = Matrix(f, n, n * n);
  auto set = [&](std::size_t a, std::size_t b, std::size_t c, long coeff) {
    h.algebra.mult.at(c, a * n + b) = Scalar(f, coeff);
  };
  // g^2 = 1, x^2 = 0, xg = -gx
  set(0, 0, 0, 1); set(0, 1, 1, 1); set(0, 2, 2, 1); set(0, 3, 3, 1);
  set(1, 0, 1, 1); set(1, 1, 0, 1); set(1, 2, 3, 1); set(1, 3, 2, 1);
  set(2, 0, 2, 1); set(2, 1, 3, -1);  // x*x = 0
  set(3, 0, 3, 1); set(3, 1, 2, -1);  // gx*x = 0
  // x*gx = (xg)x = -gx^2 = 0 and gx*gx = g(xg)x = -x^2 = 0: stay zero
  h.algebra.unit = Matrix(f, n, 1);
  h.algebra.unit.at(0, 0) = Scalar::one(f);
  h.coalgebra.comult = Matrix(f, n * n, n);
  auto cm = [&](std::size_t src, std::size_t a, std::size_t b, long coeff) {
    h.coalgebra.comult.at(a * n + b, src) = Scalar(f, coeff);
  };
  cm(0, 0, 0, 1);             // Delta 1 = 1(x)1
  cm(1, 1, 1, 1);             // Delta g = g(x)g
  cm(2, 2, 0, 1); cm(2, 1, 2, 1);   // Delta x = x(x)1 + g(x)x
  cm(3, 3, 1, 1); cm(3, 0, 3, 1);   // Delta gx = gx(x)g + 1(x)gx
  h.coalgebra.counit = Matrix(f, 1, n);
  h.coalgebra.counit.at(0, 0) = Scalar::one(f);
  h.coalgebra.counit.at(0, 1) = Scalar::one(f);
  h.antipode = Matrix(f, n, n);
  // S(1)=1, S(g)=g, S(x)=-gx, S(gx) = S(x)S(g) = (-gx)g = x
  h.antipode.at(0, 0) = Scalar::one(f);
  h.antipode.at(1, 1) = Scalar::one(f);
  h.antipode.at(3, 2) = Scalar(f, -1);
  h.antipode.at(2, 3) = Scalar::one(f);
  require_pass(verify_hopf(h));
  Matrix s2 = h.antipode * h.antipode;
  h.antipode_inverse = s2 * h.antipode;  // S^4 = id
  require_pass(verify_antipode(h));
  return h;
}

}  // namespace hopfpar
