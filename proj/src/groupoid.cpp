#include "hopfpar/hpar.hpp"

#include <sstream>

namespace hopfpar {

std::uint32_t GroupoidGamma::act_on_subset(std::size_t g,
                                           std::uint32_t subset) const {
  std::uint32_t out = 0;
  for (std::size_t x = 0; x < group.order(); ++x)
    if (subset & (1u << x)) out |= 1u << group.mul(g, x);
  return out;
}

std::optional<std::size_t> GroupoidGamma::compose(std::size_t i,
                                                  std::size_t j) const {
  const Arrow& a = arrows[i];
  const Arrow& b = arrows[j];
  if (a.subset != act_on_subset(b.element, b.subset)) return std::nullopt;
  return arrow_index(b.subset, group.mul(a.element, b.element));
}

std::size_t GroupoidGamma::inverse_arrow(std::size_t i) const {
  const Arrow& a = arrows[i];
  return arrow_index(act_on_subset(a.element, a.subset),
                     group.inverse(a.element));
}

std::size_t GroupoidGamma::arrow_index(std::uint32_t subset, std::size_t g) const {
  for (std::size_t k = 0; k < arrows.size(); ++k)
    if (arrows[k].subset == subset && arrows[k].element == g) return k;
  throw std::out_of_range("no such arrow in Gamma(G)");
}

std::string GroupoidGamma::arrow_string(std::size_t i) const {
  const Arrow& a = arrows[i];
  std::ostringstream os;
  os << "({";
  bool first = true;
  for (std::size_t x = 0; x < group.order(); ++x)
    if (a.subset & (1u << x)) {
      if (!first) os << " ";
      os << group.name(x);
      first = false;
    }
  os << "}," << group.name(a.element) << ")";
  return os.str();
}

GroupoidGamma gamma_groupoid(const GroupTable& g) {
  std::string why;
  if (!g.is_group(&why))
    throw std::invalid_argument("gamma_groupoid: not a group: " + why);
  GroupoidGamma out;
  out.group = g;
  const std::size_t n = g.order();
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    if (!(subset & 1u)) continue;  // 1 must lie in A
    for (std::size_t gg = 0; gg < n; ++gg)
      if (subset & (1u << g.inverse(gg)))
        out.arrows.push_back({subset, gg});
  }
  // closed-form count 2^{n-1} + (n-1) 2^{n-2}
  const std::size_t expected =
      (n == 1) ? 1 : ((1u << (n - 1)) + (n - 1) * (1u << (n - 2)));
  if (out.arrows.size() != expected)
    throw std::logic_error("Gamma(G) arrow count mismatch with closed form");
  return out;
}

GroupoidAlgebra groupoid_algebra(const GroupoidGamma& g, const FieldSpec& f) {
  GroupoidAlgebra ga;
  ga.groupoid = g;
  const std::size_t n = g.size();
  ga.algebra.field = f;
  ga.algebra.dim = n;
  ga.algebra.mult = Matrix(f, n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (auto k = g.compose(i, j))
        ga.algebra.mult.at(*k, i * n + j) = Scalar::one(f);
  ga.algebra.unit = Matrix(f, n, 1);
  for (std::size_t i = 0; i < n; ++i)
    if (g.arrows[i].element == 0) ga.algebra.unit.at(i, 0) = Scalar::one(f);
  for (std::size_t i = 0; i < n; ++i)
    ga.algebra.labels.push_back(g.arrow_string(i));
  ga.weak_comult = Matrix(f, n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    ga.weak_comult.at(i * n + i, i) = Scalar::one(f);
  ga.weak_counit = Matrix(f, 1, n);
  for (std::size_t i = 0; i < n; ++i)
    ga.weak_counit.at(0, i) = Scalar::one(f);
  ga.weak_antipode = Matrix(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    ga.weak_antipode.at(g.inverse_arrow(i), i) = Scalar::one(f);
  ga.verified = verify_weak_hopf(
      {ga.algebra, ga.weak_comult, ga.weak_counit, ga.weak_antipode});
  require_pass(ga.verified);
  return ga;
}

namespace {

/// f(a, b, coeff) over the tensor terms of Delta(e_i).
template <class F>
void for_each_delta(const Matrix& comult, std::size_t n, std::size_t i, F&& f) {
  for (std::size_t ab = 0; ab < n * n; ++ab) {
    const Scalar& d = comult.at(ab, i);
    if (!d.is_zero()) f(ab / n, ab % n, d);
  }
}

using SparseCols = std::vector<std::vector<std::pair<std::size_t, Scalar>>>;

SparseCols sparse_columns(const Matrix& m) {
  SparseCols cols(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!m.at(r, c).is_zero()) cols[c].emplace_back(r, m.at(r, c));
  return cols;
}

/// componentwise product of two vectors in A^(x)3, by sparse iteration
Matrix triple_tensor_product(const AlgebraData& A, const SparseCols& cols,
                             const Matrix& x, const Matrix& y) {
  const std::size_t n = A.dim;
  Matrix out(A.field, n * n * n, 1);
  for (std::size_t ix = 0; ix < x.rows(); ++ix) {
    const Scalar& cx = x.at(ix, 0);
    if (cx.is_zero()) continue;
    const std::size_t a1 = ix / (n * n), a2 = (ix / n) % n, a3 = ix % n;
    for (std::size_t iy = 0; iy < y.rows(); ++iy) {
      const Scalar& cy = y.at(iy, 0);
      if (cy.is_zero()) continue;
      const std::size_t b1 = iy / (n * n), b2 = (iy / n) % n, b3 = iy % n;
      const Scalar c = cx * cy;
      for (const auto& [r1, c1] : cols[a1 * n + b1])
        for (const auto& [r2, c2] : cols[a2 * n + b2])
          for (const auto& [r3, c3] : cols[a3 * n + b3])
            out.at((r1 * n + r2) * n + r3, 0) += c * c1 * c2 * c3;
    }
  }
  return out;
}

}  // namespace

Report verify_weak_hopf(const WeakHopfData& w) {
  Report rep;
  rep.suite = "weak-hopf";
  const AlgebraData& A = w.algebra;
  const std::size_t n = A.dim;
  const FieldSpec& f = A.field;
  rep.merge(verify_algebra(A), "algebra");
  CoalgebraData co{f, n, w.comult, w.counit, A.labels};
  rep.merge(verify_coalgebra(co), "coalgebra");

  const SparseCols cols = sparse_columns(A.mult);
  const SparseCols dcols = sparse_columns(w.comult);

  // Delta(xy) = Delta(x) Delta(y)
  bool dm = true;
  std::string dmw;
  {
    std::vector<Scalar> scratch(n * n, Scalar::zero(f));
    std::vector<std::size_t> touched;
    for (std::size_t i = 0; i < n && dm; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        for (const auto& [r, c] : cols[i * n + j])
          for (const auto& [ab, d] : dcols[r]) {
            scratch[ab] += c * d;
            touched.push_back(ab);
          }
        for (const auto& [a, c1] : dcols[i])
          for (const auto& [b, c2] : dcols[j]) {
            const std::size_t a1 = a / n, a2 = a % n, b1 = b / n, b2 = b % n;
            for (const auto& [r1, v1] : cols[a1 * n + b1])
              for (const auto& [r2, v2] : cols[a2 * n + b2]) {
                scratch[r1 * n + r2] -= c1 * c2 * v1 * v2;
                touched.push_back(r1 * n + r2);
              }
          }
        bool equal = true;
        for (auto t : touched) {
          if (!scratch[t].is_zero()) equal = false;
          scratch[t] = Scalar::zero(f);
        }
        touched.clear();
        if (!equal) {
          dm = false;
          dmw = "(" + A.label(i) + "," + A.label(j) + ")";
          break;
        }
      }
  }
  rep.add("comult-multiplicative", dm, dmw);

  // weak counit: eps(xyz) = eps(x y1) eps(y2 z) = eps(x y2) eps(y1 z),
  // written against the precomposed row eps o m
  std::vector<Scalar> epsm(n * n, Scalar::zero(f));
  for (std::size_t c = 0; c < n * n; ++c)
    for (const auto& [r, v] : cols[c]) epsm[c] += w.counit.at(0, r) * v;
  bool wc1 = true, wc2 = true;
  std::string wc1w, wc2w;
  for (std::size_t x = 0; x < n && (wc1 || wc2); ++x)
    for (std::size_t y = 0; y < n && (wc1 || wc2); ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Scalar lhs = Scalar::zero(f);
        for (const auto& [r, c] : cols[x * n + y]) lhs += c * epsm[r * n + z];
        Scalar r1 = Scalar::zero(f), r2 = Scalar::zero(f);
        for (const auto& [ab, c] : dcols[y]) {
          const std::size_t y1 = ab / n, y2 = ab % n;
          r1 += c * epsm[x * n + y1] * epsm[y2 * n + z];
          r2 += c * epsm[x * n + y2] * epsm[y1 * n + z];
        }
        std::string wit = "(" + A.label(x) + "," + A.label(y) + "," + A.label(z) + ")";
        if (wc1 && lhs != r1) { wc1 = false; wc1w = wit; }
        if (wc2 && lhs != r2) { wc2 = false; wc2w = wit; }
      }
  rep.add("weak-counit-1", wc1, wc1w);
  rep.add("weak-counit-2", wc2, wc2w);

  // weak unit: (Delta(1)(x)1)(1(x)Delta(1)) = Delta2(1) = (1(x)Delta(1))(Delta(1)(x)1)
  Matrix delta1(f, n * n, 1);
  for (std::size_t r = 0; r < n; ++r) {
    const Scalar& u = A.unit.at(r, 0);
    if (u.is_zero()) continue;
    for (std::size_t ab = 0; ab < n * n; ++ab) {
      const Scalar& d = w.comult.at(ab, r);
      if (!d.is_zero()) delta1.at(ab, 0) += u * d;
    }
  }
  Matrix delta2(f, n * n * n, 1);
  for (std::size_t ab = 0; ab < n * n; ++ab) {
    const Scalar& d = delta1.at(ab, 0);
    if (d.is_zero()) continue;
    const std::size_t a = ab / n, b = ab % n;
    for (std::size_t pq = 0; pq < n * n; ++pq) {
      const Scalar& dd = w.comult.at(pq, a);
      if (!dd.is_zero()) delta2.at(pq * n + b, 0) += d * dd;
    }
  }
  const Matrix d1_u = delta1.kron(A.unit);  // Delta(1) (x) 1
  const Matrix u_d1 = A.unit.kron(delta1);  // 1 (x) Delta(1)
  rep.add("weak-unit-left", triple_tensor_product(A, d1_u, u_d1) == delta2);
  rep.add("weak-unit-right", triple_tensor_product(A, u_d1, d1_u) == delta2);

  // target/source counital maps
  Matrix eps_t(f, n, n), eps_s(f, n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t ab = 0; ab < n * n; ++ab) {
      const Scalar& d = delta1.at(ab, 0);
      if (d.is_zero()) continue;
      const std::size_t a = ab / n, b = ab % n;
      // eps_t(x) = eps(1_(1) x) 1_(2) ; eps_s(x) = 1_(1) eps(x 1_(2))
      const Scalar t = d * eps_of(A.mult.col(a * n + j));
      if (!t.is_zero()) eps_t.at(b, j) += t;
      const Scalar s = d * eps_of(A.mult.col(j * n + b));
      if (!s.is_zero()) eps_s.at(a, j) += s;
    }

  bool ax_t = true, ax_s = true, ax_full = true;
  std::string wt, ws, wf;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix lhs_t(f, n, 1), lhs_s(f, n, 1), lhs_f(f, n, 1);
    for_each_delta(w.comult, n, i, [&](std::size_t a, std::size_t b,
                                       const Scalar& c) {
      lhs_t = lhs_t +
              A.product(A.basis_element(a), w.antipode.col(b)).scaled(c);
      lhs_s = lhs_s +
              A.product(w.antipode.col(a), A.basis_element(b)).scaled(c);
    });
    // S(x1) x2 S(x3)
    for (std::size_t ab = 0; ab < n * n; ++ab) {
      const Scalar& d = w.comult.at(ab, i);
      if (d.is_zero()) continue;
      const std::size_t a = ab / n, rest = ab % n;
      for_each_delta(w.comult, n, rest, [&](std::size_t b, std::size_t c,
                                            const Scalar& dd) {
        lhs_f = lhs_f + A.product(A.product(w.antipode.col(a),
                                            A.basis_element(b)),
                                  w.antipode.col(c))
                            .scaled(d * dd);
      });
    }
    if (ax_t && !(lhs_t == eps_t.col(i))) { ax_t = false; wt = A.label(i); }
    if (ax_s && !(lhs_s == eps_s.col(i))) { ax_s = false; ws = A.label(i); }
    if (ax_full && !(lhs_f == w.antipode.col(i))) { ax_full = false; wf = A.label(i); }
  }
  rep.add("antipode-target", ax_t, wt);
  rep.add("antipode-source", ax_s, ws);
  rep.add("antipode-full", ax_full, wf);
  return rep;
}

}  // namespace hopfpar
