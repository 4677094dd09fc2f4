#include "hopfpar/coradical.hpp"

namespace hopfpar {

namespace {

Scalar trace(const Matrix& m) {
  Scalar t = Scalar::zero(m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return t;
}

/// Radical via the trace bilinear form B(x, y) = tr(L_x L_y); valid in
/// characteristic 0 or p > dim.
Subspace radical_by_trace_form(const AlgebraData& a) {
  const std::size_t n = a.dim;
  Matrix gram(a.field, n, n);
  std::vector<Matrix> left_ops;
  left_ops.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    left_ops.push_back(a.left_op(a.basis_element(i)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      gram.at(i, j) = trace(left_ops[i] * left_ops[j]);
  return kernel(gram);
}

/// Two-sided ideal generated by one element: closure of span{x} under left
/// and right multiplication by basis elements.
Subspace principal_ideal(const AlgebraData& a, const Matrix& x) {
  Subspace ideal(a.dim, x.transpose());
  bool grew = true;
  while (grew) {
    grew = false;
    Matrix rows = ideal.basis();
    for (std::size_t r = 0; r < ideal.dim(); ++r) {
      Matrix v = ideal.basis_column(r);
      for (std::size_t i = 0; i < a.dim; ++i) {
        Matrix e = a.basis_element(i);
        for (const Matrix& w : {a.product(e, v), a.product(v, e)})
          if (!ideal.contains(w)) {
            rows = rows.vstack(w.transpose());
            grew = true;
          }
      }
    }
    if (grew) ideal = Subspace(a.dim, rows);
  }
  return ideal;
}

bool is_nilpotent_subspace(const AlgebraData& a, const Subspace& s) {
  Subspace power = s;
  for (std::size_t k = 0; k < a.dim; ++k) {
    if (power.dim() == 0) return true;
    power = subspace_product(a, power, s);
  }
  return power.dim() == 0;
}

/// Exhaustive radical for small characteristic: sum of all nilpotent
/// principal ideals, enumerating every element of F_p^n.
Subspace radical_exhaustive(const AlgebraData& a) {
  const std::size_t p = a.field.characteristic;
  const std::size_t n = a.dim;
  if (n > 8)
    throw std::invalid_argument(
        "exhaustive radical search limited to dim <= 8 (char p <= dim)");
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  Subspace rad = Subspace::zero(a.field, n);
  for (std::size_t code = 1; code < total; ++code) {
    Matrix x(a.field, n, 1);
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      x.at(i, 0) = Scalar(a.field, static_cast<long>(c % p));
      c /= p;
    }
    if (rad.contains(x)) continue;
    Subspace ideal = principal_ideal(a, x);
    if (is_nilpotent_subspace(a, ideal)) rad = subspace_sum(rad, ideal);
  }
  return rad;
}

void certify_radical(const AlgebraData& a, const Subspace& j, bool recurse) {
  // two-sided ideal
  Subspace full = Subspace::full(a.field, a.dim);
  if (!j.contains(subspace_product(a, j, full)) ||
      !j.contains(subspace_product(a, full, j)))
    throw std::logic_error("radical certificate: output is not an ideal");
  if (!is_nilpotent_subspace(a, j))
    throw std::logic_error("radical certificate: output is not nilpotent");
  if (recurse && j.dim() > 0) {
    AlgebraQuotient q = quotient_algebra(a, j);
    Subspace rad2 = jacobson_radical(q.algebra);
    if (rad2.dim() != 0)
      throw std::logic_error("radical certificate: quotient is not semisimple");
  }
}

}  // namespace

Subspace subspace_product(const AlgebraData& alg, const Subspace& a,
                          const Subspace& b) {
  Matrix rows(alg.field, a.dim() * b.dim(), alg.dim);
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      Matrix p = alg.product(a.basis_column(i), b.basis_column(j));
      for (std::size_t c = 0; c < alg.dim; ++c) rows.at(k, c) = p.at(c, 0);
      ++k;
    }
  return Subspace(alg.dim, rows);
}

AlgebraData dual_algebra(const CoalgebraData& c) {
  AlgebraData a;
  a.field = c.field;
  a.dim = c.dim;
  a.mult = c.comult.transpose();
  a.unit = c.counit.transpose();
  for (std::size_t i = 0; i < c.dim; ++i) a.labels.push_back(c.label(i) + "*");
  return a;
}

Subspace jacobson_radical(const AlgebraData& a) {
  const std::uint64_t p = a.field.characteristic;
  Subspace j = (p == 0 || p > a.dim) ? radical_by_trace_form(a)
                                     : radical_exhaustive(a);
  certify_radical(a, j, /*recurse=*/true);
  return j;
}

AlgebraQuotient quotient_algebra(const AlgebraData& a, const Subspace& ideal) {
  const std::size_t n = a.dim;
  const std::size_t m = n - ideal.dim();
  // projection: reduce modulo the RREF rows of the ideal, then keep the
  // non-pivot coordinates
  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < ideal.dim(); ++r) {
    std::size_t c = 0;
    while (c < n && ideal.basis().at(r, c).is_zero()) ++c;
    pivots.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<std::size_t> kept;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) kept.push_back(c);

  Matrix proj(a.field, m, n);
  for (std::size_t k = 0; k < m; ++k) {
    proj.at(k, kept[k]) = Scalar::one(a.field);
    for (std::size_t r = 0; r < ideal.dim(); ++r)
      proj.at(k, pivots[r]) = -ideal.basis().at(r, kept[k]);
  }
  Matrix sect(a.field, n, m);
  for (std::size_t k = 0; k < m; ++k) sect.at(kept[k], k) = Scalar::one(a.field);

  AlgebraQuotient q;
  q.projection = proj;
  q.section = sect;
  q.algebra.field = a.field;
  q.algebra.dim = m;
  q.algebra.mult = proj * a.mult * sect.kron(sect);
  q.algebra.unit = proj * a.unit;
  for (std::size_t k = 0; k < m; ++k) q.algebra.labels.push_back(a.label(kept[k]));
  return q;
}

Subspace coradical(const CoalgebraData& c) {
  AlgebraData dual = dual_algebra(c);
  Subspace j = jacobson_radical(dual);
  Subspace h0 = j.dim() == 0 ? Subspace::full(c.field, c.dim)
                             : kernel(j.basis());
  // certificate: H_0 is a subcoalgebra
  Subspace h0h0 = subspace_tensor(h0, h0);
  for (std::size_t i = 0; i < h0.dim(); ++i)
    if (!h0h0.contains(c.comult * h0.basis_column(i)))
      throw std::logic_error("coradical certificate: not a subcoalgebra");
  return h0;
}

Filtration coradical_filtration(const CoalgebraData& c) {
  Filtration f;
  const Subspace full = Subspace::full(c.field, c.dim);
  f.stages.push_back(coradical(c));
  while (f.stages.back().dim() < c.dim) {
    const Subspace& prev = f.stages.back();
    Subspace target = subspace_sum(subspace_tensor(full, prev),
                                   subspace_tensor(f.stages.front(), full));
    Subspace next = preimage(c.comult, target);
    if (!next.contains(prev) || next.dim() <= prev.dim())
      throw std::logic_error("coradical filtration failed to grow");
    f.stages.push_back(next);
  }
  f.exhaustive_at = f.stages.size() - 1;
  // coalgebra-filtration certificate: Delta(H_n) <= sum_i H_i (x) H_{n-i}
  for (std::size_t n = 0; n < f.stages.size(); ++n) {
    Subspace sum = Subspace::zero(c.field, c.dim * c.dim);
    for (std::size_t i = 0; i <= n; ++i)
      sum = subspace_sum(sum,
                         subspace_tensor(f.stage(i), f.stage(n - i)));
    for (std::size_t r = 0; r < f.stages[n].dim(); ++r)
      if (!sum.contains(c.comult * f.stages[n].basis_column(r)))
        throw std::logic_error("filtration stage is not coalgebra-filtered");
  }
  return f;
}

bool is_connected(const CoalgebraData& c) { return coradical(c).dim() == 1; }

bool is_cosemisimple(const CoalgebraData& c) {
  return coradical(c).dim() == c.dim;
}

ChevalleyResult chevalley_quotient(const HopfData& h) {
  ChevalleyResult out;
  out.checks.suite = "chevalley";
  Subspace j = jacobson_radical(h.algebra);
  const std::size_t n = h.dim();
  const Subspace full = Subspace::full(h.field(), n);

  // Hopf ideal inclusions
  Subspace mixed = subspace_sum(subspace_tensor(j, full),
                                subspace_tensor(full, j));
  bool delta_ok = true, eps_ok = true, s_ok = true;
  for (std::size_t r = 0; r < j.dim(); ++r) {
    Matrix v = j.basis_column(r);
    if (!mixed.contains(h.comult() * v)) delta_ok = false;
    if (!(h.counit() * v).is_zero()) eps_ok = false;
    if (!j.contains(h.antipode * v)) s_ok = false;
  }
  out.checks.add("comult-into-JH+HJ", delta_ok);
  out.checks.add("counit-kills-J", eps_ok);
  out.checks.add("antipode-preserves-J", s_ok);
  if (!(delta_ok && eps_ok && s_ok)) return out;

  AlgebraQuotient q = quotient_algebra(h.algebra, j);
  HopfData quot;
  quot.algebra = q.algebra;
  quot.coalgebra.field = h.field();
  quot.coalgebra.dim = q.algebra.dim;
  quot.coalgebra.comult = q.projection.kron(q.projection) * h.comult() * q.section;
  quot.coalgebra.counit = h.counit() * q.section;
  quot.coalgebra.labels = q.algebra.labels;
  quot.antipode = q.projection * h.antipode * q.section;
  if (auto inv = quot.antipode.inverse()) quot.antipode_inverse = inv;
  Report hopf_rep = verify_hopf(quot);
  out.checks.merge(hopf_rep, "quotient");
  MorphismData proj = hopf_morphism(h, quot, q.projection);
  Report morph_rep = verify_morphism(proj, MorphismKind::hopf);
  out.checks.merge(morph_rep, "projection");
  if (hopf_rep.passed() && morph_rep.passed())
    out.quotient = ChevalleyQuotient{std::move(quot), std::move(proj)};
  return out;
}

}  // namespace hopfpar
