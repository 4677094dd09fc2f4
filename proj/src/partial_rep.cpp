#include "hopfpar/partial_rep.hpp"

namespace hopfpar {

namespace {

/// Sweedler-style iteration: f(a, b, coeff) over the tensor terms of
/// Delta(e_i).
template <class F>
void for_each_comult(const HopfData& h, std::size_t i, F&& f) {
  const std::size_t n = h.dim();
  for (std::size_t ab = 0; ab < n * n; ++ab) {
    const Scalar& d = h.comult().at(ab, i);
    if (!d.is_zero()) f(ab / n, ab % n, d);
  }
}

}  // namespace

AlgebraData scalar_algebra(const FieldSpec& f) {
  AlgebraData a;
  a.field = f;
  a.dim = 1;
  a.mult = Matrix::identity(f, 1);
  a.unit = Matrix::identity(f, 1);
  a.labels = {"1"};
  return a;
}

AlgebraData endomorphism_algebra(const FieldSpec& f, std::size_t n) {
  AlgebraData a;
  a.field = f;
  a.dim = n * n;
  a.mult = Matrix(f, n * n, n * n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        a.mult.at(i * n + l, (i * n + j) * n * n + (j * n + l)) = Scalar::one(f);
  a.unit = Matrix(f, n * n, 1);
  for (std::size_t i = 0; i < n; ++i) a.unit.at(i * n + i, 0) = Scalar::one(f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a.labels.push_back("E" + std::to_string(i) + std::to_string(j));
  return a;
}

Report check_pr_axioms(const HopfData& H, const AlgebraData& B,
                       const Matrix& pi) {
  if (pi.rows() != B.dim || pi.cols() != H.dim() || H.field() != B.field)
    throw std::invalid_argument("partial representation map has wrong shape");
  Report rep;
  rep.suite = "pr-axioms";
  const std::size_t n = H.dim();
  check_identity(rep, "PR1", pi * H.unit(), B.unit, 1, 1, {});

  const Matrix piS = pi * H.antipode;
  bool ok[4] = {true, true, true, true};  // PR2..PR5
  std::string wit[4];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix lhs2(H.field(), B.dim, 1), rhs2 = lhs2, lhs3 = lhs2, rhs3 = lhs2,
             lhs4 = lhs2, rhs4 = lhs2, lhs5 = lhs2, rhs5 = lhs2;
      // PR2/PR4 expand Delta(e_j); PR3/PR5 expand Delta(e_i)
      for_each_comult(H, j, [&](std::size_t a, std::size_t b, const Scalar& c) {
        const Matrix Sa = H.antipode.col(a), Sb = H.antipode.col(b);
        lhs2 = lhs2 +
               B.product(B.product(pi.col(i), pi.col(a)), piS.col(b)).scaled(c);
        rhs2 = rhs2 +
               B.product(pi * H.mult().col(i * n + a), piS.col(b)).scaled(c);
        lhs4 = lhs4 +
               B.product(B.product(pi.col(i), piS.col(a)), pi.col(b)).scaled(c);
        rhs4 = rhs4 + B.product(pi * H.algebra.product(H.basis_element(i), Sa),
                                pi.col(b))
                          .scaled(c);
      });
      for_each_comult(H, i, [&](std::size_t a, std::size_t b, const Scalar& c) {
        const Matrix Sb = H.antipode.col(b);
        lhs3 = lhs3 +
               B.product(B.product(pi.col(a), piS.col(b)), pi.col(j)).scaled(c);
        rhs3 = rhs3 + B.product(pi.col(a),
                                pi * H.algebra.product(Sb, H.basis_element(j)))
                          .scaled(c);
        lhs5 = lhs5 +
               B.product(B.product(piS.col(a), pi.col(b)), pi.col(j)).scaled(c);
        rhs5 = rhs5 +
               B.product(piS.col(a), pi * H.mult().col(b * n + j)).scaled(c);
      });
      const Matrix* sides[4][2] = {
          {&lhs2, &rhs2}, {&lhs3, &rhs3}, {&lhs4, &rhs4}, {&lhs5, &rhs5}};
      for (int ax = 0; ax < 4; ++ax)
        if (ok[ax] && !(*sides[ax][0] == *sides[ax][1])) {
          ok[ax] = false;
          wit[ax] = "(" + H.label(i) + "," + H.label(j) + ")";
        }
    }
  rep.add("PR2", ok[0], wit[0]);
  rep.add("PR3", ok[1], wit[1]);
  rep.add("PR4", ok[2], wit[2]);
  rep.add("PR5", ok[3], wit[3]);
  rep.add("PR2-PR4-agree", ok[0] == ok[2]);
  rep.add("PR3-PR5-agree", ok[1] == ok[3]);
  return rep;
}

PartialRep make_partial_rep(const HopfData& source, const AlgebraData& target,
                            const Matrix& map) {
  PartialRep r{source, target, map, check_pr_axioms(source, target, map)};
  require_pass(r.verified);
  return r;
}

Matrix epsilon_pi_map(const PartialRep& rep) {
  const std::size_t n = rep.source.dim();
  const Matrix piS = rep.map * rep.source.antipode;
  Matrix e(rep.source.field(), rep.target.dim, n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix col(rep.source.field(), rep.target.dim, 1);
    for_each_comult(rep.source, i,
                    [&](std::size_t a, std::size_t b, const Scalar& c) {
                      col = col + rep.target.product(rep.map.col(a),
                                                     piS.col(b)).scaled(c);
                    });
    for (std::size_t r = 0; r < rep.target.dim; ++r) e.at(r, i) = col.at(r, 0);
  }
  return e;
}

Matrix epsilon_pi(const PartialRep& rep, const Matrix& h) {
  return epsilon_pi_map(rep) * h;
}

bool is_global(const PartialRep& rep) {
  const std::size_t n = rep.source.dim();
  bool multiplicative = rep.map * rep.source.unit() == rep.target.unit;
  for (std::size_t i = 0; i < n && multiplicative; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(rep.map * rep.source.mult().col(i * n + j) ==
            rep.target.product(rep.map.col(i), rep.map.col(j)))) {
        multiplicative = false;
        break;
      }
  const bool eps_trivial =
      epsilon_pi_map(rep) == rep.target.unit * rep.source.counit();
  if (multiplicative != eps_trivial)
    throw std::logic_error(
        "globality criteria disagree: multiplicativity vs epsilon criterion");
  return multiplicative;
}

bool coradical_global_test(const PartialRep& rep, const Filtration& filtration) {
  const Subspace& h0 = filtration.coradical();
  if (h0.ambient_dim() != rep.source.dim())
    throw std::invalid_argument("filtration does not belong to rep source");
  const Matrix eps = epsilon_pi_map(rep);
  const Matrix triv = rep.target.unit * rep.source.counit();
  for (std::size_t i = 0; i < h0.dim(); ++i) {
    Matrix v = h0.basis_column(i);
    if (!(eps * v == triv * v)) return false;
  }
  return true;
}

Subspace vw_extension(const PartialRep& rep, const Subspace& V,
                      const Subspace& W) {
  const std::size_t n = rep.source.dim();
  const Matrix eps = epsilon_pi_map(rep);
  const Matrix triv = rep.target.unit * rep.source.counit();
  auto trivial_on = [&](const Subspace& s) {
    for (std::size_t i = 0; i < s.dim(); ++i) {
      Matrix v = s.basis_column(i);
      if (!(eps * v == triv * v)) return false;
    }
    return true;
  };
  if (!trivial_on(V) || !trivial_on(W))
    throw std::invalid_argument(
        "vw_extension: epsilon^pi is not trivial on V u W");
  const Subspace full = Subspace::full(rep.source.field(), n);
  Subspace out = preimage(rep.source.comult(),
                          subspace_sum(subspace_tensor(full, V),
                                       subspace_tensor(W, full)));
  if (!trivial_on(out))
    throw std::logic_error(
        "vw_extension: conclusion of the extension lemma failed on the output");
  return out;
}

PartialRep cosemisimple_nonglobal_rep(const HopfData& h,
                                      const Subspace& complement) {
  const std::size_t n = h.dim();
  const FieldSpec& f = h.field();
  if (!is_cosemisimple(h.coalgebra))
    throw std::invalid_argument("cosemisimple_nonglobal_rep: H not cosemisimple");
  if (!h.antipode_inverse && !h.antipode.inverse())
    throw std::invalid_argument(
        "cosemisimple_nonglobal_rep: antipode not invertible");
  if (complement.ambient_dim() != n || complement.dim() + 1 != n)
    throw std::invalid_argument("complement must have codimension 1");
  if (complement.contains(h.unit()))
    throw std::invalid_argument("complement contains the unit");
  Subspace cc = subspace_tensor(complement, complement);
  for (std::size_t i = 0; i < complement.dim(); ++i) {
    Matrix v = complement.basis_column(i);
    if (!cc.contains(h.comult() * v))
      throw std::invalid_argument("complement is not a subcoalgebra");
    if (!complement.contains(h.antipode * v))
      throw std::invalid_argument("complement is not antipode-stable");
  }
  // the functional with kernel C and value 1 on the unit
  Subspace ann = kernel(complement.basis());
  if (ann.dim() != 1) throw std::logic_error("complement annihilator not a line");
  Matrix phi = ann.basis();  // 1 x n
  Scalar at_unit = (phi * h.unit()).at(0, 0);
  phi = phi.scaled(at_unit.inverse());

  // the counit must not vanish identically on C, else pi would be global
  bool counit_hits_c = false;
  for (std::size_t i = 0; i < complement.dim(); ++i)
    if (!(h.counit() * complement.basis_column(i)).is_zero())
      counit_hits_c = true;
  if (!counit_hits_c)
    throw std::invalid_argument(
        "no counit-nonvanishing element in the complement");

  PartialRep rep = make_partial_rep(h, scalar_algebra(f), phi);
  if (is_global(rep))
    throw std::logic_error("rank-one construction unexpectedly global");
  return rep;
}

PartialRep restrict_along(const PartialRep& rep, const MorphismData& phi,
                          const HopfData& new_source) {
  Report morph = verify_morphism(phi, MorphismKind::hopf);
  if (!morph.passed())
    throw std::invalid_argument("restrict_along: phi is not a Hopf morphism");
  if (phi.map.rows() != rep.source.dim() || phi.map.cols() != new_source.dim())
    throw std::invalid_argument("restrict_along: phi shape mismatch");
  return make_partial_rep(new_source, rep.target, rep.map * phi.map);
}

Report check_partial_action(const HopfData& h, const AlgebraData& a,
                            const Matrix& action) {
  const FieldSpec& f = h.field();
  const std::size_t n = h.dim(), m = a.dim;
  if (action.rows() != m || action.cols() != n * m || a.field != f)
    throw std::invalid_argument("partial action matrix has wrong shape");
  Report rep;
  rep.suite = "partial-action";
  auto act_basis = [&](std::size_t i, std::size_t j) {
    return action.col(i * m + j);
  };
  auto act_vec = [&](const Matrix& hv, const Matrix& av) {
    Matrix out(f, m, 1);
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar& hc = hv.at(i, 0);
      if (hc.is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        const Scalar& ac = av.at(j, 0);
        if (!ac.is_zero()) out = out + act_basis(i, j).scaled(hc * ac);
      }
    }
    return out;
  };

  bool pa1 = true;
  std::string w1;
  for (std::size_t j = 0; j < m; ++j)
    if (!(act_vec(h.unit(), a.basis_element(j)) == a.basis_element(j))) {
      pa1 = false;
      w1 = a.label(j);
      break;
    }
  rep.add("PA1", pa1, w1);

  bool pa2 = true;
  std::string w2;
  for (std::size_t i = 0; i < n && pa2; ++i)
    for (std::size_t j = 0; j < m && pa2; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        Matrix lhs = act_vec(h.basis_element(i), a.mult.col(j * m + k));
        Matrix rhs(f, m, 1);
        for (std::size_t pq = 0; pq < n * n; ++pq) {
          const Scalar& c = h.comult().at(pq, i);
          if (c.is_zero()) continue;
          rhs = rhs + a.product(act_basis(pq / n, j), act_basis(pq % n, k))
                          .scaled(c);
        }
        if (!(lhs == rhs)) {
          pa2 = false;
          w2 = "(" + h.label(i) + "," + a.label(j) + "," + a.label(k) + ")";
          break;
        }
      }
  rep.add("PA2", pa2, w2);

  bool pa3 = true, pa4 = true;
  std::string w3, w4;
  for (std::size_t i = 0; i < n && (pa3 || pa4); ++i)
    for (std::size_t j = 0; j < n && (pa3 || pa4); ++j)
      for (std::size_t k = 0; k < m; ++k) {
        Matrix lhs = act_vec(h.basis_element(i), act_basis(j, k));
        Matrix rhs3(f, m, 1), rhs4(f, m, 1);
        for (std::size_t pq = 0; pq < n * n; ++pq) {
          const Scalar& c = h.comult().at(pq, i);
          if (c.is_zero()) continue;
          const std::size_t p = pq / n, q = pq % n;
          const Matrix up = act_vec(h.basis_element(p), a.unit);
          const Matrix uq = act_vec(h.basis_element(q), a.unit);
          const Matrix wq = act_vec(h.mult().col(q * n + j), a.basis_element(k));
          const Matrix wp = act_vec(h.mult().col(p * n + j), a.basis_element(k));
          rhs3 = rhs3 + a.product(up, wq).scaled(c);
          rhs4 = rhs4 + a.product(wp, uq).scaled(c);
        }
        std::string wit =
            "(" + h.label(i) + "," + h.label(j) + "," + a.label(k) + ")";
        if (pa3 && !(lhs == rhs3)) { pa3 = false; w3 = wit; }
        if (pa4 && !(lhs == rhs4)) { pa4 = false; w4 = wit; }
      }
  rep.add("PA3", pa3, w3);
  rep.add("PA4-symmetric", pa4, w4);
  return rep;
}

}  // namespace hopfpar
