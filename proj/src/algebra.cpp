#include "hopfpar/algebra.hpp"

#include <sstream>

namespace hopfpar {

std::string tuple_witness(std::size_t flat, std::size_t arity, std::size_t dim,
                          const std::vector<std::string>& labels) {
  std::vector<std::size_t> idx(arity);
  for (std::size_t k = arity; k-- > 0;) {
    idx[k] = flat % dim;
    flat /= dim;
  }
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < arity; ++k) {
    if (k) os << ",";
    os << (idx[k] < labels.size() ? labels[idx[k]] : "b" + std::to_string(idx[k]));
  }
  os << ")";
  return os.str();
}

void check_identity(Report& rep, const std::string& id, const Matrix& lhs,
                    const Matrix& rhs, std::size_t arity, std::size_t dim,
                    const std::vector<std::string>& labels) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    rep.add(id, false, "shape mismatch");
    return;
  }
  for (std::size_t c = 0; c < lhs.cols(); ++c)
    for (std::size_t r = 0; r < lhs.rows(); ++r)
      if (lhs.at(r, c) != rhs.at(r, c)) {
        rep.add(id, false, tuple_witness(c, arity, dim, labels),
                lhs.at(r, c).str() + " vs " + rhs.at(r, c).str());
        return;
      }
  rep.add(id, true);
}

Matrix AlgebraData::product(const Matrix& x, const Matrix& y) const {
  if (x.rows() != dim || y.rows() != dim)
    throw std::invalid_argument("product: element size mismatch");
  Matrix out(field, dim, 1);
  for (std::size_t a = 0; a < dim; ++a) {
    const Scalar& xa = x.at(a, 0);
    if (xa.is_zero()) continue;
    for (std::size_t b = 0; b < dim; ++b) {
      const Scalar& yb = y.at(b, 0);
      if (yb.is_zero()) continue;
      const Scalar coeff = xa * yb;
      for (std::size_t r = 0; r < dim; ++r) {
        const Scalar& c = mult.at(r, a * dim + b);
        if (!c.is_zero()) out.at(r, 0) += coeff * c;
      }
    }
  }
  return out;
}

MorphismData algebra_morphism(const AlgebraData& src, const AlgebraData& dst,
                              const Matrix& map) {
  MorphismData m;
  m.map = map;
  m.source_alg = src;
  m.target_alg = dst;
  return m;
}

MorphismData hopf_morphism(const HopfData& src, const HopfData& dst,
                           const Matrix& map) {
  MorphismData m;
  m.map = map;
  m.source_alg = src.algebra;
  m.target_alg = dst.algebra;
  m.source_co = src.coalgebra;
  m.target_co = dst.coalgebra;
  return m;
}

Report verify_algebra(const AlgebraData& a) {
  Report rep;
  rep.suite = "algebra";
  const std::size_t n = a.dim;
  if (a.mult.rows() != n || a.mult.cols() != n * n || a.unit.rows() != n)
    throw std::invalid_argument("algebra data has inconsistent dimensions");
  // sparse columns of the multiplication table; the associativity sweep is
  // n^3 products and would drown in dense column copies otherwise
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols(n * n);
  for (std::size_t c = 0; c < n * n; ++c)
    for (std::size_t r = 0; r < n; ++r)
      if (!a.mult.at(r, c).is_zero()) cols[c].emplace_back(r, a.mult.at(r, c));

  std::vector<Scalar> lhs(n, Scalar::zero(a.field)), rhs = lhs;
  std::vector<std::size_t> touched_l, touched_r;
  bool assoc = true;
  std::string witness;
  for (std::size_t i = 0; i < n && assoc; ++i)
    for (std::size_t j = 0; j < n && assoc; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        for (const auto& [r, c] : cols[i * n + j])
          for (const auto& [r2, c2] : cols[r * n + k]) {
            lhs[r2] += c * c2;
            touched_l.push_back(r2);
          }
        for (const auto& [r, c] : cols[j * n + k])
          for (const auto& [r2, c2] : cols[i * n + r]) {
            rhs[r2] += c * c2;
            touched_r.push_back(r2);
          }
        bool equal = true;
        for (auto t : touched_l)
          if (lhs[t] != rhs[t]) equal = false;
        for (auto t : touched_r)
          if (lhs[t] != rhs[t]) equal = false;
        for (auto t : touched_l) lhs[t] = Scalar::zero(a.field);
        for (auto t : touched_r) rhs[t] = Scalar::zero(a.field);
        touched_l.clear();
        touched_r.clear();
        if (!equal) {
          assoc = false;
          witness = "(" + a.label(i) + "," + a.label(j) + "," + a.label(k) + ")";
          break;
        }
      }
  rep.add("associativity", assoc, witness);
  bool left = true, right = true;
  std::string lw, rw;
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix e = a.basis_element(i);
    if (left && !(a.product(a.unit, e) == e)) { left = false; lw = a.label(i); }
    if (right && !(a.product(e, a.unit) == e)) { right = false; rw = a.label(i); }
  }
  rep.add("left-unit", left, lw);
  rep.add("right-unit", right, rw);
  return rep;
}

Report verify_coalgebra(const CoalgebraData& c) {
  Report rep;
  rep.suite = "coalgebra";
  const std::size_t n = c.dim;
  if (c.comult.rows() != n * n || c.comult.cols() != n || c.counit.cols() != n)
    throw std::invalid_argument("coalgebra data has inconsistent dimensions");
  bool coassoc = true, lcounit = true, rcounit = true;
  std::string cw, lw, rw;
  for (std::size_t i = 0; i < n; ++i) {
    // expand both (Delta (x) id)Delta and (id (x) Delta)Delta of e_i
    Matrix lhs(c.field, n * n * n, 1), rhs(c.field, n * n * n, 1);
    Matrix lcu(c.field, n, 1), rcu(c.field, n, 1);
    for (std::size_t ab = 0; ab < n * n; ++ab) {
      const Scalar& d = c.comult.at(ab, i);
      if (d.is_zero()) continue;
      const std::size_t a = ab / n, b = ab % n;
      for (std::size_t pq = 0; pq < n * n; ++pq) {
        const Scalar& da = c.comult.at(pq, a);
        if (!da.is_zero()) lhs.at(pq * n + b, 0) += d * da;
        const Scalar& db = c.comult.at(pq, b);
        if (!db.is_zero()) rhs.at(a * n * n + pq, 0) += d * db;
      }
      lcu.at(b, 0) += d * c.counit.at(0, a);
      rcu.at(a, 0) += d * c.counit.at(0, b);
    }
    if (coassoc && !(lhs == rhs)) { coassoc = false; cw = c.label(i); }
    Matrix e(c.field, n, 1);
    e.at(i, 0) = Scalar::one(c.field);
    if (lcounit && !(lcu == e)) { lcounit = false; lw = c.label(i); }
    if (rcounit && !(rcu == e)) { rcounit = false; rw = c.label(i); }
  }
  rep.add("coassociativity", coassoc, cw);
  rep.add("left-counit", lcounit, lw);
  rep.add("right-counit", rcounit, rw);
  return rep;
}

namespace {

/// Delta(x) for a sparse iteration: calls f(a, b, coeff) per tensor term.
template <class F>
void for_each_comult(const CoalgebraData& c, std::size_t i, F&& f) {
  const std::size_t n = c.dim;
  for (std::size_t ab = 0; ab < n * n; ++ab) {
    const Scalar& d = c.comult.at(ab, i);
    if (!d.is_zero()) f(ab / n, ab % n, d);
  }
}

}  // namespace

Report verify_bialgebra(const HopfData& h) {
  Report rep;
  rep.suite = "bialgebra";
  const std::size_t n = h.dim();
  if (h.coalgebra.dim != n || h.coalgebra.field != h.field())
    throw std::invalid_argument("bialgebra components disagree on dim/field");
  const FieldSpec& f = h.field();

  bool cm = true, cu = true, em = true;
  std::string cmw, emw;
  for (std::size_t i = 0; i < n && (cm || em); ++i)
    for (std::size_t j = 0; j < n && (cm || em); ++j) {
      const Matrix prod = h.mult().col(i * n + j);
      // Delta(e_i e_j)
      Matrix lhs(f, n * n, 1);
      for (std::size_t r = 0; r < n; ++r) {
        const Scalar& c = prod.at(r, 0);
        if (c.is_zero()) continue;
        for (std::size_t ab = 0; ab < n * n; ++ab) {
          const Scalar& d = h.comult().at(ab, r);
          if (!d.is_zero()) lhs.at(ab, 0) += c * d;
        }
      }
      // Delta(e_i) Delta(e_j) in the tensor-square algebra
      Matrix rhs(f, n * n, 1);
      Scalar eps_lhs = Scalar::zero(f), eps_rhs = Scalar::zero(f);
      for_each_comult(h.coalgebra, i, [&](std::size_t a1, std::size_t a2,
                                          const Scalar& c1) {
        for_each_comult(h.coalgebra, j, [&](std::size_t b1, std::size_t b2,
                                            const Scalar& c2) {
          const Scalar cc = c1 * c2;
          const Matrix p1 = h.mult().col(a1 * n + b1);
          const Matrix p2 = h.mult().col(a2 * n + b2);
          for (std::size_t r1 = 0; r1 < n; ++r1) {
            const Scalar& v1 = p1.at(r1, 0);
            if (v1.is_zero()) continue;
            for (std::size_t r2 = 0; r2 < n; ++r2) {
              const Scalar& v2 = p2.at(r2, 0);
              if (!v2.is_zero()) rhs.at(r1 * n + r2, 0) += cc * v1 * v2;
            }
          }
        });
      });
      if (cm && !(lhs == rhs)) {
        cm = false;
        cmw = "(" + h.label(i) + "," + h.label(j) + ")";
      }
      for (std::size_t r = 0; r < n; ++r) eps_lhs += prod.at(r, 0) * h.counit().at(0, r);
      eps_rhs = h.counit().at(0, i) * h.counit().at(0, j);
      if (em && eps_lhs != eps_rhs) {
        em = false;
        emw = "(" + h.label(i) + "," + h.label(j) + ")";
      }
    }
  rep.add("comult-multiplicative", cm, cmw);
  rep.add("counit-multiplicative", em, emw);

  Matrix d1(f, n * n, 1);
  for (std::size_t r = 0; r < n; ++r) {
    const Scalar& u = h.unit().at(r, 0);
    if (u.is_zero()) continue;
    for (std::size_t ab = 0; ab < n * n; ++ab) {
      const Scalar& d = h.comult().at(ab, r);
      if (!d.is_zero()) d1.at(ab, 0) += u * d;
    }
  }
  cu = d1 == h.unit().kron(h.unit());
  rep.add("comult-unital", cu);
  rep.add("counit-unital", (h.counit() * h.unit()).at(0, 0).is_one());
  return rep;
}

Report verify_antipode(const HopfData& h) {
  Report rep;
  rep.suite = "antipode";
  const std::size_t n = h.dim();
  const FieldSpec& f = h.field();
  bool left = true, right = true;
  std::string lw, rw;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix lhs(f, n, 1), rhs(f, n, 1);
    for_each_comult(h.coalgebra, i, [&](std::size_t a, std::size_t b,
                                        const Scalar& c) {
      lhs = lhs + h.algebra.product(h.antipode.col(a), h.basis_element(b)).scaled(c);
      rhs = rhs + h.algebra.product(h.basis_element(a), h.antipode.col(b)).scaled(c);
    });
    const Matrix target = h.unit().scaled(h.counit().at(0, i));
    if (left && !(lhs == target)) { left = false; lw = h.label(i); }
    if (right && !(rhs == target)) { right = false; rw = h.label(i); }
  }
  rep.add("antipode-left", left, lw);
  rep.add("antipode-right", right, rw);
  if (h.antipode_inverse) {
    const Matrix id = Matrix::identity(f, n);
    check_identity(rep, "antipode-inverse", *h.antipode_inverse * h.antipode, id,
                   1, n, h.algebra.labels);
    check_identity(rep, "inverse-antipode", h.antipode * *h.antipode_inverse, id,
                   1, n, h.algebra.labels);
  }
  return rep;
}

Report verify_hopf(const HopfData& h) {
  Report rep;
  rep.suite = "hopf";
  rep.merge(verify_algebra(h.algebra), "algebra");
  rep.merge(verify_coalgebra(h.coalgebra), "coalgebra");
  rep.merge(verify_bialgebra(h), "bialgebra");
  rep.merge(verify_antipode(h), "antipode");
  return rep;
}

Report verify_morphism(const MorphismData& m, MorphismKind kind) {
  Report rep;
  rep.suite = "morphism";
  const bool want_alg = kind != MorphismKind::coalgebra;
  const bool want_co = kind != MorphismKind::algebra;
  if (want_alg) {
    if (!m.source_alg || !m.target_alg)
      throw std::invalid_argument("morphism lacks algebra structures");
    const AlgebraData& A = *m.source_alg;
    const AlgebraData& B = *m.target_alg;
    if (m.map.cols() != A.dim || m.map.rows() != B.dim)
      throw std::invalid_argument("morphism map has wrong shape");
    bool multiplicative = true;
    std::string w;
    for (std::size_t i = 0; i < A.dim && multiplicative; ++i)
      for (std::size_t j = 0; j < A.dim; ++j) {
        if (!(m.map * A.mult.col(i * A.dim + j) ==
              B.product(m.map.col(i), m.map.col(j)))) {
          multiplicative = false;
          w = "(" + A.label(i) + "," + A.label(j) + ")";
          break;
        }
      }
    rep.add("multiplicative", multiplicative, w);
    check_identity(rep, "unital", m.map * A.unit, B.unit, 1, 1, {});
  }
  if (want_co) {
    if (!m.source_co || !m.target_co)
      throw std::invalid_argument("morphism lacks coalgebra structures");
    const CoalgebraData& C = *m.source_co;
    const CoalgebraData& D = *m.target_co;
    bool comultiplicative = true, counital = true;
    std::string cw, ew;
    for (std::size_t i = 0; i < C.dim; ++i) {
      Matrix lhs(D.field, D.dim * D.dim, 1);
      const Matrix fi = m.map.col(i);
      for (std::size_t r = 0; r < D.dim; ++r) {
        const Scalar& c = fi.at(r, 0);
        if (c.is_zero()) continue;
        for (std::size_t ab = 0; ab < D.dim * D.dim; ++ab) {
          const Scalar& d = D.comult.at(ab, r);
          if (!d.is_zero()) lhs.at(ab, 0) += c * d;
        }
      }
      Matrix rhs(D.field, D.dim * D.dim, 1);
      for_each_comult(C, i, [&](std::size_t a, std::size_t b, const Scalar& c) {
        const Matrix fa = m.map.col(a), fb = m.map.col(b);
        for (std::size_t r1 = 0; r1 < D.dim; ++r1) {
          const Scalar& v1 = fa.at(r1, 0);
          if (v1.is_zero()) continue;
          for (std::size_t r2 = 0; r2 < D.dim; ++r2) {
            const Scalar& v2 = fb.at(r2, 0);
            if (!v2.is_zero()) rhs.at(r1 * D.dim + r2, 0) += c * v1 * v2;
          }
        }
      });
      if (comultiplicative && !(lhs == rhs)) {
        comultiplicative = false;
        cw = C.label(i);
      }
      if (counital && !((D.counit * fi).at(0, 0) == C.counit.at(0, i))) {
        counital = false;
        ew = C.label(i);
      }
    }
    rep.add("comultiplicative", comultiplicative, cw);
    rep.add("counital", counital, ew);
  }
  return rep;
}

void require_pass(const Report& r) {
  if (r.passed()) return;
  std::string what = "verification failed:";
  for (const auto& it : r.items)
    if (it.status == CheckStatus::fail)
      what += " " + it.id + (it.witness.empty() ? "" : " at " + it.witness);
  throw std::runtime_error(what);
}

HopfData dual_hopf(const HopfData& h) {
  HopfData d;
  d.algebra.field = h.field();
  d.algebra.dim = h.dim();
  d.algebra.mult = h.comult().transpose();
  d.algebra.unit = h.counit().transpose();
  d.coalgebra.field = h.field();
  d.coalgebra.dim = h.dim();
  d.coalgebra.comult = h.mult().transpose();
  d.coalgebra.counit = h.unit().transpose();
  d.antipode = h.antipode.transpose();
  if (h.antipode_inverse)
    d.antipode_inverse = h.antipode_inverse->transpose();
  else if (auto inv = h.antipode.inverse())
    d.antipode_inverse = inv->transpose();
  d.algebra.labels.reserve(h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    d.algebra.labels.push_back("p(" + h.label(i) + ")");
  d.coalgebra.labels = d.algebra.labels;
  return d;
}

HopfData opposite_hopf(const HopfData& h) {
  HopfData o = h;
  o.algebra.mult = h.mult() * Matrix::flip(h.field(), h.dim(), h.dim());
  if (!h.antipode_inverse)
    throw std::invalid_argument(
        "opposite Hopf algebra needs an invertible antipode");
  o.antipode = *h.antipode_inverse;
  o.antipode_inverse = h.antipode;
  return o;
}

HopfData tensor_bialgebra(const HopfData& a, const HopfData& b) {
  if (a.field() != b.field())
    throw std::invalid_argument("tensor_bialgebra: field mismatch");
  const FieldSpec f = a.field();
  const std::size_t na = a.dim(), nb = b.dim();
  const Matrix ida = Matrix::identity(f, na), idb = Matrix::identity(f, nb);
  HopfData t;
  t.algebra.field = f;
  t.algebra.dim = na * nb;
  t.algebra.mult =
      a.mult().kron(b.mult()) * ida.kron(Matrix::flip(f, nb, na)).kron(idb);
  t.algebra.unit = a.unit().kron(b.unit());
  t.coalgebra.field = f;
  t.coalgebra.dim = na * nb;
  t.coalgebra.comult =
      ida.kron(Matrix::flip(f, na, nb)).kron(idb) * a.comult().kron(b.comult());
  t.coalgebra.counit = a.counit().kron(b.counit());
  t.antipode = a.antipode.kron(b.antipode);
  if (a.antipode_inverse && b.antipode_inverse)
    t.antipode_inverse = a.antipode_inverse->kron(*b.antipode_inverse);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      t.algebra.labels.push_back(a.label(i) + "(x)" + b.label(j));
  t.coalgebra.labels = t.algebra.labels;
  return t;
}

std::pair<MorphismData, MorphismData> tensor_inclusions(const HopfData& a,
                                                        const HopfData& b) {
  HopfData t = tensor_bialgebra(a, b);
  Matrix ia = Matrix::identity(a.field(), a.dim()).kron(b.unit());
  Matrix ib = a.unit().kron(Matrix::identity(b.field(), b.dim()));
  return {hopf_morphism(a, t, ia), hopf_morphism(b, t, ib)};
}

Subspace primitives(const HopfData& h) {
  const std::size_t n = h.dim();
  const Matrix id = Matrix::identity(h.field(), n);
  Matrix m = h.comult() - h.unit().kron(id) - id.kron(h.unit());
  return kernel(m);
}

}  // namespace hopfpar
