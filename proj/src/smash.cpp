#include "hopfpar/smash.hpp"

namespace hopfpar {

namespace {

template <class F>
void for_each_comult(const HopfData& h, std::size_t i, F&& f) {
  const std::size_t n = h.dim();
  for (std::size_t ab = 0; ab < n * n; ++ab) {
    const Scalar& d = h.comult().at(ab, i);
    if (!d.is_zero()) f(ab / n, ab % n, d);
  }
}

template <class F>
void for_each_comult2(const HopfData& h, std::size_t i, F&& f) {
  for_each_comult(h, i, [&](std::size_t p, std::size_t q, const Scalar& c1) {
    for_each_comult(h, p, [&](std::size_t a, std::size_t b, const Scalar& c2) {
      f(a, b, q, c1 * c2);
    });
  });
}

template <class F>
void for_each_col(const Matrix& m, std::size_t j, F&& f) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const Scalar& c = m.at(r, j);
    if (!c.is_zero()) f(r, c);
  }
}

std::string pair_witness(const HopfData& h, const HopfData& u, std::size_t i,
                         std::size_t j) {
  return "(" + h.label(i) + "," + u.label(j) + ")";
}

}  // namespace

TwistMap flip_twist(const HopfData& h, const HopfData& u) {
  TwistMap r;
  r.h_side = h;
  r.u_side = u;
  r.map = Matrix::flip(h.field(), h.dim(), u.dim());
  return r;
}

TwistMap module_algebra_twist(const HopfData& h, const HopfData& u,
                              const Matrix& action) {
  const std::size_t nh = h.dim(), nu = u.dim();
  if (action.rows() != nu || action.cols() != nh * nu)
    throw std::invalid_argument("module_algebra_twist: action shape mismatch");
  TwistMap r;
  r.h_side = h;
  r.u_side = u;
  r.map = Matrix(h.field(), nu * nh, nh * nu);
  // R(h (x) u) = h1 |> u (x) h2
  for (std::size_t i = 0; i < nh; ++i)
    for (std::size_t j = 0; j < nu; ++j)
      for_each_comult(h, i, [&](std::size_t h1, std::size_t h2, const Scalar& c) {
        for_each_col(action, h1 * nu + j, [&](std::size_t a, const Scalar& v) {
          r.map.at(a * nh + h2, i * nu + j) += c * v;
        });
      });
  return r;
}

Report check_twist(TwistMap& r) {
  const HopfData& H = r.h_side;
  const HopfData& U = r.u_side;
  const std::size_t nh = H.dim(), nu = U.dim();
  const FieldSpec& f = H.field();
  if (H.field() != U.field())
    throw std::invalid_argument("check_twist: field mismatch");
  if (r.map.rows() != nu * nh || r.map.cols() != nh * nu)
    throw std::invalid_argument("check_twist: map has wrong shape");
  Report rep;
  rep.suite = "twist";

  // left normal: R(h (x) 1_U) = 1_U (x) h
  bool ln = true, rn = true;
  std::string lnw, rnw;
  for (std::size_t i = 0; i < nh; ++i) {
    Matrix lhs(f, nu * nh, 1);
    for (std::size_t j = 0; j < nu; ++j) {
      const Scalar& c = U.unit().at(j, 0);
      if (!c.is_zero()) lhs = lhs + r.map.col(i * nu + j).scaled(c);
    }
    Matrix rhs(f, nu * nh, 1);
    for (std::size_t j = 0; j < nu; ++j)
      if (!U.unit().at(j, 0).is_zero())
        rhs.at(j * nh + i, 0) = U.unit().at(j, 0);
    if (!(lhs == rhs)) { ln = false; lnw = H.label(i); break; }
  }
  for (std::size_t j = 0; j < nu; ++j) {
    Matrix lhs(f, nu * nh, 1);
    for (std::size_t i = 0; i < nh; ++i) {
      const Scalar& c = H.unit().at(i, 0);
      if (!c.is_zero()) lhs = lhs + r.map.col(i * nu + j).scaled(c);
    }
    Matrix rhs(f, nu * nh, 1);
    for (std::size_t i = 0; i < nh; ++i)
      if (!H.unit().at(i, 0).is_zero())
        rhs.at(j * nh + i, 0) = H.unit().at(i, 0);
    if (!(lhs == rhs)) { rn = false; rnw = U.label(j); break; }
  }
  rep.add("left-normal", ln, lnw);
  rep.add("right-normal", rn, rnw);

  // left multiplicative: u^R (x) (hh')^R = (u^R)^r (x) h^r h'^R
  bool lm = true;
  std::string lmw;
  for (std::size_t i = 0; i < nh && lm; ++i)
    for (std::size_t j = 0; j < nh && lm; ++j)
      for (std::size_t k = 0; k < nu; ++k) {
        Matrix lhs(f, nu * nh, 1);
        for_each_col(H.mult(), i * nh + j, [&](std::size_t p, const Scalar& c) {
          lhs = lhs + r.map.col(p * nu + k).scaled(c);
        });
        Matrix rhs(f, nu * nh, 1);
        for_each_col(r.map, j * nu + k, [&](std::size_t e1, const Scalar& c1) {
          const std::size_t uR = e1 / nh, hR = e1 % nh;
          for_each_col(r.map, i * nu + uR, [&](std::size_t e2, const Scalar& c2) {
            const std::size_t uRr = e2 / nh, hr = e2 % nh;
            for_each_col(H.mult(), hr * nh + hR, [&](std::size_t p, const Scalar& c3) {
              rhs.at(uRr * nh + p, 0) += c1 * c2 * c3;
            });
          });
        });
        if (!(lhs == rhs)) {
          lm = false;
          lmw = "(" + H.label(i) + "," + H.label(j) + "," + U.label(k) + ")";
          break;
        }
      }
  rep.add("left-multiplicative", lm, lmw);

  // right multiplicative: (uu')^R (x) h^R = u^R (u')^r (x) (h^R)^r
  bool rm = true;
  std::string rmw;
  for (std::size_t i = 0; i < nh && rm; ++i)
    for (std::size_t j = 0; j < nu && rm; ++j)
      for (std::size_t k = 0; k < nu; ++k) {
        Matrix lhs(f, nu * nh, 1);
        for_each_col(U.mult(), j * nu + k, [&](std::size_t p, const Scalar& c) {
          lhs = lhs + r.map.col(i * nu + p).scaled(c);
        });
        Matrix rhs(f, nu * nh, 1);
        for_each_col(r.map, i * nu + j, [&](std::size_t e1, const Scalar& c1) {
          const std::size_t uR = e1 / nh, hR = e1 % nh;
          for_each_col(r.map, hR * nu + k, [&](std::size_t e2, const Scalar& c2) {
            const std::size_t ur = e2 / nh, hRr = e2 % nh;
            for_each_col(U.mult(), uR * nu + ur, [&](std::size_t p, const Scalar& c3) {
              rhs.at(p * nh + hRr, 0) += c1 * c2 * c3;
            });
          });
        });
        if (!(lhs == rhs)) {
          rm = false;
          rmw = "(" + H.label(i) + "," + U.label(j) + "," + U.label(k) + ")";
          break;
        }
      }
  rep.add("right-multiplicative", rm, rmw);

  // coalgebra map: counit and comultiplication intertwined
  bool ce = true, cd = true;
  std::string cew, cdw;
  for (std::size_t i = 0; i < nh && (ce || cd); ++i)
    for (std::size_t j = 0; j < nu; ++j) {
      Scalar eps = Scalar::zero(f);
      for_each_col(r.map, i * nu + j, [&](std::size_t e, const Scalar& c) {
        eps += c * U.counit().at(0, e / nh) * H.counit().at(0, e % nh);
      });
      if (ce && eps != H.counit().at(0, i) * U.counit().at(0, j)) {
        ce = false;
        cew = pair_witness(H, U, i, j);
      }
      Matrix lhs(f, nu * nh * nu * nh, 1);
      for_each_col(r.map, i * nu + j, [&](std::size_t e, const Scalar& c) {
        const std::size_t u = e / nh, hh = e % nh;
        for_each_comult(U, u, [&](std::size_t u1, std::size_t u2, const Scalar& cu) {
          for_each_comult(H, hh, [&](std::size_t h1, std::size_t h2, const Scalar& ch) {
            lhs.at(((u1 * nh + h1) * nu + u2) * nh + h2, 0) += c * cu * ch;
          });
        });
      });
      Matrix rhs(f, nu * nh * nu * nh, 1);
      for_each_comult(H, i, [&](std::size_t a1, std::size_t a2, const Scalar& ca) {
        for_each_comult(U, j, [&](std::size_t b1, std::size_t b2, const Scalar& cb) {
          for_each_col(r.map, a1 * nu + b1, [&](std::size_t e1, const Scalar& c1) {
            for_each_col(r.map, a2 * nu + b2, [&](std::size_t e2, const Scalar& c2) {
              rhs.at(e1 * nu * nh + e2, 0) += ca * cb * c1 * c2;
            });
          });
        });
      });
      if (cd && !(lhs == rhs)) {
        cd = false;
        cdw = pair_witness(H, U, i, j);
      }
      if (!ce && !cd) break;
    }
  rep.add("counit-intertwined", ce, cew);
  rep.add("comult-intertwined", cd, cdw);

  r.flags.left_normal = ln;
  r.flags.right_normal = rn;
  r.flags.left_multiplicative = lm;
  r.flags.right_multiplicative = rm;
  r.flags.coalgebra_map = ce && cd;
  r.checked = true;
  return rep;
}

SmashAlgebra build_smash(const TwistMap& twist) {
  TwistMap r = twist;
  if (!r.checked) check_twist(r);
  if (!r.flags.structural())
    throw std::invalid_argument(
        "build_smash: R must be normal and multiplicative");
  const HopfData& H = r.h_side;
  const HopfData& U = r.u_side;
  const std::size_t nh = H.dim(), nu = U.dim(), N = nu * nh;
  const FieldSpec& f = H.field();

  SmashAlgebra s;
  s.twist = r;
  s.verified.suite = "smash";
  s.algebra.field = f;
  s.algebra.dim = N;
  s.algebra.mult = Matrix(f, N, N * N);
  // (u # h)(u' # h') = u u'^R # h^R h'
  for (std::size_t a = 0; a < nu; ++a)
    for (std::size_t i = 0; i < nh; ++i)
      for (std::size_t b = 0; b < nu; ++b)
        for (std::size_t j = 0; j < nh; ++j) {
          const std::size_t col = (a * nh + i) * N + (b * nh + j);
          for_each_col(r.map, i * nu + b, [&](std::size_t e, const Scalar& c) {
            const std::size_t uR = e / nh, hR = e % nh;
            for_each_col(U.mult(), a * nu + uR, [&](std::size_t p, const Scalar& cu) {
              for_each_col(H.mult(), hR * nh + j, [&](std::size_t q, const Scalar& ch) {
                s.algebra.mult.at(p * nh + q, col) += c * cu * ch;
              });
            });
          });
        }
  s.algebra.unit = U.unit().kron(H.unit());
  for (std::size_t a = 0; a < nu; ++a)
    for (std::size_t i = 0; i < nh; ++i)
      s.algebra.labels.push_back(U.label(a) + "#" + H.label(i));
  Report alg = verify_algebra(s.algebra);
  s.verified.merge(alg, "algebra");

  // algebra inclusions and u # h = (u # 1)(1 # h)
  const Matrix iota_u = Matrix::identity(f, nu).kron(H.unit());
  const Matrix iota_h = U.unit().kron(Matrix::identity(f, nh));
  Report iu = verify_morphism(algebra_morphism(U.algebra, s.algebra, iota_u),
                              MorphismKind::algebra);
  Report ih = verify_morphism(algebra_morphism(H.algebra, s.algebra, iota_h),
                              MorphismKind::algebra);
  s.verified.merge(iu, "iota-U");
  s.verified.merge(ih, "iota-H");
  bool split = true;
  for (std::size_t a = 0; a < nu && split; ++a)
    for (std::size_t i = 0; i < nh; ++i) {
      Matrix e(f, N, 1);
      e.at(a * nh + i, 0) = Scalar::one(f);
      if (!(s.algebra.product(iota_u.col(a), iota_h.col(i)) == e)) {
        split = false;
        break;
      }
    }
  s.verified.add("u#h-splits", split);

  if (r.flags.coalgebra_map) {
    HopfData hd;
    hd.algebra = s.algebra;
    hd.coalgebra.field = f;
    hd.coalgebra.dim = N;
    hd.coalgebra.labels = s.algebra.labels;
    hd.coalgebra.comult = Matrix(f, N * N, N);
    for (std::size_t a = 0; a < nu; ++a)
      for (std::size_t i = 0; i < nh; ++i)
        for_each_comult(U, a, [&](std::size_t a1, std::size_t a2, const Scalar& cu) {
          for_each_comult(H, i, [&](std::size_t i1, std::size_t i2, const Scalar& ch) {
            hd.coalgebra.comult.at((a1 * nh + i1) * N + (a2 * nh + i2),
                                   a * nh + i) += cu * ch;
          });
        });
    hd.coalgebra.counit = U.counit().kron(H.counit());
    // S(u # h) = S_U(u)^R #_R S_H(h)^R
    hd.antipode = Matrix(f, N, N);
    for (std::size_t a = 0; a < nu; ++a)
      for (std::size_t i = 0; i < nh; ++i)
        for_each_col(H.antipode, i, [&](std::size_t sh, const Scalar& c1) {
          for_each_col(U.antipode, a, [&](std::size_t su, const Scalar& c2) {
            for_each_col(r.map, sh * nu + su, [&](std::size_t e, const Scalar& c3) {
              hd.antipode.at(e, a * nh + i) += c1 * c2 * c3;
            });
          });
        });
    if (auto inv = hd.antipode.inverse()) hd.antipode_inverse = inv;
    Report hopf = verify_hopf(hd);
    s.verified.merge(hopf, "hopf");

    // the automatic identity S_U(u^R)^r (x) S_H(h^R)^r = S_U(u) (x) S_H(h)
    bool autom = true;
    std::string aw;
    for (std::size_t i = 0; i < nh && autom; ++i)
      for (std::size_t j = 0; j < nu; ++j) {
        Matrix lhs(f, nu * nh, 1);
        for_each_col(r.map, i * nu + j, [&](std::size_t e, const Scalar& c) {
          const std::size_t uR = e / nh, hR = e % nh;
          for_each_col(U.antipode, uR, [&](std::size_t su, const Scalar& c1) {
            for_each_col(H.antipode, hR, [&](std::size_t sh, const Scalar& c2) {
              for_each_col(r.map, sh * nu + su, [&](std::size_t e2, const Scalar& c3) {
                lhs.at(e2, 0) += c * c1 * c2 * c3;
              });
            });
          });
        });
        Matrix rhs = U.antipode.col(j).kron(H.antipode.col(i));
        if (!(lhs == rhs)) {
          autom = false;
          aw = pair_witness(H, U, i, j);
          break;
        }
      }
    s.verified.add("antipode-twist-identity", autom);
    if (hopf.passed()) s.hopf = std::move(hd);
  }
  require_pass(s.verified);
  return s;
}

std::pair<MatchedPairActions, Report> derive_actions(const TwistMap& twist) {
  TwistMap r = twist;
  if (!r.checked) check_twist(r);
  if (!r.flags.structural() || !r.flags.coalgebra_map)
    throw std::invalid_argument(
        "derive_actions: R must be normal, multiplicative and a coalgebra map");
  const HopfData& H = r.h_side;
  const HopfData& U = r.u_side;
  const std::size_t nh = H.dim(), nu = U.dim();
  const FieldSpec& f = H.field();
  Report rep;
  rep.suite = "matched-pair";

  MatchedPairActions act{Matrix(f, nu, nh * nu), Matrix(f, nh, nh * nu),
                         Matrix(f, nh, nu * nh), Matrix(f, nu, nu * nh)};
  for (std::size_t i = 0; i < nh; ++i)
    for (std::size_t j = 0; j < nu; ++j)
      for_each_col(r.map, i * nu + j, [&](std::size_t e, const Scalar& c) {
        const std::size_t u = e / nh, hh = e % nh;
        act.tri_r.at(u, i * nu + j) += c * H.counit().at(0, hh);
        act.tri_l.at(hh, i * nu + j) += c * U.counit().at(0, u);
      });

  auto tri_r_vec = [&](const Matrix& hv, const Matrix& uv) {
    Matrix out(f, nu, 1);
    for (std::size_t i = 0; i < nh; ++i) {
      if (hv.at(i, 0).is_zero()) continue;
      for (std::size_t j = 0; j < nu; ++j)
        if (!uv.at(j, 0).is_zero())
          out = out + act.tri_r.col(i * nu + j).scaled(hv.at(i, 0) * uv.at(j, 0));
    }
    return out;
  };
  auto tri_l_vec = [&](const Matrix& hv, const Matrix& uv) {
    Matrix out(f, nh, 1);
    for (std::size_t i = 0; i < nh; ++i) {
      if (hv.at(i, 0).is_zero()) continue;
      for (std::size_t j = 0; j < nu; ++j)
        if (!uv.at(j, 0).is_zero())
          out = out + act.tri_l.col(i * nu + j).scaled(hv.at(i, 0) * uv.at(j, 0));
    }
    return out;
  };

  // module axioms
  bool mod_r = true, mod_l = true;
  for (std::size_t j = 0; j < nu; ++j)
    if (!(tri_r_vec(H.unit(), U.basis_element(j)) == U.basis_element(j)))
      mod_r = false;
  for (std::size_t i = 0; i < nh && mod_r; ++i)
    for (std::size_t j = 0; j < nh && mod_r; ++j)
      for (std::size_t k = 0; k < nu; ++k)
        if (!(tri_r_vec(H.mult().col(i * nh + j), U.basis_element(k)) ==
              tri_r_vec(H.basis_element(i),
                        act.tri_r.col(j * nu + k)))) {
          mod_r = false;
          break;
        }
  rep.add("left-module-triangle-r", mod_r);
  for (std::size_t i = 0; i < nh; ++i)
    if (!(tri_l_vec(H.basis_element(i), U.unit()) == H.basis_element(i)))
      mod_l = false;
  for (std::size_t i = 0; i < nh && mod_l; ++i)
    for (std::size_t j = 0; j < nu && mod_l; ++j)
      for (std::size_t k = 0; k < nu; ++k)
        if (!(tri_l_vec(H.basis_element(i), U.mult().col(j * nu + k)) ==
              tri_l_vec(act.tri_l.col(i * nu + j), U.basis_element(k)))) {
          mod_l = false;
          break;
        }
  rep.add("right-module-triangle-l", mod_l);

  // reconstruction u^R (x) h^R = h1 |> u1 (x) h2 <| u2 = h2 |> u2 (x) h1 <| u1
  bool rec1 = true, rec2 = true;
  std::string rw;
  for (std::size_t i = 0; i < nh && (rec1 || rec2); ++i)
    for (std::size_t j = 0; j < nu; ++j) {
      Matrix rhs1(f, nu * nh, 1), rhs2(f, nu * nh, 1);
      for_each_comult(H, i, [&](std::size_t h1, std::size_t h2, const Scalar& ch) {
        for_each_comult(U, j, [&](std::size_t u1, std::size_t u2, const Scalar& cu) {
          const Matrix r1 = act.tri_r.col(h1 * nu + u1);
          const Matrix l1 = act.tri_l.col(h2 * nu + u2);
          const Matrix r2 = act.tri_r.col(h2 * nu + u2);
          const Matrix l2 = act.tri_l.col(h1 * nu + u1);
          for (std::size_t a = 0; a < nu; ++a) {
            if (!r1.at(a, 0).is_zero())
              for (std::size_t b = 0; b < nh; ++b)
                if (!l1.at(b, 0).is_zero())
                  rhs1.at(a * nh + b, 0) += ch * cu * r1.at(a, 0) * l1.at(b, 0);
            if (!r2.at(a, 0).is_zero())
              for (std::size_t b = 0; b < nh; ++b)
                if (!l2.at(b, 0).is_zero())
                  rhs2.at(a * nh + b, 0) += ch * cu * r2.at(a, 0) * l2.at(b, 0);
          }
        });
      });
      const Matrix lhs = r.map.col(i * nu + j);
      if (rec1 && !(lhs == rhs1)) { rec1 = false; rw = pair_witness(H, U, i, j); }
      if (rec2 && !(lhs == rhs2)) { rec2 = false; rw = pair_witness(H, U, i, j); }
    }
  rep.add("reconstruction", rec1, rec1 ? "" : rw);
  rep.add("reconstruction-cocommuted", rec2, rec2 ? "" : rw);

  // S_U(h |> u) = (h <| u1) |> S_U(u2)
  bool s1 = true, s2 = true;
  for (std::size_t i = 0; i < nh && (s1 || s2); ++i)
    for (std::size_t j = 0; j < nu; ++j) {
      Matrix lhs1 = U.antipode * act.tri_r.col(i * nu + j);
      Matrix rhs1(f, nu, 1);
      for_each_comult(U, j, [&](std::size_t u1, std::size_t u2, const Scalar& cu) {
        rhs1 = rhs1 + tri_r_vec(act.tri_l.col(i * nu + u1),
                                U.antipode.col(u2)).scaled(cu);
      });
      if (s1 && !(lhs1 == rhs1)) s1 = false;
      Matrix lhs2 = H.antipode * act.tri_l.col(i * nu + j);
      Matrix rhs2(f, nh, 1);
      for_each_comult(H, i, [&](std::size_t h1, std::size_t h2, const Scalar& ch) {
        rhs2 = rhs2 + tri_l_vec(H.antipode.col(h1),
                                act.tri_r.col(h2 * nu + j)).scaled(ch);
      });
      if (s2 && !(lhs2 == rhs2)) s2 = false;
    }
  rep.add("antipode-triangle-r", s1);
  rep.add("antipode-triangle-l", s2);

  // Lemma le:W identities
  bool w1 = true, w2 = true;
  std::string w1w, w2w;
  for (std::size_t i = 0; i < nh && (w1 || w2); ++i)
    for (std::size_t j = 0; j < nu; ++j) {
      // (u^r)^R (x) S_H(h1)^R (x) h2^r  vs  u1 (x) S_H((h <| u2)_1) (x) (h <| u2)_2
      Matrix lhs1(f, nu * nh * nh, 1);
      for_each_comult(H, i, [&](std::size_t h1, std::size_t h2, const Scalar& ch) {
        for_each_col(r.map, h2 * nu + j, [&](std::size_t e1, const Scalar& c1) {
          const std::size_t ur = e1 / nh, hr = e1 % nh;
          for_each_col(H.antipode, h1, [&](std::size_t sh, const Scalar& c2) {
            for_each_col(r.map, sh * nu + ur, [&](std::size_t e2, const Scalar& c3) {
              lhs1.at(e2 * nh + hr, 0) += ch * c1 * c2 * c3;
            });
          });
        });
      });
      Matrix rhs1(f, nu * nh * nh, 1);
      for_each_comult(U, j, [&](std::size_t u1, std::size_t u2, const Scalar& cu) {
        const Matrix t = act.tri_l.col(i * nu + u2);
        for (std::size_t ht = 0; ht < nh; ++ht) {
          if (t.at(ht, 0).is_zero()) continue;
          for_each_comult(H, ht, [&](std::size_t d1, std::size_t d2, const Scalar& cd) {
            for_each_col(H.antipode, d1, [&](std::size_t sd, const Scalar& cs) {
              rhs1.at((u1 * nh + sd) * nh + d2, 0) +=
                  cu * t.at(ht, 0) * cd * cs;
            });
          });
        }
      });
      if (w1 && !(lhs1 == rhs1)) { w1 = false; w1w = pair_witness(H, U, i, j); }

      // u1^R (x) S_U(u2)^r (x) (h^R)^r  vs  (h1 |> u)_1 (x) S_U((h1 |> u)_2) (x) h2
      Matrix lhs2(f, nu * nu * nh, 1);
      for_each_comult(U, j, [&](std::size_t b1, std::size_t b2, const Scalar& cb) {
        for_each_col(r.map, i * nu + b1, [&](std::size_t e1, const Scalar& c1) {
          const std::size_t uR = e1 / nh, hR = e1 % nh;
          for_each_col(U.antipode, b2, [&](std::size_t su, const Scalar& c2) {
            for_each_col(r.map, hR * nu + su, [&](std::size_t e2, const Scalar& c3) {
              const std::size_t sur = e2 / nh, hRr = e2 % nh;
              lhs2.at((uR * nu + sur) * nh + hRr, 0) += cb * c1 * c2 * c3;
            });
          });
        });
      });
      Matrix rhs2(f, nu * nu * nh, 1);
      for_each_comult(H, i, [&](std::size_t a1, std::size_t a2, const Scalar& ca) {
        const Matrix v = act.tri_r.col(a1 * nu + j);
        for (std::size_t uv = 0; uv < nu; ++uv) {
          if (v.at(uv, 0).is_zero()) continue;
          for_each_comult(U, uv, [&](std::size_t e1, std::size_t e2, const Scalar& cu) {
            for_each_col(U.antipode, e2, [&](std::size_t se, const Scalar& cs) {
              rhs2.at((e1 * nu + se) * nh + a2, 0) +=
                  ca * v.at(uv, 0) * cu * cs;
            });
          });
        }
      });
      if (w2 && !(lhs2 == rhs2)) { w2 = false; w2w = pair_witness(H, U, i, j); }
    }
  rep.add("lemma-W1", w1, w1w);
  rep.add("lemma-W2", w2, w2w);

  // black actions from the inverse twist
  TwistMap rp = invert_twist(r);
  for (std::size_t j = 0; j < nu; ++j)
    for (std::size_t i = 0; i < nh; ++i)
      for_each_col(rp.map, j * nh + i, [&](std::size_t e, const Scalar& c) {
        const std::size_t hh = e / nu, u = e % nu;
        act.black_r.at(hh, j * nh + i) += c * U.counit().at(0, u);
        act.black_l.at(u, j * nh + i) += c * H.counit().at(0, hh);
      });

  // R' is recovered by the black actions
  bool recp = true;
  std::string rpw;
  for (std::size_t j = 0; j < nu && recp; ++j)
    for (std::size_t i = 0; i < nh; ++i) {
      Matrix rhs(f, nh * nu, 1);
      for_each_comult(U, j, [&](std::size_t u1, std::size_t u2, const Scalar& cu) {
        for_each_comult(H, i, [&](std::size_t h1, std::size_t h2, const Scalar& ch) {
          const Matrix br = act.black_r.col(u1 * nh + h1);
          const Matrix bl = act.black_l.col(u2 * nh + h2);
          for (std::size_t a = 0; a < nh; ++a) {
            if (br.at(a, 0).is_zero()) continue;
            for (std::size_t b = 0; b < nu; ++b)
              if (!bl.at(b, 0).is_zero())
                rhs.at(a * nu + b, 0) += cu * ch * br.at(a, 0) * bl.at(b, 0);
          }
        });
      });
      if (!(rp.map.col(j * nh + i) == rhs)) {
        recp = false;
        rpw = "(" + U.label(j) + "," + H.label(i) + ")";
        break;
      }
    }
  rep.add("black-reconstruction", recp, rpw);
  return {act, rep};
}

TwistMap invert_twist(const TwistMap& twist) {
  TwistMap r = twist;
  if (!r.checked) check_twist(r);
  if (!r.flags.structural() || !r.flags.coalgebra_map)
    throw std::invalid_argument(
        "invert_twist: R must be normal, multiplicative and a coalgebra map");
  const HopfData& H = r.h_side;
  const HopfData& U = r.u_side;
  const std::size_t nh = H.dim(), nu = U.dim();
  const FieldSpec& f = H.field();
  if (!H.antipode_inverse || !U.antipode_inverse)
    throw std::invalid_argument("invert_twist: antipodes must be invertible");

  // triangle actions of R
  Matrix tri_r(f, nu, nh * nu), tri_l(f, nh, nh * nu);
  for (std::size_t i = 0; i < nh; ++i)
    for (std::size_t j = 0; j < nu; ++j)
      for_each_col(r.map, i * nu + j, [&](std::size_t e, const Scalar& c) {
        tri_r.at(e / nh, i * nu + j) += c * H.counit().at(0, e % nh);
        tri_l.at(e % nh, i * nu + j) += c * U.counit().at(0, e / nh);
      });
  auto act_pair = [&](const Matrix& m, const Matrix& hv, const Matrix& uv,
                      std::size_t out_dim) {
    Matrix out(f, out_dim, 1);
    for (std::size_t i = 0; i < nh; ++i) {
      if (hv.at(i, 0).is_zero()) continue;
      for (std::size_t j = 0; j < nu; ++j)
        if (!uv.at(j, 0).is_zero())
          out = out + m.col(i * nu + j).scaled(hv.at(i, 0) * uv.at(j, 0));
    }
    return out;
  };

  // R'(u (x) h) = S_H(S_H^{-1}(h1) <| S_U^{-1}(u1)) (x) S_U(S_H^{-1}(h2) |> S_U^{-1}(u2))
  TwistMap inv;
  inv.h_side = U;
  inv.u_side = H;
  inv.map = Matrix(f, nh * nu, nu * nh);
  const Matrix& shi = *H.antipode_inverse;
  const Matrix& sui = *U.antipode_inverse;
  for (std::size_t j = 0; j < nu; ++j)
    for (std::size_t i = 0; i < nh; ++i) {
      Matrix out(f, nh * nu, 1);
      for_each_comult(U, j, [&](std::size_t u1, std::size_t u2, const Scalar& cu) {
        for_each_comult(H, i, [&](std::size_t h1, std::size_t h2, const Scalar& ch) {
          Matrix left = H.antipode *
                        act_pair(tri_l, shi.col(h1), sui.col(u1), nh);
          Matrix right = U.antipode *
                         act_pair(tri_r, shi.col(h2), sui.col(u2), nu);
          for (std::size_t a = 0; a < nh; ++a) {
            if (left.at(a, 0).is_zero()) continue;
            for (std::size_t b = 0; b < nu; ++b)
              if (!right.at(b, 0).is_zero())
                out.at(a * nu + b, 0) +=
                    cu * ch * left.at(a, 0) * right.at(b, 0);
          }
        });
      });
      for (std::size_t rr = 0; rr < nh * nu; ++rr)
        inv.map.at(rr, j * nh + i) = out.at(rr, 0);
    }

  // two-sided inverse
  Matrix comp1(f, nh * nu, nh * nu), comp2(f, nu * nh, nu * nh);
  for (std::size_t i = 0; i < nh; ++i)
    for (std::size_t j = 0; j < nu; ++j) {
      Matrix v(f, nh * nu, 1);
      // output of R is indexed like the input of R'
      for_each_col(r.map, i * nu + j, [&](std::size_t e, const Scalar& c) {
        v = v + inv.map.col(e).scaled(c);
      });
      for (std::size_t rr = 0; rr < nh * nu; ++rr)
        comp1.at(rr, i * nu + j) = v.at(rr, 0);
    }
  for (std::size_t j = 0; j < nu; ++j)
    for (std::size_t i = 0; i < nh; ++i) {
      Matrix v(f, nu * nh, 1);
      for_each_col(inv.map, j * nh + i, [&](std::size_t e, const Scalar& c) {
        v = v + r.map.col(e).scaled(c);
      });
      for (std::size_t rr = 0; rr < nu * nh; ++rr)
        comp2.at(rr, j * nh + i) = v.at(rr, 0);
    }
  if (!(comp1 == Matrix::identity(f, nh * nu)) ||
      !(comp2 == Matrix::identity(f, nu * nh)))
    throw std::logic_error("invert_twist: closed formula failed to invert R");

  Report rep = check_twist(inv);
  if (!inv.flags.structural() || !inv.flags.coalgebra_map)
    throw std::logic_error("invert_twist: R' lost the structural properties");
  return inv;
}

namespace {

/// Sends one U-vector through the letters of an H-word, rightmost letter
/// first; returns the dense state over U (x) H^{(x)k}.
std::vector<Scalar> word_pass(const TwistMap& r,
                              const std::vector<std::size_t>& word,
                              std::size_t u_start) {
  const std::size_t nh = r.h_side.dim(), nu = r.u_side.dim();
  const FieldSpec& f = r.h_side.field();
  std::vector<Scalar> state(nu, Scalar::zero(f));
  state[u_start] = Scalar::one(f);
  std::size_t legs = 1;  // nh^t
  for (std::size_t k = word.size(); k-- > 0;) {
    const std::size_t letter = word[k];
    std::vector<Scalar> next(nu * nh * legs, Scalar::zero(f));
    for (std::size_t a = 0; a < nu; ++a)
      for (std::size_t rest = 0; rest < legs; ++rest) {
        const Scalar& c = state[a * legs + rest];
        if (c.is_zero()) continue;
        for_each_col(r.map, letter * nu + a, [&](std::size_t e, const Scalar& v) {
          const std::size_t u2 = e / nh, h2 = e % nh;
          next[u2 * (nh * legs) + h2 * legs + rest] += c * v;
        });
      }
    state = std::move(next);
    legs *= nh;
  }
  return state;
}

/// Image of (word (x) e_u) under the lifted twist, as a vector over
/// U (x) Q_H (Q coordinates).
Matrix lift_T_image(const TwistMap& r, const TruncatedQuotient& hpar,
                    const std::vector<std::size_t>& word, std::size_t u) {
  const std::size_t nh = r.h_side.dim(), nu = r.u_side.dim();
  const std::size_t mh = hpar.dim();
  const FieldSpec& f = r.h_side.field();
  const std::vector<Scalar> state = word_pass(r, word, u);
  std::size_t legs = 1;
  for (std::size_t k = 0; k < word.size(); ++k) legs *= nh;
  Matrix out(f, nu * mh, 1);
  for (std::size_t a = 0; a < nu; ++a)
    for (std::size_t rest = 0; rest < legs; ++rest) {
      const Scalar& c = state[a * legs + rest];
      if (c.is_zero()) continue;
      std::vector<std::size_t> letters(word.size());
      std::size_t tmp = rest;
      for (std::size_t k = word.size(); k-- > 0;) {
        letters[k] = tmp % nh;
        tmp /= nh;
      }
      Matrix q = hpar.coords_of_word(letters);
      for (std::size_t rr = 0; rr < mh; ++rr)
        if (!q.at(rr, 0).is_zero()) out.at(a * mh + rr, 0) += c * q.at(rr, 0);
    }
  return out;
}

void check_lift_flags(Report& rep, const Matrix& map, const AlgebraData& QH,
                      const AlgebraData& AU) {
  const std::size_t mh = QH.dim, mu = AU.dim;
  const FieldSpec& f = QH.field;
  bool ln = true, rn = true;
  for (std::size_t q = 0; q < mh && ln; ++q) {
    Matrix lhs(f, mu * mh, 1);
    for (std::size_t j = 0; j < mu; ++j)
      if (!AU.unit.at(j, 0).is_zero())
        lhs = lhs + map.col(q * mu + j).scaled(AU.unit.at(j, 0));
    Matrix rhs(f, mu * mh, 1);
    for (std::size_t j = 0; j < mu; ++j)
      if (!AU.unit.at(j, 0).is_zero())
        rhs.at(j * mh + q, 0) = AU.unit.at(j, 0);
    ln = lhs == rhs;
  }
  for (std::size_t j = 0; j < mu && rn; ++j) {
    Matrix lhs(f, mu * mh, 1);
    for (std::size_t q = 0; q < mh; ++q)
      if (!QH.unit.at(q, 0).is_zero())
        lhs = lhs + map.col(q * mu + j).scaled(QH.unit.at(q, 0));
    Matrix rhs = Matrix::zero(f, mu * mh, 1);
    for (std::size_t q = 0; q < mh; ++q)
      if (!QH.unit.at(q, 0).is_zero()) rhs.at(j * mh + q, 0) = QH.unit.at(q, 0);
    rn = lhs == rhs;
  }
  rep.add("lift-left-normal", ln);
  rep.add("lift-right-normal", rn);

  bool lm = true, rm = true;
  for (std::size_t i = 0; i < mh && lm; ++i)
    for (std::size_t j = 0; j < mh && lm; ++j)
      for (std::size_t k = 0; k < mu; ++k) {
        Matrix lhs(f, mu * mh, 1);
        for_each_col(QH.mult, i * mh + j, [&](std::size_t p, const Scalar& c) {
          lhs = lhs + map.col(p * mu + k).scaled(c);
        });
        Matrix rhs(f, mu * mh, 1);
        for_each_col(map, j * mu + k, [&](std::size_t e1, const Scalar& c1) {
          const std::size_t u1 = e1 / mh, q1 = e1 % mh;
          for_each_col(map, i * mu + u1, [&](std::size_t e2, const Scalar& c2) {
            const std::size_t u2 = e2 / mh, q2 = e2 % mh;
            for_each_col(QH.mult, q2 * mh + q1, [&](std::size_t p, const Scalar& c3) {
              rhs.at(u2 * mh + p, 0) += c1 * c2 * c3;
            });
          });
        });
        if (!(lhs == rhs)) { lm = false; break; }
      }
  for (std::size_t i = 0; i < mh && rm; ++i)
    for (std::size_t j = 0; j < mu && rm; ++j)
      for (std::size_t k = 0; k < mu; ++k) {
        Matrix lhs(f, mu * mh, 1);
        for_each_col(AU.mult, j * mu + k, [&](std::size_t p, const Scalar& c) {
          lhs = lhs + map.col(i * mu + p).scaled(c);
        });
        Matrix rhs(f, mu * mh, 1);
        for_each_col(map, i * mu + j, [&](std::size_t e1, const Scalar& c1) {
          const std::size_t u1 = e1 / mh, q1 = e1 % mh;
          for_each_col(map, q1 * mu + k, [&](std::size_t e2, const Scalar& c2) {
            const std::size_t u2 = e2 / mh, q2 = e2 % mh;
            for_each_col(AU.mult, u1 * mu + u2, [&](std::size_t p, const Scalar& c3) {
              rhs.at(p * mh + q2, 0) += c1 * c2 * c3;
            });
          });
        });
        if (!(lhs == rhs)) { rm = false; break; }
      }
  rep.add("lift-left-multiplicative", lm);
  rep.add("lift-right-multiplicative", rm);
}

}  // namespace

LiftedTwist lift_twist_T(const TwistMap& twist, const TruncatedQuotient& hpar) {
  TwistMap r = twist;
  if (!r.checked) check_twist(r);
  if (!r.flags.structural())
    throw std::invalid_argument("lift_twist_T: R must be normal and multiplicative");
  if (!hpar.stabilized())
    throw std::invalid_argument("lift_twist_T: truncation not stabilized");
  const std::size_t nu = r.u_side.dim(), mh = hpar.dim();
  const FieldSpec& f = r.h_side.field();

  LiftedTwist out;
  out.kind = LiftedTwist::Kind::T;
  out.verified.suite = "lift-T";
  out.map = Matrix(f, nu * mh, mh * nu);
  for (std::size_t w = 0; w < mh; ++w) {
    const auto word = hpar.words().word_at(hpar.basis_words()[w]);
    for (std::size_t u = 0; u < nu; ++u) {
      Matrix img = lift_T_image(r, hpar, word, u);
      for (std::size_t rr = 0; rr < nu * mh; ++rr)
        out.map.at(rr, w * nu + u) = img.at(rr, 0);
    }
  }

  // relation images must vanish in U (x) Q_H
  bool rels_die = true;
  const auto rels = hpar_relations(r.h_side, hpar.words());
  for (const auto& rel : rels) {
    for (std::size_t u = 0; u < nu && rels_die; ++u) {
      Matrix acc(f, nu * mh, 1);
      for (const auto& [idx, c] : rel)
        acc = acc + lift_T_image(r, hpar, hpar.words().word_at(idx), u).scaled(c);
      if (!acc.is_zero()) rels_die = false;
    }
    if (!rels_die) break;
  }
  out.verified.add("relation-images-vanish", rels_die);
  if (!rels_die)
    throw std::logic_error("lift_twist_T: twist does not respect the relations");

  check_lift_flags(out.verified, out.map, hpar.algebra(), r.u_side.algebra);
  require_pass(out.verified);
  return out;
}

namespace {

/// Image of (h-word (x) u-word) under calR, as a vector over Q_U (x) Q_H.
Matrix lift_calR_image(const TwistMap& r, const TruncatedQuotient& hpar,
                       const TruncatedQuotient& upar,
                       const std::vector<std::size_t>& hword,
                       const std::vector<std::size_t>& uword) {
  const std::size_t nh = r.h_side.dim(), nu = r.u_side.dim();
  const std::size_t mh = hpar.dim(), mu = upar.dim();
  const FieldSpec& f = r.h_side.field();
  const std::size_t n = hword.size(), m = uword.size();
  std::size_t hlegs = 1;
  for (std::size_t k = 0; k < n; ++k) hlegs *= nh;

  // components: (u-prefix rank, h-legs rank) -> coeff
  std::map<std::pair<std::size_t, std::size_t>, Scalar> comp;
  std::size_t start = 0;
  for (auto l : hword) start = start * nh + l;
  comp[{0, start}] = Scalar::one(f);
  for (std::size_t step = 0; step < m; ++step) {
    std::map<std::pair<std::size_t, std::size_t>, Scalar> next;
    for (const auto& [key, c] : comp) {
      if (c.is_zero()) continue;
      std::vector<std::size_t> legs(n);
      std::size_t tmp = key.second;
      for (std::size_t k = n; k-- > 0;) {
        legs[k] = tmp % nh;
        tmp /= nh;
      }
      const std::vector<Scalar> state = word_pass(r, legs, uword[step]);
      for (std::size_t a = 0; a < nu; ++a)
        for (std::size_t rest = 0; rest < hlegs; ++rest) {
          const Scalar& v = state[a * hlegs + rest];
          if (v.is_zero()) continue;
          auto k2 = std::make_pair(key.first * nu + a, rest);
          auto [it, fresh] = next.try_emplace(k2, Scalar::zero(f));
          it->second += c * v;
        }
    }
    comp = std::move(next);
  }

  Matrix out(f, mu * mh, 1);
  for (const auto& [key, c] : comp) {
    if (c.is_zero()) continue;
    std::vector<std::size_t> uw(m), hw(n);
    std::size_t tu = key.first, th = key.second;
    for (std::size_t k = m; k-- > 0;) { uw[k] = tu % nu; tu /= nu; }
    for (std::size_t k = n; k-- > 0;) { hw[k] = th % nh; th /= nh; }
    const Matrix qu = upar.coords_of_word(uw);
    const Matrix qh = hpar.coords_of_word(hw);
    for (std::size_t a = 0; a < mu; ++a) {
      if (qu.at(a, 0).is_zero()) continue;
      for (std::size_t b = 0; b < mh; ++b)
        if (!qh.at(b, 0).is_zero())
          out.at(a * mh + b, 0) += c * qu.at(a, 0) * qh.at(b, 0);
    }
  }
  return out;
}

}  // namespace

LiftedTwist lift_twist_calR(const TwistMap& twist, const TruncatedQuotient& hpar,
                            const TruncatedQuotient& upar) {
  TwistMap r = twist;
  if (!r.checked) check_twist(r);
  if (!r.flags.structural())
    throw std::invalid_argument("lift_twist_calR: R must be normal and multiplicative");
  if (!hpar.stabilized() || !upar.stabilized())
    throw std::invalid_argument("lift_twist_calR: truncations not stabilized");
  const std::size_t mh = hpar.dim(), mu = upar.dim();
  const FieldSpec& f = r.h_side.field();

  LiftedTwist out;
  out.kind = LiftedTwist::Kind::CalR;
  out.verified.suite = "lift-calR";
  out.map = Matrix(f, mu * mh, mh * mu);
  for (std::size_t w = 0; w < mh; ++w) {
    const auto hword = hpar.words().word_at(hpar.basis_words()[w]);
    for (std::size_t v = 0; v < mu; ++v) {
      Matrix img = lift_calR_image(r, hpar, upar, hword,
                                   upar.words().word_at(upar.basis_words()[v]));
      for (std::size_t rr = 0; rr < mu * mh; ++rr)
        out.map.at(rr, w * mu + v) = img.at(rr, 0);
    }
  }

  bool rels_die = true;
  for (const auto& rel : hpar_relations(r.h_side, hpar.words())) {
    for (std::size_t v = 0; v < mu && rels_die; ++v) {
      Matrix acc(f, mu * mh, 1);
      const auto uword = upar.words().word_at(upar.basis_words()[v]);
      for (const auto& [idx, c] : rel)
        acc = acc + lift_calR_image(r, hpar, upar, hpar.words().word_at(idx),
                                    uword).scaled(c);
      if (!acc.is_zero()) rels_die = false;
    }
    if (!rels_die) break;
  }
  out.verified.add("h-relation-images-vanish", rels_die);
  bool urels_die = true;
  for (const auto& rel : hpar_relations(r.u_side, upar.words())) {
    for (std::size_t w = 0; w < mh && urels_die; ++w) {
      Matrix acc(f, mu * mh, 1);
      const auto hword = hpar.words().word_at(hpar.basis_words()[w]);
      for (const auto& [idx, c] : rel)
        acc = acc + lift_calR_image(r, hpar, upar, hword,
                                    upar.words().word_at(idx)).scaled(c);
      if (!acc.is_zero()) urels_die = false;
    }
    if (!urels_die) break;
  }
  out.verified.add("u-relation-images-vanish", urels_die);
  if (!rels_die || !urels_die)
    throw std::logic_error("lift_twist_calR: twist does not respect the relations");

  check_lift_flags(out.verified, out.map, hpar.algebra(), upar.algebra());
  require_pass(out.verified);
  return out;
}

namespace {

/// U #_T Q_H as an algebra on the basis u*dim(Q) + q.
AlgebraData lifted_smash_algebra(const AlgebraData& U, const AlgebraData& QH,
                                 const Matrix& t) {
  const std::size_t nu = U.dim, mh = QH.dim, N = nu * mh;
  const FieldSpec& f = U.field;
  AlgebraData D;
  D.field = f;
  D.dim = N;
  D.mult = Matrix(f, N, N * N);
  for (std::size_t a = 0; a < nu; ++a)
    for (std::size_t q1 = 0; q1 < mh; ++q1)
      for (std::size_t b = 0; b < nu; ++b)
        for (std::size_t q2 = 0; q2 < mh; ++q2) {
          const std::size_t col = (a * mh + q1) * N + (b * mh + q2);
          for_each_col(t, q1 * nu + b, [&](std::size_t e, const Scalar& c) {
            const std::size_t uT = e / mh, qT = e % mh;
            for_each_col(U.mult, a * nu + uT, [&](std::size_t p, const Scalar& cu) {
              for_each_col(QH.mult, qT * mh + q2, [&](std::size_t r2, const Scalar& cq) {
                D.mult.at(p * mh + r2, col) += c * cu * cq;
              });
            });
          });
        }
  D.unit = U.unit.kron(QH.unit);
  for (std::size_t a = 0; a < nu; ++a)
    for (std::size_t q = 0; q < mh; ++q)
      D.labels.push_back(U.label(a) + "#" + QH.label(q));
  require_pass(verify_algebra(D));
  return D;
}

}  // namespace

ParSmashIso par_of_smash_iso(const HopfData& u, const HopfData& h,
                             const TwistMap& r, const HopfData& smash_hopf,
                             const TruncatedQuotient& smash_par,
                             const TruncatedQuotient& hpar,
                             const LiftedTwist& t,
                             const TruncatedQuotient& upar_certificate) {
  const std::size_t nu = u.dim(), nh = h.dim();
  const FieldSpec& f = u.field();
  if (!smash_par.stabilized() || !hpar.stabilized())
    throw std::invalid_argument("par_of_smash_iso: truncations not stabilized");
  // "U has no partiality" certificate
  if (!upar_certificate.stabilized() || upar_certificate.dim() != nu ||
      rref(upar_certificate.bracket()).rank != nu)
    throw std::invalid_argument(
        "par_of_smash_iso: U_par = U certificate fails");
  if (smash_hopf.dim() != nu * nh ||
      smash_par.words().letters() != nu * nh)
    throw std::invalid_argument("par_of_smash_iso: dimension mismatch");

  ParSmashIso out;
  out.verified.suite = "par-of-smash";
  const std::size_t mh = hpar.dim();
  out.smash = lifted_smash_algebra(u.algebra, hpar.algebra(), t.map);
  const AlgebraData& D = out.smash;
  const AlgebraData& SP = smash_par.algebra();
  const std::size_t ms = SP.dim, N = nu * mh;

  // phi : (U # H)_par -> U # H_par on generators [u_a # h_j] -> u_a # [h_j]
  std::vector<Matrix> gen_img;
  gen_img.reserve(nu * nh);
  for (std::size_t a = 0; a < nu; ++a)
    for (std::size_t j = 0; j < nh; ++j) {
      Matrix v(f, N, 1);
      const Matrix q = hpar.bracket().col(j);
      for (std::size_t rr = 0; rr < mh; ++rr)
        if (!q.at(rr, 0).is_zero()) v.at(a * mh + rr, 0) = q.at(rr, 0);
      gen_img.push_back(v);
    }
  Matrix phi(f, N, ms);
  for (std::size_t i = 0; i < ms; ++i) {
    Matrix v = D.unit;
    for (auto l : smash_par.words().word_at(smash_par.basis_words()[i]))
      v = D.product(v, gen_img[l]);
    for (std::size_t rr = 0; rr < N; ++rr) phi.at(rr, i) = v.at(rr, 0);
  }

  // psi : U # H_par -> (U # H)_par,
  //   u (x) [h1]...[hk] -> [u # h1][1 # h2]...[1 # hk]
  Matrix psi(f, ms, N);
  for (std::size_t a = 0; a < nu; ++a)
    for (std::size_t q = 0; q < mh; ++q) {
      const auto word = hpar.words().word_at(hpar.basis_words()[q]);
      Matrix v(f, ms, 1);
      if (word.empty()) {
        // [u_a # 1_H]
        for (std::size_t j = 0; j < nh; ++j)
          if (!h.unit().at(j, 0).is_zero())
            v = v + smash_par.bracket().col(a * nh + j).scaled(h.unit().at(j, 0));
      } else {
        v = smash_par.bracket().col(a * nh + word[0]);
        for (std::size_t k = 1; k < word.size(); ++k) {
          Matrix gen(f, ms, 1);
          for (std::size_t b = 0; b < nu; ++b)
            if (!u.unit().at(b, 0).is_zero())
              gen = gen +
                    smash_par.bracket().col(b * nh + word[k]).scaled(u.unit().at(b, 0));
          v = SP.product(v, gen);
        }
      }
      for (std::size_t rr = 0; rr < ms; ++rr) psi.at(rr, a * mh + q) = v.at(rr, 0);
    }

  out.to_smash = algebra_morphism(SP, D, phi);
  out.from_smash = algebra_morphism(D, SP, psi);
  Report mp = verify_morphism(out.to_smash, MorphismKind::algebra);
  Report mq = verify_morphism(out.from_smash, MorphismKind::algebra);
  out.verified.merge(mp, "to-smash");
  out.verified.merge(mq, "from-smash");
  out.verified.add("inverse-1", psi * phi == Matrix::identity(f, ms));
  out.verified.add("inverse-2", phi * psi == Matrix::identity(f, N));
  require_pass(out.verified);
  return out;
}

namespace {

struct SubalgebraClosure {
  Matrix basis;                                      // ambient x k
  std::vector<std::pair<std::size_t, std::size_t>> parents;  // product trail
  std::vector<std::size_t> generator_of;             // which generator seeded
};

/// Basis of the unital subalgebra generated by the given columns, with each
/// basis element recorded as unit, a generator, or a product of an earlier
/// basis element with a generator.
SubalgebraClosure generated_subalgebra(const AlgebraData& A,
                                       const Matrix& generators) {
  const FieldSpec& f = A.field;
  SubalgebraClosure out;
  std::vector<Matrix> cols;
  Matrix span_rows(f, 0, A.dim);
  auto try_add = [&](const Matrix& v, std::size_t parent, std::size_t gen) {
    Subspace s(A.dim, span_rows);
    if (s.contains(v)) return false;
    span_rows = span_rows.vstack(v.transpose());
    cols.push_back(v);
    out.parents.emplace_back(parent, gen);
    return true;
  };
  const std::size_t npar = static_cast<std::size_t>(-1);
  try_add(A.unit, npar, npar);
  for (std::size_t g = 0; g < generators.cols(); ++g)
    try_add(generators.col(g), 0, g);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t b = 0; b < cols.size(); ++b)
      for (std::size_t g = 0; g < generators.cols(); ++g) {
        Matrix p = A.product(cols[b], generators.col(g));
        if (try_add(p, b, g)) grew = true;
      }
  }
  out.basis = Matrix(f, A.dim, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < A.dim; ++i)
      out.basis.at(i, j) = cols[j].at(i, 0);
  return out;
}

Matrix coords_in(const Matrix& basis, const Matrix& v) {
  auto x = solve(basis, v);
  if (!x) throw std::logic_error("element escapes the generated subalgebra");
  return *x;
}

}  // namespace

Report base_algebra_isos(const HopfData& u, const HopfData& h,
                         const TwistMap& r, const HopfData& smash_hopf,
                         const TruncatedQuotient& hpar, const LiftedTwist& t) {
  Report rep;
  rep.suite = "base-algebra";
  const std::size_t nu = u.dim(), nh = h.dim(), nuh = smash_hopf.dim();
  const std::size_t mh = hpar.dim();
  const FieldSpec& f = u.field();
  const AlgebraData D = lifted_smash_algebra(u.algebra, hpar.algebra(), t.map);
  const AlgebraData& Q = hpar.algebra();

  // W : U # H -> D, u_a # h_j -> u_a # [h_j]
  Matrix W(f, nu * mh, nuh);
  for (std::size_t a = 0; a < nu; ++a)
    for (std::size_t j = 0; j < nh; ++j) {
      const Matrix q = hpar.bracket().col(j);
      for (std::size_t rr = 0; rr < mh; ++rr)
        W.at(a * mh + rr, a * nh + j) = q.at(rr, 0);
    }

  auto eps_family = [&](const HopfData& src, const AlgebraData& tgt,
                        const Matrix& rep_map, bool tilde) {
    Matrix out(f, tgt.dim, src.dim());
    const Matrix repS = rep_map * src.antipode;
    for (std::size_t i = 0; i < src.dim(); ++i) {
      Matrix col(f, tgt.dim, 1);
      for_each_comult(src, i, [&](std::size_t a, std::size_t b, const Scalar& c) {
        col = col + (tilde ? tgt.product(repS.col(a), rep_map.col(b))
                           : tgt.product(rep_map.col(a), repS.col(b)))
                        .scaled(c);
      });
      for (std::size_t rr = 0; rr < tgt.dim; ++rr) out.at(rr, i) = col.at(rr, 0);
    }
    return out;
  };
  const Matrix Ew = eps_family(smash_hopf, D, W, false);
  const Matrix Ew_tilde = eps_family(smash_hopf, D, W, true);
  const Matrix Eq = eps_family(h, Q, hpar.bracket(), false);
  const Matrix Eq_tilde = eps_family(h, Q, hpar.bracket(), true);

  // black action u |>. h = eps_U(u^{R'}) h^{R'}
  TwistMap rp = invert_twist(r);
  Matrix black_r(f, nh, nu * nh);
  for (std::size_t j = 0; j < nu; ++j)
    for (std::size_t i = 0; i < nh; ++i)
      for_each_col(rp.map, j * nh + i, [&](std::size_t e, const Scalar& c) {
        black_r.at(e / nu, j * nh + i) += c * u.counit().at(0, e % nu);
      });

  const Matrix iota = u.unit().kron(Matrix::identity(f, mh));  // Q -> D
  rep.add("eps-identity", Ew == iota * (Eq * black_r));
  rep.add("eps-tilde-identity",
          Ew_tilde == iota * Eq_tilde * u.counit().kron(Matrix::identity(f, nh)));

  for (bool tilde : {false, true}) {
    const std::string tag = tilde ? "tilde." : "";
    const Matrix& genW = tilde ? Ew_tilde : Ew;
    const Matrix& genQ = tilde ? Eq_tilde : Eq;
    SubalgebraClosure SW = generated_subalgebra(D, genW);
    SubalgebraClosure SQ = generated_subalgebra(Q, genQ);
    rep.add(tag + "subalgebra-dims", true, "",
            std::to_string(SW.basis.cols()) + " vs " +
                std::to_string(SQ.basis.cols()));

    // alpha : S_W -> S_Q through the embedding iota
    const std::size_t kw = SW.basis.cols(), kq = SQ.basis.cols();
    bool alpha_ok = true;
    Matrix alpha(f, kq, kw);
    try {
      for (std::size_t b = 0; b < kw; ++b) {
        Matrix qvec = coords_in(iota, SW.basis.col(b));
        Matrix c = coords_in(SQ.basis, qvec);
        for (std::size_t rr = 0; rr < kq; ++rr) alpha.at(rr, b) = c.at(rr, 0);
      }
    } catch (const std::logic_error&) {
      alpha_ok = false;
    }
    rep.add(tag + "alpha-lands-in-base", alpha_ok);
    if (!alpha_ok) continue;

    // alpha' : S_Q -> S_W along the construction trail,
    // eps_h -> eps_{1 # h} (tilde version analogous)
    Matrix genW_of_h(f, D.dim, h.dim());
    for (std::size_t j = 0; j < nh; ++j) {
      Matrix x(f, D.dim, 1);
      for (std::size_t a = 0; a < nu; ++a) {
        const Scalar& cu = u.unit().at(a, 0);
        if (!cu.is_zero()) x = x + genW.col(a * nh + j).scaled(cu);
      }
      for (std::size_t rr = 0; rr < D.dim; ++rr) genW_of_h.at(rr, j) = x.at(rr, 0);
    }
    std::vector<Matrix> alpha_img(kq, Matrix(f, D.dim, 1));
    bool aprime_ok = true;
    for (std::size_t b = 0; b < kq; ++b) {
      const auto [parent, gen] = SQ.parents[b];
      if (parent == static_cast<std::size_t>(-1))
        alpha_img[b] = D.unit;
      else if (parent == 0)
        alpha_img[b] = genW_of_h.col(gen);
      else
        alpha_img[b] = D.product(alpha_img[parent], genW_of_h.col(gen));
    }
    Matrix aprime(f, kw, kq);
    try {
      for (std::size_t b = 0; b < kq; ++b) {
        Matrix c = coords_in(SW.basis, alpha_img[b]);
        for (std::size_t rr = 0; rr < kw; ++rr) aprime.at(rr, b) = c.at(rr, 0);
      }
    } catch (const std::logic_error&) {
      aprime_ok = false;
    }
    rep.add(tag + "alpha-prime-lands-in-base", aprime_ok);
    if (!aprime_ok) continue;
    rep.add(tag + "mutually-inverse",
            alpha * aprime == Matrix::identity(f, kq) &&
                aprime * alpha == Matrix::identity(f, kw));

    // multiplicativity of alpha on the subalgebra basis
    bool alpha_mult = true;
    for (std::size_t i = 0; i < kw && alpha_mult; ++i)
      for (std::size_t j = 0; j < kw; ++j) {
        Matrix pw = D.product(SW.basis.col(i), SW.basis.col(j));
        Matrix lhs = alpha * coords_in(SW.basis, pw);
        Matrix rhs = coords_in(
            SQ.basis, Q.product(SQ.basis * alpha.col(i), SQ.basis * alpha.col(j)));
        if (!(lhs == rhs)) { alpha_mult = false; break; }
      }
    rep.add(tag + "alpha-multiplicative", alpha_mult);
  }
  return rep;
}

GroupTable subgroup_table(const GroupTable& g,
                          const std::vector<std::size_t>& elements) {
  std::vector<std::size_t> pos(g.order(), static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < elements.size(); ++k) pos[elements[k]] = k;
  if (elements.empty() || elements[0] != 0)
    throw std::invalid_argument("subgroup must list the identity first");
  GroupTable s;
  s.table.assign(elements.size(), std::vector<std::size_t>(elements.size()));
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = 0; b < elements.size(); ++b) {
      std::size_t p = g.mul(elements[a], elements[b]);
      if (pos[p] == static_cast<std::size_t>(-1))
        throw std::invalid_argument("subset is not closed under multiplication");
      s.table[a][b] = pos[p];
    }
  for (auto e : elements) s.names.push_back(g.name(e));
  std::string why;
  if (!s.is_group(&why))
    throw std::invalid_argument("subset is not a subgroup: " + why);
  return s;
}

TwistMap exact_factorization_twist(const GroupTable& g,
                                   const std::vector<std::size_t>& m_elements,
                                   const std::vector<std::size_t>& l_elements,
                                   const FieldSpec& f) {
  const std::size_t nm = m_elements.size(), nl = l_elements.size();
  if (nm * nl != g.order())
    throw std::invalid_argument("not an exact factorization: |M||L| != |G|");
  // factorization table: g = m l uniquely
  std::vector<std::pair<std::size_t, std::size_t>> factor(
      g.order(), {static_cast<std::size_t>(-1), 0});
  for (std::size_t a = 0; a < nm; ++a)
    for (std::size_t b = 0; b < nl; ++b) {
      std::size_t p = g.mul(m_elements[a], l_elements[b]);
      if (factor[p].first != static_cast<std::size_t>(-1))
        throw std::invalid_argument(
            "not an exact factorization: products collide");
      factor[p] = {a, b};
    }

  GroupTable mt = subgroup_table(g, m_elements);
  GroupTable lt = subgroup_table(g, l_elements);
  TwistMap r;
  r.h_side = group_algebra(lt, f);
  r.u_side = group_algebra(mt, f);
  r.map = Matrix(f, nm * nl, nl * nm);
  // R(l (x) m) = m' (x) l' with l m = m' l'
  for (std::size_t b = 0; b < nl; ++b)
    for (std::size_t a = 0; a < nm; ++a) {
      std::size_t p = g.mul(l_elements[b], m_elements[a]);
      r.map.at(factor[p].first * nl + factor[p].second, b * nm + a) =
          Scalar::one(f);
    }
  Report rep = check_twist(r);
  if (!r.flags.all())
    throw std::logic_error("exact factorization twist failed its flag checks");
  return r;
}

GammaMResult gamma_M_groupoid(const GroupTable& g,
                              const std::vector<std::size_t>& m_elements,
                              const std::vector<std::size_t>& l_elements,
                              const FieldSpec& f, std::size_t trunc_degree) {
  GammaMResult out;
  out.verified.suite = "gamma-M";
  TwistMap r = exact_factorization_twist(g, m_elements, l_elements, f);
  const std::size_t nm = m_elements.size(), nl = l_elements.size();

  // left cosets of M, indexed; coset 0 is M itself
  out.coset_of.assign(g.order(), static_cast<std::size_t>(-1));
  std::vector<std::size_t> coset_rep;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (out.coset_of[x] != static_cast<std::size_t>(-1)) continue;
    const std::size_t c = coset_rep.size();
    coset_rep.push_back(x);
    for (auto m : m_elements) out.coset_of[g.mul(x, m)] = c;
  }
  const std::size_t ncos = coset_rep.size();
  if (out.coset_of[0] != 0)
    throw std::logic_error("coset enumeration did not start at M");

  // arrows (A, g) with M in A and g^{-1}M in A
  for (std::uint32_t mask = 0; mask < (1u << ncos); ++mask) {
    if (!(mask & 1u)) continue;
    for (std::size_t x = 0; x < g.order(); ++x)
      if (mask & (1u << out.coset_of[g.inverse(x)]))
        out.arrows.emplace_back(mask, x);
  }

  const std::size_t na = out.arrows.size();
  auto act_mask = [&](std::size_t x, std::uint32_t mask) {
    std::uint32_t res = 0;
    for (std::size_t c = 0; c < ncos; ++c)
      if (mask & (1u << c)) res |= 1u << out.coset_of[g.mul(x, coset_rep[c])];
    return res;
  };
  auto arrow_index = [&](std::uint32_t mask, std::size_t x) -> std::size_t {
    for (std::size_t k = 0; k < na; ++k)
      if (out.arrows[k].first == mask && out.arrows[k].second == x) return k;
    throw std::out_of_range("no such arrow in Gamma_M");
  };

  out.algebra.field = f;
  out.algebra.dim = na;
  out.algebra.mult = Matrix(f, na, na * na);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const auto& [amask, agel] = out.arrows[i];
      const auto& [bmask, bgel] = out.arrows[j];
      if (amask != act_mask(bgel, bmask)) continue;
      out.algebra.mult.at(arrow_index(bmask, g.mul(agel, bgel)), i * na + j) =
          Scalar::one(f);
    }
  out.algebra.unit = Matrix(f, na, 1);
  for (std::size_t i = 0; i < na; ++i)
    if (out.arrows[i].second == 0) out.algebra.unit.at(i, 0) = Scalar::one(f);
  for (std::size_t i = 0; i < na; ++i)
    out.algebra.labels.push_back("(" + std::to_string(out.arrows[i].first) +
                                 "," + g.name(out.arrows[i].second) + ")");
  out.verified.merge(verify_algebra(out.algebra), "groupoid-algebra");

  // k_par L and the smash kM #_T k_par L
  TruncatedQuotient ql = truncated_hpar(r.h_side, trunc_degree);
  if (!ql.stabilized())
    throw std::invalid_argument("gamma_M: k_par L did not stabilize at this degree");
  LiftedTwist t = lift_twist_T(r, ql);
  out.smash = lifted_smash_algebra(r.u_side.algebra, ql.algebra(), t.map);
  const std::size_t ml = ql.dim();

  // phi : L -> G/M must be a bijection (exactness of G = LM)
  std::vector<std::size_t> phi_of_l(nl);
  {
    std::vector<bool> seen(ncos, false);
    for (std::size_t b = 0; b < nl; ++b) {
      phi_of_l[b] = out.coset_of[l_elements[b]];
      if (seen[phi_of_l[b]])
        throw std::logic_error("phi : L -> G/M is not injective");
      seen[phi_of_l[b]] = true;
    }
  }

  // theta on generators: m # [l] -> sum_{A owns e, l^{-1}} (phi(A), m l)
  auto theta_gen = [&](std::size_t m_idx, std::size_t l_idx) {
    Matrix v(f, na, 1);
    const std::size_t linv_pos = [&] {
      const std::size_t inv = g.inverse(l_elements[l_idx]);
      for (std::size_t b = 0; b < nl; ++b)
        if (l_elements[b] == inv) return b;
      throw std::logic_error("L not closed under inverses");
    }();
    for (std::uint32_t lmask = 0; lmask < (1u << nl); ++lmask) {
      if (!(lmask & 1u) || !(lmask & (1u << linv_pos))) continue;
      std::uint32_t cmask = 0;
      for (std::size_t b = 0; b < nl; ++b)
        if (lmask & (1u << b)) cmask |= 1u << phi_of_l[b];
      v.at(arrow_index(cmask, g.mul(m_elements[m_idx], l_elements[l_idx])), 0) +=
          Scalar::one(f);
    }
    return v;
  };

  Matrix theta(f, na, nm * ml);
  for (std::size_t a = 0; a < nm; ++a)
    for (std::size_t q = 0; q < ml; ++q) {
      const auto word = ql.words().word_at(ql.basis_words()[q]);
      Matrix v = word.empty() ? theta_gen(a, 0)
                              : theta_gen(a, word[0]);
      for (std::size_t k = 1; k < word.size(); ++k)
        v = out.algebra.product(v, theta_gen(0, word[k]));
      for (std::size_t rr = 0; rr < na; ++rr) theta.at(rr, a * ml + q) = v.at(rr, 0);
    }
  out.theta = algebra_morphism(out.smash, out.algebra, theta);
  Report morph = verify_morphism(out.theta, MorphismKind::algebra);
  out.verified.merge(morph, "theta");
  out.verified.add("theta-bijective",
                   na == nm * ml && rref(theta).rank == na);
  require_pass(out.verified);
  return out;
}

GradedCompatResult graded_partial_compat(
    const GroupTable& fgrp, const GroupTable& ggrp,
    const std::vector<std::vector<std::size_t>>& f_on_g, const PartialRep& eta,
    const std::vector<Matrix>& graders, const TruncatedQuotient& qf) {
  GradedCompatResult out;
  out.report.suite = "graded-partial";
  const FieldSpec& fld = eta.source.field();
  const std::size_t nf = fgrp.order(), ng = ggrp.order();
  if (graders.size() != ng || f_on_g.size() != nf)
    throw std::invalid_argument("graded_partial_compat: shape mismatch");
  const std::size_t dv = graders[0].rows();

  bool idem = true, orth = true, complete = true;
  Matrix sum(fld, dv, dv);
  for (std::size_t a = 0; a < ng; ++a) {
    if (!(graders[a] * graders[a] == graders[a])) idem = false;
    for (std::size_t b = 0; b < ng; ++b)
      if (a != b && !(graders[a] * graders[b]).is_zero()) orth = false;
    sum = sum + graders[a];
  }
  complete = sum == Matrix::identity(fld, dv);
  out.report.add("graders-idempotent", idem);
  out.report.add("graders-orthogonal", orth);
  out.report.add("graders-complete", complete);
  if (!(idem && orth && complete)) return out;

  // eta(f) as dv x dv blocks from the endomorphism-algebra coordinates
  auto eta_mat = [&](std::size_t ff) {
    Matrix m(fld, dv, dv);
    const Matrix col = eta.map.col(ff);
    for (std::size_t i = 0; i < dv; ++i)
      for (std::size_t j = 0; j < dv; ++j) m.at(i, j) = col.at(i * dv + j, 0);
    return m;
  };
  bool compat = true;
  std::string cw;
  for (std::size_t ff = 0; ff < nf && compat; ++ff)
    for (std::size_t gg = 0; gg < ng; ++gg)
      if (!(eta_mat(ff) * graders[gg] ==
            graders[f_on_g[ff][gg]] * eta_mat(ff))) {
        compat = false;
        cw = "(" + fgrp.name(ff) + "," + ggrp.name(gg) + ")";
        break;
      }
  out.report.add("grading-compatibility", compat, cw);
  if (!compat) return out;

  // module over kG* #_T k_par F
  HopfData kf = group_algebra(fgrp, fld);
  HopfData gstar = dual_group_algebra(ggrp, fld);
  Matrix action(fld, ng, nf * ng);
  for (std::size_t ff = 0; ff < nf; ++ff)
    for (std::size_t gg = 0; gg < ng; ++gg)
      action.at(f_on_g[ff][gg], ff * ng + gg) = Scalar::one(fld);
  TwistMap r = module_algebra_twist(kf, gstar, action);
  check_twist(r);
  LiftedTwist t = lift_twist_T(r, qf);
  AlgebraData D = lifted_smash_algebra(gstar.algebra, qf.algebra(), t.map);
  out.smash = D;

  const std::size_t mqf = qf.dim();
  AlgebraData endv = endomorphism_algebra(fld, dv);
  Matrix rho(fld, dv * dv, D.dim);
  for (std::size_t gg = 0; gg < ng; ++gg)
    for (std::size_t q = 0; q < mqf; ++q) {
      Matrix m = graders[gg];
      for (auto l : qf.words().word_at(qf.basis_words()[q])) m = m * eta_mat(l);
      for (std::size_t i = 0; i < dv; ++i)
        for (std::size_t j = 0; j < dv; ++j)
          rho.at(i * dv + j, gg * mqf + q) = m.at(i, j);
    }
  Report morph = verify_morphism(algebra_morphism(D, endv, rho),
                                 MorphismKind::algebra);
  out.report.merge(morph, "module");
  out.module_map = rho;
  return out;
}

DrinfeldResult drinfeld_twist(const HopfData& h) {
  const std::size_t n = h.dim();
  const FieldSpec& f = h.field();
  if (!h.antipode_inverse && !h.antipode.inverse())
    throw std::invalid_argument("drinfeld_twist: antipode must be invertible");
  HopfData hh = h;
  if (!hh.antipode_inverse) hh.antipode_inverse = *h.antipode.inverse();
  HopfData u = opposite_hopf(dual_hopf(hh));

  // R(h (x) psi) = psi_1(S(h_1)) psi_3(h_3) psi_2 (x) h_2 on dual bases
  TwistMap r;
  r.h_side = hh;
  r.u_side = u;
  r.map = Matrix(f, n * n, n * n);
  // Delta^2 on H* has coefficients <p_j, (e_a e_b) e_c>
  std::vector<std::map<std::size_t, Scalar>> dual2(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Matrix ab = hh.mult().col(a * n + b);
      for (std::size_t x = 0; x < n; ++x) {
        if (ab.at(x, 0).is_zero()) continue;
        for (std::size_t c = 0; c < n; ++c)
          for_each_col(hh.mult(), x * n + c, [&](std::size_t j, const Scalar& v) {
            auto [it, fresh] = dual2[j].try_emplace((a * n + b) * n + c,
                                                    Scalar::zero(f));
            it->second += ab.at(x, 0) * v;
          });
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for_each_comult2(hh, i, [&](std::size_t a1, std::size_t a2, std::size_t a3,
                                  const Scalar& ch) {
        for (const auto& [abc, cu] : dual2[j]) {
          const std::size_t b1 = abc / (n * n), b2 = (abc / n) % n,
                            b3 = abc % n;
          if (b3 != a3) continue;
          const Scalar& sc = hh.antipode.at(b1, a1);
          if (sc.is_zero()) continue;
          r.map.at(b2 * n + a2, i * n + j) += ch * cu * sc;
        }
      });
    }
  Report rep = check_twist(r);
  if (!r.flags.all())
    throw std::logic_error("Drinfel'd twist failed its flag checks");
  DrinfeldResult out{r, build_smash(r)};
  if (!out.double_algebra.hopf)
    throw std::logic_error("Drinfel'd double is not a Hopf algebra");
  return out;
}

}  // namespace hopfpar
