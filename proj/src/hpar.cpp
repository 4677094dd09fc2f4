#include "hopfpar/hpar.hpp"

namespace hopfpar {

namespace {

using Acc = std::map<std::uint32_t, Scalar, std::greater<>>;

void add_to(Acc& acc, std::uint32_t idx, const Scalar& c) {
  auto [it, fresh] = acc.try_emplace(idx, c);
  if (!fresh) it->second += c;
}

template <class F>
void for_each_comult(const HopfData& h, std::size_t i, F&& f) {
  const std::size_t n = h.dim();
  for (std::size_t ab = 0; ab < n * n; ++ab) {
    const Scalar& d = h.comult().at(ab, i);
    if (!d.is_zero()) f(ab / n, ab % n, d);
  }
}

}  // namespace

std::vector<SparseVec> hpar_relations(const HopfData& h, const WordSpace& words) {
  const std::size_t n = h.dim();
  // indices are degree-prefix stable, so a widened space is safe for small
  // truncation windows; oversized relations are dropped by the consumer
  const WordSpace ws =
      words.max_degree() >= 3 ? words : WordSpace(words.letters(), 3);
  std::vector<SparseVec> rels;

  {  // [1_H] = empty word
    Acc acc;
    for (std::size_t c = 0; c < n; ++c)
      if (!h.unit().at(c, 0).is_zero())
        add_to(acc, ws.index_of({c}), h.unit().at(c, 0));
    add_to(acc, ws.index_of({}), -Scalar::one(h.field()));
    rels.push_back(to_sparse(acc));
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Acc acc2, acc3;
      // h (x) k1 (x) S(k2) - hk1 (x) S(k2), h = e_i, k = e_j
      for_each_comult(h, j, [&](std::size_t a, std::size_t b, const Scalar& d) {
        for (std::size_t c = 0; c < n; ++c) {
          const Scalar& s = h.antipode.at(c, b);
          if (s.is_zero()) continue;
          add_to(acc2, ws.index_of({i, a, c}), d * s);
          for (std::size_t p = 0; p < n; ++p) {
            const Scalar& m = h.mult().at(p, i * n + a);
            if (!m.is_zero()) add_to(acc2, ws.index_of({p, c}), -(d * s * m));
          }
        }
      });
      // h1 (x) S(h2) (x) k - h1 (x) S(h2) k, h = e_i, k = e_j
      for_each_comult(h, i, [&](std::size_t a, std::size_t b, const Scalar& d) {
        for (std::size_t c = 0; c < n; ++c) {
          const Scalar& s = h.antipode.at(c, b);
          if (s.is_zero()) continue;
          add_to(acc3, ws.index_of({a, c, j}), d * s);
          for (std::size_t p = 0; p < n; ++p) {
            const Scalar& m = h.mult().at(p, c * n + j);
            if (!m.is_zero()) add_to(acc3, ws.index_of({a, p}), -(d * s * m));
          }
        }
      });
      SparseVec r2 = to_sparse(acc2), r3 = to_sparse(acc3);
      if (!r2.empty()) rels.push_back(std::move(r2));
      if (!r3.empty()) rels.push_back(std::move(r3));
    }
  return rels;
}

std::vector<SparseVec> apar_relations(const HopfData& h, const WordSpace& words) {
  const std::size_t n = h.dim();
  const WordSpace ws =
      words.max_degree() >= 2 ? words : WordSpace(words.letters(), 2);
  std::vector<SparseVec> rels;

  {  // eps_{1_H} = 1
    Acc acc;
    for (std::size_t c = 0; c < n; ++c)
      if (!h.unit().at(c, 0).is_zero())
        add_to(acc, ws.index_of({c}), h.unit().at(c, 0));
    add_to(acc, ws.index_of({}), -Scalar::one(h.field()));
    rels.push_back(to_sparse(acc));
  }

  for (std::size_t i = 0; i < n; ++i) {  // eps_h = eps_{h1} eps_{h2}
    Acc acc;
    add_to(acc, ws.index_of({i}), Scalar::one(h.field()));
    for_each_comult(h, i, [&](std::size_t a, std::size_t b, const Scalar& d) {
      add_to(acc, ws.index_of({a, b}), -d);
    });
    SparseVec r = to_sparse(acc);
    if (!r.empty()) rels.push_back(std::move(r));
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // eps_{h1} eps_{h2 k} = eps_{h1 k} eps_{h2}
      Acc acc;
      for_each_comult(h, i, [&](std::size_t a, std::size_t b, const Scalar& d) {
        for (std::size_t p = 0; p < n; ++p) {
          const Scalar& mb = h.mult().at(p, b * n + j);
          if (!mb.is_zero()) add_to(acc, ws.index_of({a, p}), d * mb);
          const Scalar& ma = h.mult().at(p, a * n + j);
          if (!ma.is_zero()) add_to(acc, ws.index_of({p, b}), -(d * ma));
        }
      });
      SparseVec r = to_sparse(acc);
      if (!r.empty()) rels.push_back(std::move(r));
    }
  return rels;
}

TruncatedQuotient truncated_hpar(const HopfData& h, std::size_t degree) {
  WordSpace ws(h.dim(), degree);
  return TruncatedQuotient(h.field(), h.dim(), degree, hpar_relations(h, ws),
                           h.algebra.labels);
}

TruncatedQuotient truncated_apar(const HopfData& h, std::size_t degree) {
  WordSpace ws(h.dim(), degree);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < h.dim(); ++i)
    labels.push_back("eps_" + h.label(i));
  return TruncatedQuotient(h.field(), h.dim(), degree, apar_relations(h, ws),
                           std::move(labels));
}

Report stabilization_report(const TruncatedQuotient& t) {
  Report rep;
  rep.suite = "stabilization";
  rep.add("stabilized", true, "", t.stabilized() ? "true" : "false");
  if (t.stabilized()) {
    rep.add("stable-degree", true, "", std::to_string(t.stable_degree()));
    rep.add("dimension", true, "", std::to_string(t.dim()));
  }
  rep.merge(t.certificate());
  return rep;
}

PartialRep bracket_rep(const HopfData& h, const TruncatedQuotient& hpar) {
  return make_partial_rep(h, hpar.algebra(), hpar.bracket());
}

MorphismData forgetful_map(const HopfData& h, const TruncatedQuotient& hpar) {
  const std::size_t m = hpar.dim();
  Matrix fm(h.field(), h.dim(), m);
  for (std::size_t i = 0; i < m; ++i) {
    Matrix x = h.unit();
    for (auto l : hpar.words().word_at(hpar.basis_words()[i]))
      x = h.algebra.product(x, h.basis_element(l));
    for (std::size_t r = 0; r < h.dim(); ++r) fm.at(r, i) = x.at(r, 0);
  }
  MorphismData md = algebra_morphism(hpar.algebra(), h.algebra, fm);
  require_pass(verify_morphism(md, MorphismKind::algebra));
  if (!(fm * hpar.bracket() == Matrix::identity(h.field(), h.dim())))
    throw std::logic_error("forgetful map does not split the bracket");
  return md;
}

std::pair<MorphismData, MorphismData> iso_kparG(const GroupoidAlgebra& ga,
                                                const TruncatedQuotient& trunc,
                                                const HopfData& group_hopf) {
  const GroupoidGamma& gamma = ga.groupoid;
  const std::size_t order = gamma.group.order();
  if (!trunc.stabilized())
    throw std::invalid_argument("iso_kparG needs a stabilized truncation");
  if (trunc.words().letters() != order || trunc.dim() != gamma.size())
    throw std::invalid_argument("iso_kparG: dimension mismatch");
  const std::size_t m = trunc.dim();
  const AlgebraData& Q = trunc.algebra();
  const FieldSpec& f = Q.field;

  // eps_h = [h][h^{-1}] inside the truncation
  std::vector<Matrix> eps(order, Matrix(f, m, 1));
  for (std::size_t hh = 0; hh < order; ++hh)
    eps[hh] = Q.product(trunc.bracket().col(hh),
                        trunc.bracket().col(gamma.group.inverse(hh)));

  Matrix phi(f, m, gamma.size());  // kGamma -> H_par
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    const auto& arrow = gamma.arrows[k];
    Matrix v = trunc.bracket().col(arrow.element);
    for (std::size_t hh = 0; hh < order; ++hh) {
      if (arrow.subset & (1u << hh))
        v = Q.product(v, eps[hh]);
      else
        v = Q.product(v, Q.unit - eps[hh]);
    }
    for (std::size_t r = 0; r < m; ++r) phi.at(r, k) = v.at(r, 0);
  }

  // [g] -> sum of arrows (A, g) with 1, g^{-1} in A, extended over words
  Matrix gen_images(f, gamma.size(), order);
  for (std::size_t gg = 0; gg < order; ++gg)
    for (std::size_t k = 0; k < gamma.size(); ++k)
      if (gamma.arrows[k].element == gg)
        gen_images.at(k, gg) = Scalar::one(f);
  Matrix psi(f, gamma.size(), m);
  for (std::size_t i = 0; i < m; ++i) {
    Matrix v = ga.algebra.unit;
    for (auto l : trunc.words().word_at(trunc.basis_words()[i]))
      v = ga.algebra.product(v, gen_images.col(l));
    for (std::size_t r = 0; r < gamma.size(); ++r) psi.at(r, i) = v.at(r, 0);
  }

  MorphismData phi_m = algebra_morphism(ga.algebra, Q, phi);
  MorphismData psi_m = algebra_morphism(Q, ga.algebra, psi);
  require_pass(verify_morphism(phi_m, MorphismKind::algebra));
  require_pass(verify_morphism(psi_m, MorphismKind::algebra));
  if (!(psi * phi == Matrix::identity(f, gamma.size())) ||
      !(phi * psi == Matrix::identity(f, m)))
    throw std::logic_error("iso_kparG maps are not mutually inverse");
  return {phi_m, psi_m};
}

AparAction partial_action_on_apar(const HopfData& h,
                                  const TruncatedQuotient& apar,
                                  const TruncatedQuotient& hpar) {
  if (!apar.stabilized() || !hpar.stabilized())
    throw std::invalid_argument("partial_action_on_apar needs stabilized quotients");
  const std::size_t n = h.dim(), ma = apar.dim(), mh = hpar.dim();
  const AlgebraData& QA = apar.algebra();
  const AlgebraData& QH = hpar.algebra();
  const FieldSpec& f = h.field();

  // eps-generators inside H_par
  std::vector<Matrix> eps(n, Matrix(f, mh, 1));
  for (std::size_t i = 0; i < n; ++i) {
    Matrix v(f, mh, 1);
    for_each_comult(h, i, [&](std::size_t a, std::size_t b, const Scalar& d) {
      for (std::size_t c = 0; c < n; ++c) {
        const Scalar& s = h.antipode.at(c, b);
        if (!s.is_zero())
          v = v + QH.product(hpar.bracket().col(a), hpar.bracket().col(c))
                      .scaled(d * s);
      }
    });
    eps[i] = v;
  }

  // embedding A_par -> H_par on basis words
  Matrix emb(f, mh, ma);
  for (std::size_t i = 0; i < ma; ++i) {
    Matrix v = QH.unit;
    for (auto l : apar.words().word_at(apar.basis_words()[i]))
      v = QH.product(v, eps[l]);
    for (std::size_t r = 0; r < mh; ++r) emb.at(r, i) = v.at(r, 0);
  }
  if (rref(emb).rank != ma)
    throw std::logic_error("A_par does not embed into H_par");

  AparAction out{Matrix(f, ma, n * ma), emb, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t w = 0; w < ma; ++w) {
      Matrix v(f, mh, 1);
      for_each_comult(h, i, [&](std::size_t a, std::size_t b, const Scalar& d) {
        for (std::size_t c = 0; c < n; ++c) {
          const Scalar& s = h.antipode.at(c, b);
          if (!s.is_zero())
            v = v + QH.product(hpar.bracket().col(a),
                               QH.product(emb.col(w), hpar.bracket().col(c)))
                        .scaled(d * s);
        }
      });
      auto x = solve(emb, v);
      if (!x)
        throw std::logic_error("action of H does not preserve A_par");
      for (std::size_t r = 0; r < ma; ++r)
        out.action.at(r, i * ma + w) = x->at(r, 0);
    }
  out.report = check_partial_action(h, QA, out.action);
  require_pass(out.report);
  return out;
}

PartialSmash partial_smash(const TruncatedQuotient& apar, const HopfData& h,
                           const AparAction& act,
                           const TruncatedQuotient& hpar) {
  const std::size_t n = h.dim(), ma = apar.dim();
  const std::size_t N = ma * n;
  const AlgebraData& QA = apar.algebra();
  const FieldSpec& f = h.field();

  // product on A (x) H: (x (x) p)(y (x) q) = x (p1 . y) (x) p2 q
  auto big_product = [&](const Matrix& left, const Matrix& right) {
    Matrix out(f, N, 1);
    for (std::size_t xp = 0; xp < N; ++xp) {
      const Scalar& cl = left.at(xp, 0);
      if (cl.is_zero()) continue;
      const std::size_t x = xp / n, p = xp % n;
      for (std::size_t yq = 0; yq < N; ++yq) {
        const Scalar& cr = right.at(yq, 0);
        if (cr.is_zero()) continue;
        const std::size_t y = yq / n, q = yq % n;
        for_each_comult(h, p, [&](std::size_t p1, std::size_t p2,
                                  const Scalar& d) {
          const Matrix acted = act.action.col(p1 * ma + y);
          const Matrix apart = QA.product(QA.basis_element(x), acted);
          const Matrix hpart = h.mult().col(p2 * n + q);
          for (std::size_t r1 = 0; r1 < ma; ++r1) {
            if (apart.at(r1, 0).is_zero()) continue;
            for (std::size_t r2 = 0; r2 < n; ++r2)
              if (!hpart.at(r2, 0).is_zero())
                out.at(r1 * n + r2, 0) +=
                    cl * cr * d * apart.at(r1, 0) * hpart.at(r2, 0);
          }
        });
      }
    }
    return out;
  };

  // projection onto (A (x) H)(1 (x) 1)
  const Matrix one = QA.unit.kron(h.unit());
  Matrix proj_full(f, N, N);
  for (std::size_t i = 0; i < N; ++i) {
    Matrix e(f, N, 1);
    e.at(i, 0) = Scalar::one(f);
    Matrix p = big_product(e, one);
    for (std::size_t r = 0; r < N; ++r) proj_full.at(r, i) = p.at(r, 0);
  }
  if (!(proj_full * proj_full == proj_full))
    throw std::logic_error("partial smash projection is not idempotent");

  Subspace im = image(proj_full);
  const std::size_t ms = im.dim();
  Matrix section = im.basis().transpose();  // N x ms
  // coordinates with respect to the image basis
  auto coords = [&](const Matrix& v) {
    auto x = solve(section, v);
    if (!x) throw std::logic_error("partial smash product escapes the image");
    return *x;
  };

  PartialSmash out;
  out.projection = Matrix(f, ms, N);
  for (std::size_t i = 0; i < N; ++i) {
    Matrix c = coords(proj_full.col(i));
    for (std::size_t r = 0; r < ms; ++r) out.projection.at(r, i) = c.at(r, 0);
  }
  out.section = section;
  out.algebra.field = f;
  out.algebra.dim = ms;
  out.algebra.mult = Matrix(f, ms, ms * ms);
  for (std::size_t i = 0; i < ms; ++i)
    for (std::size_t j = 0; j < ms; ++j) {
      Matrix p = coords(big_product(section.col(i), section.col(j)));
      for (std::size_t r = 0; r < ms; ++r)
        out.algebra.mult.at(r, i * ms + j) = p.at(r, 0);
    }
  out.algebra.unit = coords(one);
  for (std::size_t i = 0; i < ms; ++i)
    out.algebra.labels.push_back("s" + std::to_string(i));
  require_pass(verify_algebra(out.algebra));

  // [h] -> 1 # h extends to an isomorphism from the stabilized H_par
  if (!hpar.stabilized())
    throw std::invalid_argument("partial_smash needs a stabilized H_par");
  const std::size_t mh = hpar.dim();
  std::vector<Matrix> gen(n, Matrix(f, ms, 1));
  for (std::size_t g = 0; g < n; ++g) {
    Matrix e(f, N, 1);
    for (std::size_t r1 = 0; r1 < ma; ++r1)
      if (!QA.unit.at(r1, 0).is_zero()) e.at(r1 * n + g, 0) = QA.unit.at(r1, 0);
    gen[g] = coords(proj_full * e);
  }
  Matrix iso(f, ms, mh);
  for (std::size_t i = 0; i < mh; ++i) {
    Matrix v = out.algebra.unit;
    for (auto l : hpar.words().word_at(hpar.basis_words()[i]))
      v = out.algebra.product(v, gen[l]);
    for (std::size_t r = 0; r < ms; ++r) iso.at(r, i) = v.at(r, 0);
  }
  out.iso_from_hpar = algebra_morphism(hpar.algebra(), out.algebra, iso);
  require_pass(verify_morphism(out.iso_from_hpar, MorphismKind::algebra));
  if (ms != mh || rref(iso).rank != mh)
    throw std::logic_error("H_par -> A_par # H is not an isomorphism");
  return out;
}

HopfCategoryResult hopf_category_weak_hopf(const HopfData& u,
                                           const GroupTable& g,
                                           const std::vector<Matrix>& action) {
  const FieldSpec& f = u.field();
  const std::size_t du = u.dim(), order = g.order();
  if (action.size() != order)
    throw std::invalid_argument("hopf_category: one action matrix per group element");
  for (std::size_t x = 0; x < order; ++x) {
    Report r = verify_morphism(hopf_morphism(u, u, action[x]), MorphismKind::hopf);
    if (!r.passed() || !action[x].inverse())
      throw std::invalid_argument("hopf_category: action is not by Hopf automorphisms");
  }
  if (!(action[0] == Matrix::identity(f, du)))
    throw std::invalid_argument("hopf_category: identity must act trivially");
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y)
      if (!(action[x] * action[y] == action[g.mul(x, y)]))
        throw std::invalid_argument("hopf_category: action is not a group action");

  HopfCategoryResult out;
  out.groupoid = gamma_groupoid(g);
  const std::size_t na = out.groupoid.size();
  const std::size_t N = na * du;  // basis (arrow, u)

  WeakHopfData& W = out.weak;
  W.algebra.field = f;
  W.algebra.dim = N;
  W.algebra.mult = Matrix(f, N, N * N);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      auto k = out.groupoid.compose(i, j);
      if (!k) continue;
      const std::size_t gi = out.groupoid.arrows[i].element;
      // (x (x) gamma_i)(x' (x) gamma_j) = x (g_i |> x') (x) gamma_i gamma_j
      for (std::size_t a = 0; a < du; ++a)
        for (std::size_t b = 0; b < du; ++b) {
          const Matrix prod =
              u.algebra.product(u.basis_element(a), action[gi].col(b));
          for (std::size_t r = 0; r < du; ++r)
            if (!prod.at(r, 0).is_zero())
              W.algebra.mult.at(*k * du + r, (i * du + a) * N + (j * du + b)) =
                  prod.at(r, 0);
        }
    }
  W.algebra.unit = Matrix(f, N, 1);
  for (std::size_t i = 0; i < na; ++i)
    if (out.groupoid.arrows[i].element == 0)
      for (std::size_t a = 0; a < du; ++a)
        if (!u.unit().at(a, 0).is_zero())
          W.algebra.unit.at(i * du + a, 0) = u.unit().at(a, 0);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t a = 0; a < du; ++a)
      W.algebra.labels.push_back(u.label(a) + "(x)" +
                                 out.groupoid.arrow_string(i));

  W.comult = Matrix(f, N * N, N);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t a = 0; a < du; ++a)
      for (std::size_t pq = 0; pq < du * du; ++pq) {
        const Scalar& d = u.comult().at(pq, a);
        if (!d.is_zero())
          W.comult.at((i * du + pq / du) * N + (i * du + pq % du),
                      i * du + a) = d;
      }
  W.counit = Matrix(f, 1, N);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t a = 0; a < du; ++a)
      W.counit.at(0, i * du + a) = u.counit().at(0, a);

  // S(x (x) (A,g)) = g^{-1} |> S_U(x) (x) (gA, g^{-1}); written in the
  // (U-part, arrow) normal form the category antipode x -> S(x), g -> g^{-1}
  // picks up the conjugation by g^{-1}
  W.antipode = Matrix(f, N, N);
  for (std::size_t i = 0; i < na; ++i) {
    const std::size_t inv = out.groupoid.inverse_arrow(i);
    const std::size_t ginv = g.inverse(out.groupoid.arrows[i].element);
    const Matrix block = action[ginv] * u.antipode;
    for (std::size_t a = 0; a < du; ++a)
      for (std::size_t r = 0; r < du; ++r)
        if (!block.at(r, a).is_zero())
          W.antipode.at(inv * du + r, i * du + a) = block.at(r, a);
  }
  out.verified = verify_weak_hopf(W);
  require_pass(out.verified);

  // U #_T kGamma(G) with T((A,g) (x) x) = g |> x (x) (A,g)
  GroupoidAlgebra ga = groupoid_algebra(out.groupoid, f);
  AlgebraData& S = out.smash;
  S.field = f;
  S.dim = N;
  S.mult = Matrix(f, N, N * N);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      auto k = out.groupoid.compose(i, j);
      if (!k) continue;
      const std::size_t gi = out.groupoid.arrows[i].element;
      for (std::size_t a = 0; a < du; ++a)
        for (std::size_t b = 0; b < du; ++b) {
          const Matrix prod =
              u.algebra.product(u.basis_element(a), action[gi].col(b));
          for (std::size_t r = 0; r < du; ++r)
            if (!prod.at(r, 0).is_zero())
              S.mult.at(r * na + *k, (a * na + i) * N + (b * na + j)) =
                  prod.at(r, 0);
        }
    }
  S.unit = u.unit().kron(ga.algebra.unit);
  for (std::size_t a = 0; a < du; ++a)
    for (std::size_t i = 0; i < na; ++i)
      S.labels.push_back(u.label(a) + "#" + out.groupoid.arrow_string(i));
  require_pass(verify_algebra(S));

  // the identification W -> U # kGamma reorders the legs
  Matrix iso(f, N, N);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t a = 0; a < du; ++a)
      iso.at(a * na + i, i * du + a) = Scalar::one(f);
  out.iso_to_smash = algebra_morphism(W.algebra, S, iso);
  require_pass(verify_morphism(out.iso_to_smash, MorphismKind::algebra));
  out.verified.add("iso-to-smash", true);
  return out;
}

}  // namespace hopfpar
