#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfpar/catalog.hpp"
#include "hopfpar/partial_rep.hpp"

using namespace hopfpar;

namespace {

const FieldSpec Q{};
const FieldSpec F2{2};

Matrix row(const FieldSpec& f, const std::vector<long>& entries) {
  Matrix m(f, 1, entries.size());
  for (std::size_t j = 0; j < entries.size(); ++j)
    m.at(0, j) = Scalar(f, entries[j]);
  return m;
}

/// the rank-one partial representation 1 -> 1, everything else -> 0 of a
/// group algebra
PartialRep rank_one_rep(const std::string& name,
                        std::optional<FieldSpec> field = std::nullopt) {
  HopfData h = catalog_hopf(name, field);
  Matrix rows(h.field(), h.dim() - 1, h.dim());
  for (std::size_t i = 1; i < h.dim(); ++i)
    rows.at(i - 1, i) = Scalar::one(h.field());
  return cosemisimple_nonglobal_rep(h, Subspace(h.dim(), rows));
}

}  // namespace

TEST_CASE("algebra morphisms are partial representations") {
  HopfData h = catalog_hopf("kC2");
  // the sign representation g -> -1
  Report r = check_pr_axioms(h, scalar_algebra(Q), row(Q, {1, -1}));
  CHECK(r.passed());
  // the counit
  CHECK(check_pr_axioms(h, scalar_algebra(Q), h.counit()).passed());
}

TEST_CASE("the kC2 rank-one example: 1 -> 1, g -> 0") {
  HopfData h = catalog_hopf("kC2");
  PartialRep rep = make_partial_rep(h, scalar_algebra(Q), row(Q, {1, 0}));
  CHECK(rep.verified.passed());
  CHECK(!is_global(rep));
  // eps^pi_g = pi(g) pi(g^{ -1}) = 0 while eps(g) = 1
  Matrix eps_g = epsilon_pi(rep, h.basis_element(1));
  CHECK(eps_g.is_zero());
  CHECK(epsilon_pi(rep, h.unit()) == Matrix::identity(Q, 1));
}

TEST_CASE("g -> 2 violates PR2 with witness (g,g)") {
  HopfData h = catalog_hopf("kC2");
  Report r = check_pr_axioms(h, scalar_algebra(Q), row(Q, {1, 2}));
  CHECK(!r.passed());
  const CheckItem* pr2 = r.find("PR2");
  REQUIRE(pr2 != nullptr);
  CHECK(pr2->status == CheckStatus::fail);
  CHECK(pr2->witness == "(g,g)");
  // the equivalent axiom pairs agree even on failures
  CHECK(r.find("PR2-PR4-agree")->status == CheckStatus::pass);
  CHECK(r.find("PR3-PR5-agree")->status == CheckStatus::pass);
}

TEST_CASE("epsilon elements of global representations are trivial") {
  HopfData h = catalog_hopf("kC3");
  PartialRep rep = make_partial_rep(h, scalar_algebra(Q), h.counit());
  CHECK(is_global(rep));
  CHECK(epsilon_pi_map(rep) == rep.target.unit * h.counit());
}

TEST_CASE("epsilon multiplicativity eps_h = eps_h1 eps_h2 on partial reps") {
  for (const char* name : {"kC2", "kC3", "kS3"}) {
    PartialRep rep = rank_one_rep(name);
    const HopfData& h = rep.source;
    const Matrix eps = epsilon_pi_map(rep);
    for (std::size_t i = 0; i < h.dim(); ++i) {
      Matrix rhs(h.field(), rep.target.dim, 1);
      const std::size_t n = h.dim();
      for (std::size_t ab = 0; ab < n * n; ++ab) {
        const Scalar& c = h.comult().at(ab, i);
        if (!c.is_zero())
          rhs = rhs +
                rep.target.product(eps.col(ab / n), eps.col(ab % n)).scaled(c);
      }
      CHECK(eps.col(i) == rhs);
    }
  }
}

TEST_CASE("coradical criterion agrees with globality on a rep zoo") {
  std::vector<PartialRep> reps;
  HopfData kc2 = catalog_hopf("kC2");
  reps.push_back(make_partial_rep(kc2, scalar_algebra(Q), row(Q, {1, 0})));
  reps.push_back(make_partial_rep(kc2, scalar_algebra(Q), row(Q, {1, 1})));
  reps.push_back(make_partial_rep(kc2, scalar_algebra(Q), row(Q, {1, -1})));
  reps.push_back(rank_one_rep("kC3"));
  reps.push_back(rank_one_rep("kS3"));
  reps.push_back(rank_one_rep("kV4"));
  HopfData h4 = catalog_hopf("sweedler_h4");
  reps.push_back(make_partial_rep(h4, scalar_algebra(Q), h4.counit()));
  reps.push_back(make_partial_rep(h4, scalar_algebra(Q), row(Q, {1, -1, 0, 0})));
  HopfData dc2 = catalog_hopf("kC2*_char2");
  reps.push_back(make_partial_rep(dc2, scalar_algebra(F2), dc2.counit()));

  CHECK(reps.size() >= 8);
  std::size_t globals = 0, partials = 0;
  for (const auto& rep : reps) {
    Filtration filt = coradical_filtration(rep.source.coalgebra);
    const bool glob = is_global(rep);
    CHECK(coradical_global_test(rep, filt) == glob);
    (glob ? globals : partials)++;
  }
  CHECK(globals >= 3);
  CHECK(partials >= 3);
}

TEST_CASE("vw_extension grows trivially-epsilon subspaces") {
  HopfData kc2 = catalog_hopf("kC2");
  PartialRep nonglobal = make_partial_rep(kc2, scalar_algebra(Q), row(Q, {1, 0}));
  Subspace k1(2, Matrix::from_int(Q, {{1, 0}}));
  Subspace out = vw_extension(nonglobal, k1, k1);
  CHECK(out.contains(kc2.unit()));
  CHECK(out.dim() == 1);  // the partial rep blocks any growth past k1

  HopfData h4 = catalog_hopf("sweedler_h4");
  PartialRep global4 = make_partial_rep(h4, scalar_algebra(Q), h4.counit());
  Subspace full = Subspace::full(Q, 4);
  CHECK(vw_extension(global4, full, full) == full);

  // a global rep is trivial on H_0; V = W = H_0 forces globality in one step
  Filtration filt = coradical_filtration(h4.coalgebra);
  Subspace grown = vw_extension(global4, filt.coradical(), filt.coradical());
  CHECK(grown == full);

  // precondition violation: the nonglobal rep is not trivial on all of H
  CHECK_THROWS_AS(vw_extension(nonglobal, Subspace::full(Q, 2),
                               Subspace::full(Q, 2)),
                  std::invalid_argument);
}

TEST_CASE("cosemisimple non-global construction across groups") {
  for (const char* name : {"kC2", "kC3", "kS3"}) {
    PartialRep rep = rank_one_rep(name);
    CHECK(rep.verified.passed());
    CHECK(!is_global(rep));
  }
  // the kC2 instance is exactly the 1 -> 1, g -> 0 map
  PartialRep c2 = rank_one_rep("kC2");
  CHECK(c2.map == row(Q, {1, 0}));

  // the trivial Hopf algebra has no valid complement
  HopfData triv = catalog_hopf("trivial");
  CHECK_THROWS_AS(cosemisimple_nonglobal_rep(triv, Subspace::zero(Q, 1)),
                  std::invalid_argument);
}

TEST_CASE("structurally bad complements are rejected") {
  HopfData h = catalog_hopf("kV4");
  // not a subcoalgebra: span{1 + g}
  Subspace bad(4, Matrix::from_int(Q, {{1, 1, 0, 0}, {0, 0, 1, 0},
                                       {0, 0, 0, 1}}));
  CHECK_THROWS_AS(cosemisimple_nonglobal_rep(h, bad), std::invalid_argument);
  // Sweedler is not cosemisimple
  HopfData sw = catalog_hopf("sweedler_h4");
  Subspace c(4, Matrix::from_int(Q, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK_THROWS_AS(cosemisimple_nonglobal_rep(sw, c), std::invalid_argument);
}

TEST_CASE("restriction along Hopf morphisms") {
  HopfData kc2 = catalog_hopf("kC2");
  PartialRep nonglobal = make_partial_rep(kc2, scalar_algebra(Q), row(Q, {1, 0}));

  // identity morphism: same map
  MorphismData id = hopf_morphism(kc2, kc2, Matrix::identity(Q, 2));
  PartialRep same = restrict_along(nonglobal, id, kc2);
  CHECK(same.map == nonglobal.map);

  // the Chevalley quotient H4 -> kC2 pulls the rank-one rep back to H4
  HopfData h4 = catalog_hopf("sweedler_h4");
  ChevalleyResult ch = chevalley_quotient(h4);
  REQUIRE(ch.quotient.has_value());
  // compose with the quotient's own rank-one rep
  Matrix qrows(Q, 1, 2);
  qrows.at(0, 1) = Scalar::one(Q);
  PartialRep qrep = cosemisimple_nonglobal_rep(ch.quotient->quotient,
                                               Subspace(2, qrows));
  PartialRep pulled = restrict_along(qrep, ch.quotient->projection, h4);
  CHECK(pulled.verified.passed());
  CHECK(!is_global(pulled));

  // composing a global rep with an inclusion stays global
  HopfData v4 = catalog_hopf("kV4");
  PartialRep glob = make_partial_rep(v4, scalar_algebra(Q), v4.counit());
  Matrix incl(Q, 4, 2);  // kC2 -> kV4 as the first factor
  incl.at(0, 0) = Scalar::one(Q);
  incl.at(2, 1) = Scalar::one(Q);
  MorphismData phi = hopf_morphism(kc2, v4, incl);
  REQUIRE(verify_morphism(phi, MorphismKind::hopf).passed());
  PartialRep res = restrict_along(glob, phi, kc2);
  CHECK(is_global(res));
}

TEST_CASE("partial action axioms: trivial action and a broken one") {
  HopfData h = catalog_hopf("kS3");
  AlgebraData a = scalar_algebra(Q);
  Matrix trivial(Q, 1, h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    trivial.at(0, i) = h.counit().at(0, i);
  Report ok = check_partial_action(h, a, trivial);
  CHECK(ok.passed());
  CHECK(ok.find("PA4-symmetric")->status == CheckStatus::pass);

  Matrix broken = trivial;
  broken.at(0, 0) = Scalar(Q, 2);  // 1_H no longer acts as the identity
  Report bad = check_partial_action(h, a, broken);
  CHECK(bad.find("PA1")->status == CheckStatus::fail);
}
