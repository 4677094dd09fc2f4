#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfpar/catalog.hpp"
#include "hopfpar/cli.hpp"
#include "hopfpar/smash.hpp"

using namespace hopfpar;

namespace {

const FieldSpec Q{};
const FieldSpec F2{2};

/// conjugation action of kS3 on kC3 = k{e, r, r2}
Matrix s3_conjugation_action() {
  GroupTable s3 = GroupTable::symmetric3();
  Matrix act(Q, 3, 6 * 3);
  for (std::size_t g = 0; g < 6; ++g)
    for (std::size_t n = 0; n < 3; ++n) {
      std::size_t image = s3.mul(s3.mul(g, n), s3.inverse(g));
      REQUIRE(image < 3);  // C3 is normal in S3
      act.at(image, g * 3 + n) = Scalar::one(Q);
    }
  return act;
}

}  // namespace

TEST_CASE("tensor flip twist passes all five flags") {
  TwistMap r = flip_twist(catalog_hopf("kC2"), catalog_hopf("kC3"));
  Report rep = check_twist(r);
  CHECK(rep.passed());
  CHECK(r.flags.all());
}

TEST_CASE("conjugation twist for S3 acting on kC3 passes all flags") {
  TwistMap r = module_algebra_twist(catalog_hopf("kS3"), catalog_hopf("kC3"),
                                    s3_conjugation_action());
  Report rep = check_twist(r);
  CHECK(rep.passed());
  CHECK(r.flags.all());
}

TEST_CASE("a generic linear map fails normality with a witness") {
  HopfData h = catalog_hopf("kC2");
  TwistMap r;
  r.h_side = h;
  r.u_side = h;
  r.map = Matrix(Q, 4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    r.map.at(i, i) = Scalar(Q, static_cast<long>(i + 2));
  Report rep = check_twist(r);
  CHECK(!rep.passed());
  CHECK(rep.find("left-normal")->status == CheckStatus::fail);
}

TEST_CASE("build_smash: flip of kC2 and kC2 is k(C2 x C2)") {
  TwistMap r = flip_twist(catalog_hopf("kC2"), catalog_hopf("kC2"));
  SmashAlgebra s = build_smash(r);
  REQUIRE(s.hopf.has_value());
  HopfData v4 = catalog_hopf("kV4");
  CHECK(verify_morphism(hopf_morphism(*s.hopf, v4, Matrix::identity(Q, 4)),
                        MorphismKind::hopf)
            .passed());
}

TEST_CASE("build_smash with trivial U returns H itself") {
  TwistMap r = flip_twist(catalog_hopf("kC3"), catalog_hopf("trivial"));
  SmashAlgebra s = build_smash(r);
  CHECK(s.algebra.dim == 3);
  CHECK(s.algebra.mult == catalog_hopf("kC3").mult());
}

TEST_CASE("matched-pair actions of the flip are trivial") {
  TwistMap r = flip_twist(catalog_hopf("kC2"), catalog_hopf("kC3"));
  auto [act, rep] = derive_actions(r);
  CHECK(rep.passed());
  const HopfData h = catalog_hopf("kC2");
  const HopfData u = catalog_hopf("kC3");
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(act.tri_r.col(i * 3 + j) ==
            u.basis_element(j).scaled(h.counit().at(0, i)));
      CHECK(act.tri_l.col(i * 3 + j) ==
            h.basis_element(i).scaled(u.counit().at(0, j)));
    }
}

TEST_CASE("matched pair of the conjugation twist: |> conjugates, <| trivial") {
  TwistMap r = module_algebra_twist(catalog_hopf("kS3"), catalog_hopf("kC3"),
                                    s3_conjugation_action());
  auto [act, rep] = derive_actions(r);
  CHECK(rep.passed());
  GroupTable s3 = GroupTable::symmetric3();
  for (std::size_t g = 0; g < 6; ++g)
    for (std::size_t n = 0; n < 3; ++n) {
      std::size_t image = s3.mul(s3.mul(g, n), s3.inverse(g));
      Matrix expected(Q, 3, 1);
      expected.at(image, 0) = Scalar::one(Q);
      CHECK(act.tri_r.col(g * 3 + n) == expected);
      // <| is trivial for module-algebra twists
      Matrix triv(Q, 6, 1);
      triv.at(g, 0) = Scalar::one(Q);
      CHECK(act.tri_l.col(g * 3 + n) == triv);
    }
}

TEST_CASE("exact factorization S3 = C3 C2: both actions are nontrivial") {
  GroupTable s3 = GroupTable::symmetric3();
  TwistMap r = exact_factorization_twist(s3, {0, 1, 2}, {0, 3}, Q);
  auto [act, rep] = derive_actions(r);
  CHECK(rep.passed());
  bool tri_r_nontrivial = false, tri_l_nontrivial = false;
  const HopfData& H = r.h_side;
  const HopfData& U = r.u_side;
  for (std::size_t i = 0; i < H.dim(); ++i)
    for (std::size_t j = 0; j < U.dim(); ++j) {
      if (!(act.tri_r.col(i * U.dim() + j) ==
            U.basis_element(j).scaled(H.counit().at(0, i))))
        tri_r_nontrivial = true;
      if (!(act.tri_l.col(i * U.dim() + j) ==
            H.basis_element(i).scaled(U.counit().at(0, j))))
        tri_l_nontrivial = true;
    }
  CHECK(tri_r_nontrivial);
  CHECK(tri_l_nontrivial);
}

TEST_CASE("invert_twist: flip inverts to flip, module twist to its formula") {
  TwistMap fl = flip_twist(catalog_hopf("kC2"), catalog_hopf("kC3"));
  TwistMap fl_inv = invert_twist(fl);
  CHECK(fl_inv.map == Matrix::flip(Q, 3, 2));

  // R'(u (x) g) = g (x) g^{-1} u g for the S3 conjugation twist
  TwistMap r = module_algebra_twist(catalog_hopf("kS3"), catalog_hopf("kC3"),
                                    s3_conjugation_action());
  TwistMap rp = invert_twist(r);
  GroupTable s3 = GroupTable::symmetric3();
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 6; ++i) {
      Matrix expected(Q, 6 * 3, 1);
      std::size_t conj = s3.mul(s3.mul(s3.inverse(i), j), i);
      REQUIRE(conj < 3);
      expected.at(i * 3 + conj, 0) = Scalar::one(Q);
      CHECK(rp.map.col(j * 6 + i) == expected);
    }
}

TEST_CASE("lifted twist on k_par C2 for the kV4* swap action") {
  HopfData kf = catalog_hopf("kC2", F2);
  HopfData u = catalog_hopf("kV4*_char2");
  Matrix action(F2, 4, 2 * 4);
  const std::size_t perm[4] = {0, 2, 1, 3};
  for (std::size_t j = 0; j < 4; ++j) {
    action.at(j, 0 * 4 + j) = Scalar::one(F2);
    action.at(perm[j], 1 * 4 + j) = Scalar::one(F2);
  }
  TwistMap r = module_algebra_twist(kf, u, action);
  check_twist(r);
  TruncatedQuotient qf = truncated_hpar(kf, 4);
  LiftedTwist t = lift_twist_T(r, qf);
  CHECK(t.verified.passed());
  // T([g]^k (x) p) = (g^k |> p) (x) [g]^k on the word basis
  REQUIRE(qf.dim() == 3);
  for (std::size_t w = 0; w < 3; ++w) {
    const std::size_t len = qf.words().word_at(qf.basis_words()[w]).size();
    for (std::size_t p = 0; p < 4; ++p) {
      Matrix expected(F2, 4 * 3, 1);
      const std::size_t image = (len % 2 == 0) ? p : perm[p];
      expected.at(image * 3 + w, 0) = Scalar::one(F2);
      CHECK(t.map.col(w * 4 + p) == expected);
    }
  }
}

TEST_CASE("two-sided lift of the flip is the flip of the quotients") {
  HopfData kc2 = catalog_hopf("kC2");
  TwistMap r = flip_twist(kc2, kc2);
  check_twist(r);
  TruncatedQuotient q = truncated_hpar(kc2, 4);
  LiftedTwist cal = lift_twist_calR(r, q, q);
  CHECK(cal.verified.passed());
  CHECK(cal.map == Matrix::flip(Q, 3, 3));
}

TEST_CASE("two-sided lift for the S3 factorization") {
  GroupTable s3 = GroupTable::symmetric3();
  TwistMap r = exact_factorization_twist(s3, {0, 1, 2}, {0, 3}, Q);
  TruncatedQuotient ql = truncated_hpar(r.h_side, 4);   // k_par C2, dim 3
  TruncatedQuotient qm = truncated_hpar(r.u_side, 5);   // k_par C3, dim 8
  REQUIRE(ql.stabilized());
  REQUIRE(qm.stabilized());
  LiftedTwist cal = lift_twist_calR(r, ql, qm);
  CHECK(cal.verified.passed());
  CHECK(cal.map.rows() == 8 * 3);
}

TEST_CASE("par_of_smash_iso with a connected 2-dimensional U") {
  // U = kC2* over F_2 (connected), H = kC2 over F_2, trivial action
  HopfData u = catalog_hopf("kC2*_char2");
  HopfData h = catalog_hopf("kC2", F2);
  TwistMap r = flip_twist(h, u);
  check_twist(r);
  SmashAlgebra smash = build_smash(r);
  REQUIRE(smash.hopf.has_value());
  TruncatedQuotient smash_par = truncated_hpar(*smash.hopf, 4);
  REQUIRE(smash_par.stabilized());
  CHECK(smash_par.dim() == 6);  // dim U * dim k_par C2 = 2 * 3
  TruncatedQuotient hpar = truncated_hpar(h, 4);
  TruncatedQuotient ucert = truncated_hpar(u, 4);
  LiftedTwist t = lift_twist_T(r, hpar);
  ParSmashIso iso = par_of_smash_iso(u, h, r, *smash.hopf, smash_par, hpar, t,
                                     ucert);
  CHECK(iso.verified.passed());
}

TEST_CASE("par_of_smash_iso with trivial U is the identity situation") {
  HopfData u = catalog_hopf("trivial");
  HopfData h = catalog_hopf("kC2");
  TwistMap r = flip_twist(h, u);
  check_twist(r);
  SmashAlgebra smash = build_smash(r);
  TruncatedQuotient smash_par = truncated_hpar(*smash.hopf, 4);
  TruncatedQuotient hpar = truncated_hpar(h, 4);
  TruncatedQuotient ucert = truncated_hpar(u, 2);
  LiftedTwist t = lift_twist_T(r, hpar);
  ParSmashIso iso = par_of_smash_iso(u, h, r, *smash.hopf, smash_par, hpar, t,
                                     ucert);
  CHECK(iso.verified.passed());
  CHECK(iso.smash.dim == 3);
}

TEST_CASE("a U with partiality is rejected as certificate") {
  HopfData u = catalog_hopf("kC2");
  HopfData h = catalog_hopf("kC2");
  TwistMap r = flip_twist(h, u);
  check_twist(r);
  SmashAlgebra smash = build_smash(r);
  TruncatedQuotient smash_par = truncated_hpar(*smash.hopf, 4);
  TruncatedQuotient hpar = truncated_hpar(h, 4);
  TruncatedQuotient ucert = truncated_hpar(u, 4);  // dim 3 != dim U
  LiftedTwist t = lift_twist_T(r, hpar);
  CHECK_THROWS_AS(par_of_smash_iso(u, h, r, *smash.hopf, smash_par, hpar, t,
                                   ucert),
                  std::invalid_argument);
}

TEST_CASE("base algebra isomorphisms for the kC2 flip and the swap smash") {
  // U = H = kC2 with the flip: the generated base subalgebras have dim 2,
  // while A_par of the full smash k(C2 x C2) has dimension 8
  HopfData u = catalog_hopf("kC2");
  HopfData h = catalog_hopf("kC2");
  TwistMap r = flip_twist(h, u);
  check_twist(r);
  SmashAlgebra smash = build_smash(r);
  TruncatedQuotient hpar = truncated_hpar(h, 4);
  LiftedTwist t = lift_twist_T(r, hpar);
  Report rep = base_algebra_isos(u, h, r, *smash.hopf, hpar, t);
  CHECK(rep.passed());
  CHECK(rep.find("subalgebra-dims")->value == "2 vs 2");
  TruncatedQuotient apar_smash = truncated_apar(*smash.hopf, 5);
  REQUIRE(apar_smash.stabilized());
  CHECK(apar_smash.dim() == 8);
  TruncatedQuotient apar_h = truncated_apar(h, 3);
  CHECK(apar_h.dim() == 2);

  // the characteristic-2 graded instance
  HopfData u2 = catalog_hopf("kV4*_char2");
  HopfData h2 = catalog_hopf("kC2", F2);
  Matrix action(F2, 4, 2 * 4);
  const std::size_t perm[4] = {0, 2, 1, 3};
  for (std::size_t j = 0; j < 4; ++j) {
    action.at(j, 0 * 4 + j) = Scalar::one(F2);
    action.at(perm[j], 1 * 4 + j) = Scalar::one(F2);
  }
  TwistMap r2 = module_algebra_twist(h2, u2, action);
  check_twist(r2);
  SmashAlgebra smash2 = build_smash(r2);
  TruncatedQuotient hpar2 = truncated_hpar(h2, 4);
  LiftedTwist t2 = lift_twist_T(r2, hpar2);
  Report rep2 = base_algebra_isos(u2, h2, r2, *smash2.hopf, hpar2, t2);
  CHECK(rep2.passed());
}

TEST_CASE("trivial U gives the identity on the base subalgebras") {
  HopfData u = catalog_hopf("trivial");
  HopfData h = catalog_hopf("kC2");
  TwistMap r = flip_twist(h, u);
  check_twist(r);
  SmashAlgebra smash = build_smash(r);
  TruncatedQuotient hpar = truncated_hpar(h, 4);
  LiftedTwist t = lift_twist_T(r, hpar);
  Report rep = base_algebra_isos(u, h, r, *smash.hopf, hpar, t);
  CHECK(rep.passed());
  CHECK(rep.find("subalgebra-dims")->value == "2 vs 2");
}

TEST_CASE("exact factorizations: direct product gives the flip; Z4 fails") {
  GroupTable v4 = GroupTable::direct_product(GroupTable::cyclic(2),
                                             GroupTable::cyclic(2));
  TwistMap r = exact_factorization_twist(v4, {0, 2}, {0, 1}, Q);
  CHECK(r.map == Matrix::flip(Q, 2, 2));

  GroupTable z4 = GroupTable::cyclic(4);
  CHECK_THROWS_AS(exact_factorization_twist(z4, {0, 2}, {0, 2}, Q),
                  std::invalid_argument);
}

TEST_CASE("Gamma_M for the S3 factorization and its degenerate cases") {
  GroupTable s3 = GroupTable::symmetric3();
  GammaMResult gm = gamma_M_groupoid(s3, {0, 1, 2}, {0, 3}, Q, 4);
  CHECK(gm.arrows.size() == 9);
  CHECK(gm.verified.passed());

  // L trivial: the groupoid algebra is kM
  GammaMResult gm_m = gamma_M_groupoid(s3, {0, 1, 2, 3, 4, 5}, {0}, Q, 2);
  CHECK(gm_m.arrows.size() == 6);
  CHECK(gm_m.verified.passed());

  // M trivial: Gamma_1(G) = Gamma(G)
  GroupTable c2 = GroupTable::cyclic(2);
  GammaMResult gm_l = gamma_M_groupoid(c2, {0}, {0, 1}, Q, 4);
  CHECK(gm_l.arrows.size() == 3);
  CHECK(gm_l.verified.passed());
}

TEST_CASE("graded compatibility failure produces a witness") {
  GroupTable c2 = GroupTable::cyclic(2);
  GroupTable v4 = GroupTable::direct_product(c2, c2);
  std::vector<std::vector<std::size_t>> f_on_g = {{0, 1, 2, 3}, {0, 2, 1, 3}};
  HopfData kf = group_algebra(c2, F2);
  AlgebraData endv = endomorphism_algebra(F2, 4);
  // global rep swapping coordinates 0 and 1: respects no swap-grading
  Matrix eta_map(F2, 16, 2);
  for (std::size_t i = 0; i < 4; ++i) eta_map.at(i * 4 + i, 0) = Scalar::one(F2);
  const std::size_t sigma[4] = {1, 0, 2, 3};
  for (std::size_t i = 0; i < 4; ++i)
    eta_map.at(sigma[i] * 4 + i, 1) = Scalar::one(F2);
  PartialRep eta = make_partial_rep(kf, endv, eta_map);
  std::vector<Matrix> graders;
  for (std::size_t g = 0; g < 4; ++g) {
    Matrix p(F2, 4, 4);
    p.at(g, g) = Scalar::one(F2);
    graders.push_back(p);
  }
  TruncatedQuotient qf = truncated_hpar(kf, 4);
  GradedCompatResult res = graded_partial_compat(c2, v4, f_on_g, eta, graders, qf);
  CHECK(!res.report.passed());
  CHECK(!res.report.find("grading-compatibility")->witness.empty());
}

TEST_CASE("Drinfel'd double of the trivial Hopf algebra is k") {
  DrinfeldResult d = drinfeld_twist(catalog_hopf("trivial"));
  CHECK(d.double_algebra.algebra.dim == 1);
}

TEST_CASE("Drinfel'd double of kC2 is 4-dimensional with all flags") {
  DrinfeldResult d = drinfeld_twist(catalog_hopf("kC2"));
  CHECK(d.twist.flags.all());
  CHECK(d.double_algebra.algebra.dim == 4);
  REQUIRE(d.double_algebra.hopf.has_value());
  CHECK(verify_hopf(*d.double_algebra.hopf).passed());
}
