#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfpar/catalog.hpp"
#include "hopfpar/groups.hpp"

using namespace hopfpar;

namespace {
const FieldSpec Q{};
const FieldSpec F2{2};
}

TEST_CASE("group algebra kC2 passes every axiom suite") {
  HopfData h = group_algebra(GroupTable::cyclic(2), Q);
  CHECK(verify_hopf(h).passed());
  CHECK(h.dim() == 2);
}

TEST_CASE("group tables: trivial, S3, rejection of non-groups") {
  CHECK(group_algebra(GroupTable::trivial(), Q).dim() == 1);

  GroupTable s3 = GroupTable::symmetric3();
  HopfData ks3 = group_algebra(s3, Q);
  CHECK(ks3.dim() == 6);
  // antipode is the permutation induced by inversion
  for (std::size_t g = 0; g < 6; ++g)
    for (std::size_t r = 0; r < 6; ++r)
      CHECK(ks3.antipode.at(r, g).is_zero() == (r != s3.inverse(g)));

  GroupTable bad;
  bad.table = {{0, 1}, {1, 1}};  // 1*1 = 1 leaves element 1 without inverse
  CHECK_THROWS_AS(group_algebra(bad, Q), std::invalid_argument);
}

TEST_CASE("broken antipode fails with a witness") {
  HopfData h = group_algebra(GroupTable::cyclic(2), Q);
  h.antipode = Matrix::zero(Q, 2, 2);
  h.antipode_inverse.reset();
  Report r = verify_antipode(h);
  CHECK(!r.passed());
  const CheckItem* left = r.find("antipode-left");
  REQUIRE(left != nullptr);
  CHECK(left->status == CheckStatus::fail);
  CHECK(!left->witness.empty());
}

TEST_CASE("Sweedler H4: axioms, relations, antipode order") {
  HopfData h = sweedler_h4(Q);
  CHECK(verify_hopf(h).passed());
  CHECK_THROWS_AS(sweedler_h4(F2), std::invalid_argument);

  // g^2 = 1, x^2 = 0, xg = -gx on the structure constants
  CHECK(h.algebra.product(h.basis_element(1), h.basis_element(1)) ==
        h.basis_element(0));
  CHECK(h.algebra.product(h.basis_element(2), h.basis_element(2)).is_zero());
  CHECK(h.algebra.product(h.basis_element(2), h.basis_element(1)) ==
        h.algebra.product(h.basis_element(1), h.basis_element(2))
            .scaled(Scalar(Q, -1)));

  Matrix s2 = h.antipode * h.antipode;
  CHECK(!(s2 == Matrix::identity(Q, 4)));
  CHECK(s2 * s2 == Matrix::identity(Q, 4));
}

TEST_CASE("dual group algebra of C2 in characteristic 2") {
  HopfData d = dual_group_algebra(GroupTable::cyclic(2), F2);
  CHECK(verify_hopf(d).passed());
  // Delta(p_1) = p_1 (x) p_1 + p_g (x) p_g
  Matrix dp1 = d.comult().col(0);
  CHECK(dp1.at(0, 0).is_one());
  CHECK(dp1.at(3, 0).is_one());
  CHECK(dp1.at(1, 0).is_zero());
  CHECK(dual_group_algebra(GroupTable::trivial(), Q).dim() == 1);
}

TEST_CASE("double dual is the original on the nose") {
  for (const char* name : {"kC2", "kS3", "sweedler_h4"}) {
    HopfData h = catalog_hopf(name);
    HopfData dd = dual_hopf(dual_hopf(h));
    CHECK(dd.mult() == h.mult());
    CHECK(dd.comult() == h.comult());
    CHECK(dd.antipode == h.antipode);
    CHECK(dd.unit() == h.unit());
    CHECK(dd.counit() == h.counit());
  }
}

TEST_CASE("kC2* is isomorphic to kC2 away from characteristic 2") {
  HopfData kc2 = catalog_hopf("kC2");
  HopfData dual = dual_hopf(kc2);
  CHECK(verify_hopf(dual).passed());
  // p_1 -> (1+g)/2, p_g -> (1-g)/2
  Matrix iso(Q, 2, 2);
  Scalar half = Scalar::parse(Q, "1/2");
  iso.at(0, 0) = half;
  iso.at(1, 0) = half;
  iso.at(0, 1) = half;
  iso.at(1, 1) = -half;
  Report r = verify_morphism(hopf_morphism(dual, kc2, iso), MorphismKind::hopf);
  CHECK(r.passed());
  CHECK(iso.inverse().has_value());
}

TEST_CASE("opposite Hopf algebra of H4") {
  HopfData h = sweedler_h4(Q);
  HopfData op = opposite_hopf(h);
  CHECK(verify_hopf(op).passed());
  CHECK(!(op.mult() == h.mult()));  // H4 is noncommutative
  HopfData broken = sweedler_h4(Q);
  broken.antipode_inverse.reset();
  CHECK_THROWS_AS(opposite_hopf(broken), std::invalid_argument);
}

TEST_CASE("tensor bialgebra kC2 (x) kC2 is k(C2 x C2)") {
  HopfData a = catalog_hopf("kC2");
  HopfData t = tensor_bialgebra(a, a);
  CHECK(verify_hopf(t).passed());
  HopfData v4 = catalog_hopf("kV4");
  // the basis identification (i,j) -> element i*2+j is the identity matrix
  Matrix id = Matrix::identity(Q, 4);
  CHECK(verify_morphism(hopf_morphism(t, v4, id), MorphismKind::hopf).passed());

  auto [ia, ib] = tensor_inclusions(a, a);
  CHECK(verify_morphism(ia, MorphismKind::hopf).passed());
  CHECK(verify_morphism(ib, MorphismKind::hopf).passed());
}

TEST_CASE("primitive elements") {
  CHECK(primitives(catalog_hopf("kC2")).dim() == 0);
  CHECK(primitives(catalog_hopf("kS3")).dim() == 0);
  // finite-dimensional over Q: only 0 is primitive, so H4 has none either
  CHECK(primitives(sweedler_h4(Q)).dim() == 0);
  // kC2* over F_2: p_g is primitive
  Subspace p = primitives(catalog_hopf("kC2*_char2"));
  CHECK(p.dim() == 1);
  Matrix pg(F2, 2, 1);
  pg.at(1, 0) = Scalar::one(F2);
  CHECK(p.contains(pg));
}

TEST_CASE("morphism verification: identity, counit, antipode on H4") {
  HopfData h = sweedler_h4(Q);
  Report ok = verify_morphism(hopf_morphism(h, h, Matrix::identity(Q, 4)),
                              MorphismKind::hopf);
  CHECK(ok.passed());

  AlgebraData k;
  k.field = Q;
  k.dim = 1;
  k.mult = Matrix::identity(Q, 1);
  k.unit = Matrix::identity(Q, 1);
  Report eps = verify_morphism(algebra_morphism(h.algebra, k, h.counit()),
                               MorphismKind::algebra);
  CHECK(eps.passed());

  // S is anti-multiplicative, so it fails as an algebra map on H4
  Report s = verify_morphism(algebra_morphism(h.algebra, h.algebra, h.antipode),
                             MorphismKind::algebra);
  CHECK(!s.passed());
  CHECK(!s.find("multiplicative")->witness.empty());
}

TEST_CASE("every catalog Hopf item passes its axiom suites") {
  for (const auto& item : catalog()) {
    if (item.kind != "hopf") continue;
    HopfData h = catalog_hopf(item.name);
    CHECK_MESSAGE(verify_hopf(h).passed(), item.name);
  }
}

TEST_CASE("group algebras have involutive antipode") {
  for (const char* name : {"kC2", "kC3", "kC4", "kV4", "kS3"}) {
    HopfData h = catalog_hopf(name);
    CHECK(h.antipode * h.antipode == Matrix::identity(Q, h.dim()));
  }
}
