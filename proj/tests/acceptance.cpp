// Acceptance suite: runs every structural criterion at zero tolerance and
// prints one pass/fail line per criterion. Exit code 0 only when all pass.

#include <functional>
#include <iostream>
#include <vector>

#include "hopfpar/catalog.hpp"
#include "hopfpar/cli.hpp"
#include "hopfpar/io.hpp"

using namespace hopfpar;

namespace {

const FieldSpec Q{};
const FieldSpec F2{2};

struct Criterion {
  std::string name;
  std::function<void()> run;  // throws on failure
};

void require(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error(what);
}

std::size_t brute_force_gamma_count(const GroupTable& g) {
  std::size_t count = 0;
  for (std::uint32_t subset = 0; subset < (1u << g.order()); ++subset)
    for (std::size_t x = 0; x < g.order(); ++x)
      if ((subset & 1u) && (subset & (1u << g.inverse(x)))) ++count;
  return count;
}

PartialRep rank_one_rep(const HopfData& h) {
  Matrix rows(h.field(), h.dim() - 1, h.dim());
  for (std::size_t i = 1; i < h.dim(); ++i)
    rows.at(i - 1, i) = Scalar::one(h.field());
  return cosemisimple_nonglobal_rep(h, Subspace(h.dim(), rows));
}

Matrix v4_swap_action(const FieldSpec& f) {
  Matrix action(f, 4, 2 * 4);
  const std::size_t perm[4] = {0, 2, 1, 3};
  for (std::size_t j = 0; j < 4; ++j) {
    action.at(j, 0 * 4 + j) = Scalar::one(f);
    action.at(perm[j], 1 * 4 + j) = Scalar::one(f);
  }
  return action;
}

void criterion_1() {
  HopfData h = catalog_hopf("kC2");
  TruncatedQuotient t = truncated_hpar(h, 4);
  require(t.stabilized(), "k_par C2 did not stabilize at degree 4");
  require(t.dim() == 3, "dim k_par C2 != 3");
  require(t.basis_word_string(0) == "1" && t.basis_word_string(1) == "[g]" &&
              t.basis_word_string(2) == "[g][g]",
          "basis is not {1, [g], [g]^2}");
  GroupoidGamma gamma = gamma_groupoid(GroupTable::cyclic(2));
  require(gamma.size() == 3, "|Gamma(C2)| != 3");
}

void criterion_2() {
  HopfData h = catalog_hopf("kV4");
  TruncatedQuotient t = truncated_hpar(h, 6);
  require(t.stabilized() && t.dim() == 20, "dim k_par(C2xC2) != 20");
  GroupoidAlgebra ga =
      groupoid_algebra(gamma_groupoid(*catalog_find("kV4")->group), Q);
  require(ga.algebra.dim == 20, "|Gamma(C2xC2)| != 20");
  auto [phi, psi] = iso_kparG(ga, t, h);  // throws unless mutually inverse
  require(verify_morphism(phi, MorphismKind::algebra).passed(),
          "groupoid isomorphism is not an algebra map");
}

void criterion_3() {
  std::vector<GroupTable> groups = {
      GroupTable::trivial(),
      GroupTable::cyclic(2),
      GroupTable::cyclic(3),
      GroupTable::cyclic(4),
      GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(2)),
      GroupTable::cyclic(5),
      GroupTable::cyclic(6),
      GroupTable::symmetric3(),
      GroupTable::cyclic(7),
      GroupTable::cyclic(8),
      GroupTable::direct_product(GroupTable::cyclic(4), GroupTable::cyclic(2)),
      GroupTable::direct_product(
          GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(2)),
          GroupTable::cyclic(2)),
      GroupTable::dihedral4(),
      GroupTable::quaternion8(),
  };
  for (const auto& g : groups) {
    const std::size_t n = g.order();
    const std::size_t closed =
        n == 1 ? 1 : (1u << (n - 1)) + (n - 1) * (1u << (n - 2));
    require(brute_force_gamma_count(g) == closed,
            "count law fails by brute force at order " + std::to_string(n));
    require(gamma_groupoid(g).size() == closed,
            "enumerated Gamma(G) deviates at order " + std::to_string(n));
  }
}

void criterion_4() {
  HopfData h = catalog_hopf("kC2*_char2");
  require(coradical(h.coalgebra).dim() == 1, "kC2* over F_2 is not connected");
  TruncatedQuotient t = truncated_hpar(h, 4);
  require(t.stabilized() && t.dim() == 2, "truncation does not stabilize at 2");
  require(rref(t.bracket()).rank == 2, "bracket is not an isomorphism");
  require(verify_morphism(
              algebra_morphism(h.algebra, t.algebra(), t.bracket()),
              MorphismKind::algebra)
              .passed(),
          "bracket is not an algebra map");
}

void criterion_5() {
  std::vector<PartialRep> reps;
  HopfData kc2 = catalog_hopf("kC2");
  auto scalar_row = [&](const HopfData& h, std::vector<long> v) {
    Matrix m(h.field(), 1, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) m.at(0, j) = Scalar(h.field(), v[j]);
    return make_partial_rep(h, scalar_algebra(h.field()), m);
  };
  reps.push_back(scalar_row(kc2, {1, 0}));
  reps.push_back(scalar_row(kc2, {1, 1}));
  reps.push_back(scalar_row(kc2, {1, -1}));
  reps.push_back(rank_one_rep(catalog_hopf("kC3")));
  reps.push_back(rank_one_rep(catalog_hopf("kS3")));
  reps.push_back(rank_one_rep(catalog_hopf("kV4")));
  HopfData h4 = catalog_hopf("sweedler_h4");
  reps.push_back(scalar_row(h4, {1, 1, 0, 0}));
  reps.push_back(scalar_row(h4, {1, -1, 0, 0}));
  HopfData dc2 = catalog_hopf("kC2*_char2");
  reps.push_back(make_partial_rep(dc2, scalar_algebra(F2), dc2.counit()));
  ChevalleyResult ch = chevalley_quotient(h4);
  reps.push_back(restrict_along(rank_one_rep(ch.quotient->quotient),
                                ch.quotient->projection, h4));
  require(reps.size() >= 8, "fewer than 8 catalog representations");
  std::size_t nonglobal = 0;
  for (const auto& rep : reps) {
    Filtration filt = coradical_filtration(rep.source.coalgebra);
    const bool glob = is_global(rep);
    if (!glob) ++nonglobal;
    require(coradical_global_test(rep, filt) == glob,
            "coradical criterion disagrees with globality");
  }
  require(nonglobal >= 3, "the zoo lacks non-global representations");
}

void criterion_6() {
  for (const char* name : {"kC2", "kC3", "kS3"}) {
    PartialRep rep = rank_one_rep(catalog_hopf(name));
    require(rep.verified.passed(), std::string(name) + ": PR axioms fail");
    require(!is_global(rep), std::string(name) + ": rank-one rep is global");
  }
}

void criterion_7() {
  HopfData h4 = catalog_hopf("sweedler_h4");
  Subspace h0 = coradical(h4.coalgebra);
  require(h0.dim() == 2 &&
              h0.basis() == Matrix::from_int(Q, {{1, 0, 0, 0}, {0, 1, 0, 0}}),
          "coradical of H4 is not span{1, g}");
  Filtration filt = coradical_filtration(h4.coalgebra);
  require(filt.exhaustive_at == 1 && filt.stages[1].dim() == 4, "H_1 != H");

  std::size_t prev = 0;
  for (std::size_t d = 2; d <= 6; ++d) {
    TruncatedQuotient t = truncated_apar(h4, d);
    require(!t.stabilized(), "A_par of H4 unexpectedly stabilized");
    const std::size_t top = t.dims_by_degree().back();
    require(top > prev, "A_par dimension growth is not strict");
    prev = top;
  }

  ChevalleyResult ch = chevalley_quotient(h4);
  require(ch.quotient.has_value(), "H4 radical is not a Hopf ideal");
  PartialRep rep = restrict_along(rank_one_rep(ch.quotient->quotient),
                                  ch.quotient->projection, h4);
  require(rep.verified.passed() && !is_global(rep),
          "the Chevalley-restricted rep is not a non-global partial rep");
}

void criterion_8() {
  Report rep = pipeline_s3_factorization(Q);
  require(rep.passed(), "S3 factorization pipeline failed");
  require(rep.find("gamma-M-arrows")->value == "9", "Gamma_M(S3) != 9 arrows");
}

void criterion_9() {
  Report rep = pipeline_smash_v4star_c2(F2, 4);
  require(rep.passed(), "main theorem instance failed");
  require(rep.find("smash-par-dim")->value == "12",
          "(U # kF)_par does not stabilize at 12");
}

void criterion_10() {
  std::vector<TwistMap> twists;
  twists.push_back(flip_twist(catalog_hopf("kC2"), catalog_hopf("kC2")));
  {
    GroupTable s3 = GroupTable::symmetric3();
    Matrix act(Q, 3, 6 * 3);
    for (std::size_t g = 0; g < 6; ++g)
      for (std::size_t n = 0; n < 3; ++n)
        act.at(s3.mul(s3.mul(g, n), s3.inverse(g)), g * 3 + n) = Scalar::one(Q);
    twists.push_back(
        module_algebra_twist(catalog_hopf("kS3"), catalog_hopf("kC3"), act));
    twists.push_back(exact_factorization_twist(s3, {0, 1, 2}, {0, 3}, Q));
  }
  twists.push_back(
      module_algebra_twist(catalog_hopf("kC2", F2),
                           catalog_hopf("kV4*_char2"), v4_swap_action(F2)));
  twists.push_back(drinfeld_twist(catalog_hopf("kC2")).twist);
  twists.push_back(drinfeld_twist(catalog_hopf("sweedler_h4")).twist);
  for (auto& r : twists) {
    Report flags = check_twist(r);
    require(r.flags.all(), "twist flags fail in the identity suite");
    auto [actions, rep] = derive_actions(r);
    require(rep.passed(), "matched-pair identity suite failed");
    invert_twist(r);  // throws unless R'R = RR' = id with all properties
  }
}

void criterion_11() {
  DrinfeldResult d2 = drinfeld_twist(catalog_hopf("kC2"));
  require(d2.twist.flags.all() && d2.double_algebra.algebra.dim == 4 &&
              d2.double_algebra.hopf.has_value(),
          "D(kC2) failed");
  require(verify_hopf(*d2.double_algebra.hopf).passed(), "D(kC2) axioms fail");
  DrinfeldResult d4 = drinfeld_twist(catalog_hopf("sweedler_h4"));
  require(d4.twist.flags.all() && d4.double_algebra.algebra.dim == 16 &&
              d4.double_algebra.hopf.has_value(),
          "D(H4) failed");
  require(verify_hopf(*d4.double_algebra.hopf).passed(), "D(H4) axioms fail");
}

void criterion_12() {
  Report rep = pipeline_weakhopf_v4star_c2(F2);
  require(rep.passed(), "weak Hopf pipeline failed");
  require(rep.find("W-dim")->value == "12", "dim W != 12");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"dim k_par(C2) = 3 with basis {1,[g],[g]^2}, groupoid oracle agrees",
       criterion_1},
      {"dim k_par(C2xC2) = 20, truncation and groupoid oracle agree with "
       "explicit isomorphism",
       criterion_2},
      {"|Gamma(G)| count law for all groups of order <= 8 by brute force",
       criterion_3},
      {"kC2* over F_2 is connected and its H_par is H itself", criterion_4},
      {"is_global <=> coradical_global_test on the catalog representations",
       criterion_5},
      {"rank-one non-global construction for kC2, kC3, kS3", criterion_6},
      {"Sweedler facts: coradical <1,g>, H_1 = H, growing A_par, non-global "
       "rep via the Chevalley quotient",
       criterion_7},
      {"S3 = C3 C2 smash machinery: flags, kC3 # kC2 = kS3, Gamma_M and theta",
       criterion_8},
      {"(kV4* # kC2)_par = kV4* # k_par C2 over F_2, dimension 12",
       criterion_9},
      {"matched-pair identity suite over the catalog twists", criterion_10},
      {"Drinfel'd doubles D(kC2) and D(H4) pass all axioms", criterion_11},
      {"weak Hopf model W verified and isomorphic to U # kGamma(C2)",
       criterion_12},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i].run();
      std::cout << "[PASS] criterion " << i + 1 << ": " << criteria[i].name
                << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "[FAIL] criterion " << i + 1 << ": " << criteria[i].name
                << " -- " << e.what() << "\n";
    }
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
