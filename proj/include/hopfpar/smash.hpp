#pragma once

#include "hopfpar/hpar.hpp"

namespace hopfpar {

/// Linear map R : H (x) U -> U (x) H with its verified properties. Input
/// index h*dimU + u, output index u*dimH + h.
struct TwistFlags {
  bool left_normal = false, right_normal = false;
  bool left_multiplicative = false, right_multiplicative = false;
  bool coalgebra_map = false;
  bool structural() const {
    return left_normal && right_normal && left_multiplicative &&
           right_multiplicative;
  }
  bool all() const { return structural() && coalgebra_map; }
};

struct TwistMap {
  HopfData h_side, u_side;
  Matrix map;
  TwistFlags flags;  // filled by check_twist
  bool checked = false;
};

/// Evaluates all five flags on basis tuples and caches them on the twist.
Report check_twist(TwistMap& r);
/// The tensor flip as a twist (trivial matched pair).
TwistMap flip_twist(const HopfData& h, const HopfData& u);
/// Module-algebra twist R(h (x) u) = h_(1) |> u (x) h_(2) for a left action
/// of H on U given per basis element of H.
TwistMap module_algebra_twist(const HopfData& h, const HopfData& u,
                              const Matrix& action);

/// U #_R H on the basis u*dimH + h.
struct SmashAlgebra {
  TwistMap twist;
  AlgebraData algebra;
  std::optional<HopfData> hopf;  // present when R is also a coalgebra map
  Report verified;
};
SmashAlgebra build_smash(const TwistMap& r);

/// Matched-pair actions extracted from R and its inverse:
///   h |> u = eps_H(h^R) u^R     (tri_r : H(x)U -> U)
///   h <| u = eps_U(u^R) h^R     (tri_l : H(x)U -> H)
///   u |>. h = eps_U(u^R') h^R'  (black_r : U(x)H -> H)
///   u <|. h = eps_H(h^R') u^R'  (black_l : U(x)H -> U)
struct MatchedPairActions {
  Matrix tri_r, tri_l, black_r, black_l;
};
std::pair<MatchedPairActions, Report> derive_actions(const TwistMap& r);

/// Closed-formula inverse of R; verified two-sided inverse satisfying the
/// same flags with the sides swapped.
TwistMap invert_twist(const TwistMap& r);

/// Lift of R through the word basis of a stabilized truncation:
///   T : H_par (x) U -> U (x) H_par,
///   [h_1]...[h_n] (x) u -> u^{R_1...R_n} (x) [h_1^{R_n}]...[h_n^{R_1}],
/// and the two-sided variant calR on H_par (x) U_par. Well-definedness is
/// certified by the vanishing of all relation images; normality and
/// multiplicativity are checked on the full basis.
struct LiftedTwist {
  enum class Kind { T, CalR };
  Kind kind = Kind::T;
  Matrix map;
  Report verified;
};
LiftedTwist lift_twist_T(const TwistMap& r, const TruncatedQuotient& hpar);
LiftedTwist lift_twist_calR(const TwistMap& r, const TruncatedQuotient& hpar,
                            const TruncatedQuotient& upar);

/// The mutually inverse algebra isomorphisms
///   (U #_R H)_par -> U #_T H_par : [u # h] -> u # [h]
///   U #_T H_par -> (U #_R H)_par : u # [h_1]...[h_n] -> [u # h_1][1 # h_2]...[1 # h_n]
/// available when U carries no partiality (its truncation stabilizes at
/// dim U with invertible bracket).
struct ParSmashIso {
  AlgebraData smash;  // U #_T H_par
  MorphismData to_smash, from_smash;
  Report verified;
};
ParSmashIso par_of_smash_iso(const HopfData& u, const HopfData& h,
                             const TwistMap& r, const HopfData& smash_hopf,
                             const TruncatedQuotient& smash_par,
                             const TruncatedQuotient& hpar,
                             const LiftedTwist& t,
                             const TruncatedQuotient& upar_certificate);

/// The base-algebra identities eps_{u#h} = 1 # eps_{u |>. h} and
/// tilde-eps_{u#h} = eps(u) 1 # tilde-eps_h inside U #_T H_par, and the
/// resulting isomorphisms between the generated base subalgebras.
Report base_algebra_isos(const HopfData& u, const HopfData& h,
                         const TwistMap& r, const HopfData& smash_hopf,
                         const TruncatedQuotient& hpar, const LiftedTwist& t);

/// Subgroup table for a subset of G (indices into G); checks closure.
GroupTable subgroup_table(const GroupTable& g,
                          const std::vector<std::size_t>& elements);

/// The twist kL (x) kM -> kM (x) kL, l (x) m -> m' (x) l' with lm = m'l',
/// from an exact factorization G = ML. All five flags verified.
TwistMap exact_factorization_twist(const GroupTable& g,
                                   const std::vector<std::size_t>& m_elements,
                                   const std::vector<std::size_t>& l_elements,
                                   const FieldSpec& f);

/// Gamma_M(G) for an exact factorization G = ML, together with the algebra
/// isomorphism theta : kM #_T k_par L -> kGamma_M(G).
struct GammaMResult {
  std::vector<std::pair<std::uint32_t, std::size_t>> arrows;  // (coset mask, g)
  std::vector<std::size_t> coset_of;  // g -> left coset index of gM
  AlgebraData algebra;                // groupoid algebra of Gamma_M(G)
  AlgebraData smash;                  // kM #_T k_par L
  MorphismData theta;
  Report verified;
};
GammaMResult gamma_M_groupoid(const GroupTable& g,
                              const std::vector<std::size_t>& m_elements,
                              const std::vector<std::size_t>& l_elements,
                              const FieldSpec& f, std::size_t trunc_degree);

/// G-graded partial F-modules: checks the grading projectors, the
/// compatibility eta(f) alpha(p_g) = alpha(p_{f|>g}) eta(f), and when it
/// holds assembles the module over kG* #_T k_par F.
struct GradedCompatResult {
  Report report;
  std::optional<AlgebraData> smash;  // kG* #_T k_par F
  std::optional<Matrix> module_map;  // smash -> End(V)
};
GradedCompatResult graded_partial_compat(
    const GroupTable& fgrp, const GroupTable& ggrp,
    const std::vector<std::vector<std::size_t>>& f_on_g, const PartialRep& eta,
    const std::vector<Matrix>& graders, const TruncatedQuotient& qf);

/// Drinfel'd double D(H) = (H*)^op #_R H with the evaluation twist
///   R(h (x) psi) = psi_1(S(h_1)) psi_3(h_3) psi_2 (x) h_2.
struct DrinfeldResult {
  TwistMap twist;
  SmashAlgebra double_algebra;
};
DrinfeldResult drinfeld_twist(const HopfData& h);

}  // namespace hopfpar
