#pragma once

#include <optional>

#include "hopfpar/groups.hpp"
#include "hopfpar/partial_rep.hpp"
#include "hopfpar/truncation.hpp"

namespace hopfpar {

// -- groupoid model of k_par G ------------------------------------------------

/// The groupoid of pairs (A, g), A a subset of G containing 1 and g^{-1};
/// (A,g)(B,h) = (B, gh) exactly when A = hB. Arrow (A,g) maps A to gA; its
/// inverse is (gA, g^{-1}).
struct GroupoidGamma {
  GroupTable group;
  struct Arrow {
    std::uint32_t subset;  // bitmask over group elements; bit 0 is the identity
    std::size_t element;
  };
  std::vector<Arrow> arrows;

  std::size_t size() const { return arrows.size(); }
  std::optional<std::size_t> compose(std::size_t i, std::size_t j) const;
  std::size_t inverse_arrow(std::size_t i) const;
  std::size_t arrow_index(std::uint32_t subset, std::size_t g) const;
  std::uint32_t act_on_subset(std::size_t g, std::uint32_t subset) const;
  std::string arrow_string(std::size_t i) const;
};

/// Enumerates Gamma(G); the arrow count is verified against the closed form
/// 2^{|G|-1} + (|G|-1) 2^{|G|-2}.
GroupoidGamma gamma_groupoid(const GroupTable& g);

/// Groupoid algebra with its weak Hopf structure Delta(gamma) = gamma (x)
/// gamma, eps = 1, S(gamma) = gamma^{-1}.
struct GroupoidAlgebra {
  GroupoidGamma groupoid;
  AlgebraData algebra;
  Matrix weak_comult;   // n^2 x n
  Matrix weak_counit;   // 1 x n
  Matrix weak_antipode; // n x n
  Report verified;
};

GroupoidAlgebra groupoid_algebra(const GroupoidGamma& g, const FieldSpec& f);

/// Weak bialgebra / weak Hopf axioms (Bohm-Nill-Szlachanyi form; sourced
/// from the standard definitions, not restated in this project's references).
struct WeakHopfData {
  AlgebraData algebra;
  Matrix comult, counit, antipode;
};
Report verify_weak_hopf(const WeakHopfData& w);

// -- tensor-algebra truncations ----------------------------------------------

/// Relations 1_H = 1, h (x) k1 (x) S(k2) = hk1 (x) S(k2) and its mirror,
/// instantiated on all basis pairs.
std::vector<SparseVec> hpar_relations(const HopfData& h, const WordSpace& ws);
/// Relations eps_1 = 1, eps_h = eps_{h1} eps_{h2},
/// eps_{h1} eps_{h2 k} = eps_{h1 k} eps_{h2}.
std::vector<SparseVec> apar_relations(const HopfData& h, const WordSpace& ws);

TruncatedQuotient truncated_hpar(const HopfData& h, std::size_t degree);
TruncatedQuotient truncated_apar(const HopfData& h, std::size_t degree);

/// Dimension table, stabilization flag and closure certificates.
Report stabilization_report(const TruncatedQuotient& t);

/// The partial representation [-] : H -> H_par of a stabilized truncation,
/// with its PR axioms and the splitting H_par -> H checked.
PartialRep bracket_rep(const HopfData& h, const TruncatedQuotient& hpar);
/// The forgetful algebra map H_par -> H, [h1]...[hn] -> h1...hn.
MorphismData forgetful_map(const HopfData& h, const TruncatedQuotient& hpar);

/// Mutually inverse algebra isomorphisms between the groupoid algebra and a
/// stabilized truncation of k_par G:
///   (A,g) -> [g] prod_{h in A}[h][h^{-1}] prod_{h notin A}(1 - [h][h^{-1}])
///   [g] -> sum_{A owns 1, g^{-1}} (A, g).
std::pair<MorphismData, MorphismData> iso_kparG(const GroupoidAlgebra& ga,
                                                const TruncatedQuotient& trunc,
                                                const HopfData& group_hopf);

/// The action h . a = [h1] a [S(h2)] of H on the stabilized A_par, computed
/// inside the stabilized H_par through the embedding of A_par.
struct AparAction {
  Matrix action;       // a_dim x (h_dim * a_dim)
  Matrix embedding;    // hpar_dim x apar_dim, the algebra embedding
  Report report;       // PA1-PA4
};
AparAction partial_action_on_apar(const HopfData& h,
                                  const TruncatedQuotient& apar,
                                  const TruncatedQuotient& hpar);

/// Partial smash product A #_under H = (A (x) H)(1 (x) 1) with its induced
/// multiplication, and the isomorphism from the stabilized H_par sending
/// [h] to 1 # h.
struct PartialSmash {
  AlgebraData algebra;        // on the projected basis
  Matrix projection;          // smash_dim x (a_dim * h_dim)
  Matrix section;             // (a_dim * h_dim) x smash_dim
  MorphismData iso_from_hpar; // certified isomorphism H_par -> A # H
};
PartialSmash partial_smash(const TruncatedQuotient& apar, const HopfData& h,
                           const AparAction& act,
                           const TruncatedQuotient& hpar);

/// The weak Hopf algebra W of the Hopf category with objects the subsets of
/// G containing 1, Hom(A,B) = U (x) kK_{A,B}, composition through the action
/// of G on U; verified weak Hopf and algebra-isomorphic to U #_T kGamma(G).
struct HopfCategoryResult {
  WeakHopfData weak;
  GroupoidGamma groupoid;
  AlgebraData smash;         // U #_T kGamma(G)
  MorphismData iso_to_smash; // W -> U #_T kGamma(G)
  Report verified;
};
HopfCategoryResult hopf_category_weak_hopf(const HopfData& u, const GroupTable& g,
                                           const std::vector<Matrix>& action);

}  // namespace hopfpar
