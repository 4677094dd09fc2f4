#pragma once

#include "hopfpar/algebra.hpp"
#include "hopfpar/coradical.hpp"

namespace hopfpar {

/// Unital linear map pi : H -> B weakening multiplicativity by epsilon-type
/// correction factors (axioms PR1-PR5). Constructed through make_partial_rep,
/// which runs the axiom suite.
struct PartialRep {
  HopfData source;
  AlgebraData target;
  Matrix map;       // target.dim x source.dim
  Report verified;  // cached axiom report
};

/// PR1-PR5 on all basis pairs; PR2/PR3 and PR4/PR5 both evaluated and their
/// agreement asserted as a consistency cross-check.
Report check_pr_axioms(const HopfData& source, const AlgebraData& target,
                       const Matrix& map);

/// Throws when the axioms fail.
PartialRep make_partial_rep(const HopfData& source, const AlgebraData& target,
                            const Matrix& map);

/// The linear map h -> eps^pi_h = pi(h_(1)) pi(S(h_(2))) as a matrix
/// target.dim x source.dim.
Matrix epsilon_pi_map(const PartialRep& rep);
/// eps^pi_h for one element.
Matrix epsilon_pi(const PartialRep& rep, const Matrix& h);

/// True iff pi is an algebra map; cross-checked against the criterion
/// eps^pi_h = eps(h) 1_B, which must agree on every input.
bool is_global(const PartialRep& rep);

/// The coradical criterion: eps^pi triviality evaluated only on a basis of
/// H_0. Equivalent to globality; the equivalence is asserted by tests.
bool coradical_global_test(const PartialRep& rep, const Filtration& filtration);

/// Given eps^pi triviality on V u W (checked), returns Delta^{-1}(H(x)V +
/// W(x)H) and asserts eps^pi triviality on its basis.
Subspace vw_extension(const PartialRep& rep, const Subspace& V,
                      const Subspace& W);

/// The rank-one non-global partial representation pi : H -> k supported on
/// the complement decomposition H = k1 + C. All structural requirements on C
/// are checked; the result is verified non-global.
PartialRep cosemisimple_nonglobal_rep(const HopfData& h, const Subspace& complement);

/// pi o phi for a certified Hopf morphism phi into rep.source.
PartialRep restrict_along(const PartialRep& rep, const MorphismData& phi,
                          const HopfData& new_source);

/// PA1-PA4 for a linear map H (x) A -> A; PA4 (symmetry) reported separately.
Report check_partial_action(const HopfData& h, const AlgebraData& a,
                            const Matrix& action);

/// One-dimensional algebra over f (target for rank-one representations).
AlgebraData scalar_algebra(const FieldSpec& f);
/// Full matrix algebra End(k^n) as AlgebraData, basis E_ij row-major.
AlgebraData endomorphism_algebra(const FieldSpec& f, std::size_t n);

}  // namespace hopfpar
