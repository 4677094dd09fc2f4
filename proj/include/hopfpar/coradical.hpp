#pragma once

#include <optional>

#include "hopfpar/algebra.hpp"

namespace hopfpar {

/// Coradical filtration H_0 <= H_1 <= ... of a finite-dimensional coalgebra;
/// strictly increasing until it exhausts the ambient space.
struct Filtration {
  std::vector<Subspace> stages;
  std::size_t exhaustive_at = 0;  // first n with H_n = H

  const Subspace& coradical() const { return stages.front(); }
  const Subspace& stage(std::size_t n) const {
    return stages[n < stages.size() ? n : stages.size() - 1];
  }
};

/// Convolution-dual algebra on the dual basis: transpose of the
/// comultiplication as multiplication, counit as unit.
AlgebraData dual_algebra(const CoalgebraData& c);

/// Jacobson radical. Char 0 (or p > dim): the trace-form kernel; small
/// characteristic: sum of all nilpotent principal ideals, valid for dim <= 8.
/// Output is certified: two-sided ideal, nilpotent, semisimple quotient.
Subspace jacobson_radical(const AlgebraData& a);

/// Sum of all simple subcoalgebras, computed as the annihilator of the
/// radical of the dual algebra; verified to be a subcoalgebra.
Subspace coradical(const CoalgebraData& c);

Filtration coradical_filtration(const CoalgebraData& c);

bool is_connected(const CoalgebraData& c);
bool is_cosemisimple(const CoalgebraData& c);

struct ChevalleyQuotient {
  HopfData quotient;
  MorphismData projection;  // certified Hopf morphism
};

/// When J(H) is a Hopf ideal, the quotient Hopf algebra H/J(H) with its
/// certified projection; otherwise the failing inclusion is reported.
struct ChevalleyResult {
  std::optional<ChevalleyQuotient> quotient;
  Report checks;  // which Hopf-ideal inclusions held
};

ChevalleyResult chevalley_quotient(const HopfData& h);

/// Span of all products of basis vectors of a and b (a, b subspaces of the
/// algebra); used by ideal closure and nilpotency certificates.
Subspace subspace_product(const AlgebraData& alg, const Subspace& a,
                          const Subspace& b);

/// Quotient of an algebra by a two-sided ideal: structure constants on the
/// non-pivot coordinates, plus the projection and a linear section.
struct AlgebraQuotient {
  AlgebraData algebra;
  Matrix projection;  // quot_dim x dim
  Matrix section;     // dim x quot_dim
};
AlgebraQuotient quotient_algebra(const AlgebraData& a, const Subspace& ideal);

}  // namespace hopfpar
