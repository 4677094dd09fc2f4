#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfpar/linalg.hpp"
#include "hopfpar/report.hpp"

namespace hopfpar {

/// Finite-dimensional associative unital algebra, stored as the matrix of the
/// linearized multiplication k^{n^2} -> k^n in a fixed basis. All axiom
/// checks are then matrix identities.
struct AlgebraData {
  FieldSpec field;
  std::size_t dim = 0;
  Matrix mult;  // dim x dim^2
  Matrix unit;  // dim x 1
  std::vector<std::string> labels;  // optional basis labels

  /// x y by sparse iteration over the nonzero coordinates.
  Matrix product(const Matrix& x, const Matrix& y) const;
  /// Matrix of left multiplication by the element x.
  Matrix left_op(const Matrix& x) const {
    return mult * x.kron(Matrix::identity(field, dim));
  }
  Matrix right_op(const Matrix& x) const {
    return mult * Matrix::identity(field, dim).kron(x);
  }
  Matrix basis_element(std::size_t i) const {
    Matrix v(field, dim, 1);
    v.at(i, 0) = Scalar::one(field);
    return v;
  }
  std::string label(std::size_t i) const {
    return i < labels.size() ? labels[i] : "b" + std::to_string(i);
  }
};

/// Finite-dimensional coalgebra: comultiplication k^n -> k^{n^2} and counit.
struct CoalgebraData {
  FieldSpec field;
  std::size_t dim = 0;
  Matrix comult;  // dim^2 x dim
  Matrix counit;  // 1 x dim
  std::vector<std::string> labels;

  std::string label(std::size_t i) const {
    return i < labels.size() ? labels[i] : "b" + std::to_string(i);
  }
};

/// Hopf algebra: bialgebra plus antipode (and its inverse when known).
/// Algebra and coalgebra share dimension, field and basis.
struct HopfData {
  AlgebraData algebra;
  CoalgebraData coalgebra;
  Matrix antipode;  // dim x dim
  std::optional<Matrix> antipode_inverse;

  const FieldSpec& field() const { return algebra.field; }
  std::size_t dim() const { return algebra.dim; }
  const Matrix& mult() const { return algebra.mult; }
  const Matrix& unit() const { return algebra.unit; }
  const Matrix& comult() const { return coalgebra.comult; }
  const Matrix& counit() const { return coalgebra.counit; }
  std::string label(std::size_t i) const { return algebra.label(i); }
  Matrix basis_element(std::size_t i) const { return algebra.basis_element(i); }
};

enum class MorphismKind { algebra, coalgebra, hopf };

/// Linear map between structured objects, with the structures it claims to
/// preserve carried alongside so preservation can be certified.
struct MorphismData {
  Matrix map;  // target_dim x source_dim
  std::optional<AlgebraData> source_alg, target_alg;
  std::optional<CoalgebraData> source_co, target_co;
};

MorphismData algebra_morphism(const AlgebraData& src, const AlgebraData& dst,
                              const Matrix& map);
MorphismData hopf_morphism(const HopfData& src, const HopfData& dst,
                           const Matrix& map);

// -- axiom verifiers ---------------------------------------------------------

Report verify_algebra(const AlgebraData& a);
Report verify_coalgebra(const CoalgebraData& c);
Report verify_bialgebra(const HopfData& h);
Report verify_antipode(const HopfData& h);
/// All of the above in one suite.
Report verify_hopf(const HopfData& h);
Report verify_morphism(const MorphismData& m, MorphismKind kind);

/// Throws std::runtime_error when the report fails; used by the catalog
/// constructors, which verify eagerly.
void require_pass(const Report& r);

// -- structural constructions ------------------------------------------------

/// Convolution dual: multiplication is the transpose of the comultiplication
/// and vice versa; antipode transposes.
HopfData dual_hopf(const HopfData& h);
/// Opposite multiplication; Hopf antipode becomes the inverse antipode.
HopfData opposite_hopf(const HopfData& h);
/// Tensor product bialgebra/Hopf structure on the row-major tensor basis.
HopfData tensor_bialgebra(const HopfData& a, const HopfData& b);
/// The canonical inclusions of the factors into tensor_bialgebra(a, b).
std::pair<MorphismData, MorphismData> tensor_inclusions(const HopfData& a,
                                                        const HopfData& b);

/// Kernel of x -> Delta(x) - x(x)1 - 1(x)x.
Subspace primitives(const HopfData& h);

/// Witness helper: decodes a flat column index of a composite identity into
/// a basis tuple "(label,label,...)".
std::string tuple_witness(std::size_t flat, std::size_t arity, std::size_t dim,
                          const std::vector<std::string>& labels);

/// Compares two matrices representing an identity on basis tuples; on
/// mismatch appends a failing item with the decoded witness tuple.
void check_identity(Report& rep, const std::string& id, const Matrix& lhs,
                    const Matrix& rhs, std::size_t arity, std::size_t dim,
                    const std::vector<std::string>& labels);

}  // namespace hopfpar
