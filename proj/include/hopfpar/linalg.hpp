#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hopfpar/field.hpp"

namespace hopfpar {

/// Dense matrix over an exact field. Row-major storage; all entries share the
/// matrix's field. Elements of k^n are columns (n x 1); linear maps act by
/// left multiplication. The tensor index convention is row-major throughout:
/// e_i (x) e_j of k^a (x) k^b sits at index i*b + j.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& f, std::size_t n);
  static Matrix zero(const FieldSpec& f, std::size_t rows, std::size_t cols);
  /// Permutation matrix of the tensor flip k^a (x) k^b -> k^b (x) k^a.
  static Matrix flip(const FieldSpec& f, std::size_t a, std::size_t b);
  static Matrix column(const FieldSpec& f, const std::vector<Scalar>& entries);
  static Matrix row_vector(const FieldSpec& f, const std::vector<Scalar>& entries);
  /// Convenience: build from integer initializer rows.
  static Matrix from_int(const FieldSpec& f,
                         const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;  // composition / application
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;

  bool is_zero() const;
  std::optional<Matrix> inverse() const;  // nullopt when singular

  /// Kronecker product under the row-major convention: (a (x) b)(x (x) y)
  /// = ax (x) by with index i*b.rows + j.
  Matrix kron(const Matrix& o) const;

  Matrix hstack(const Matrix& o) const;
  Matrix vstack(const Matrix& o) const;
  Matrix submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                   std::size_t ncols) const;
  Matrix col(std::size_t j) const;
  Matrix row(std::size_t i) const;

  std::string str() const;  // human-readable, exact entries

 private:
  FieldSpec field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix matrix;                  // the unique RREF
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
  std::size_t rank = 0;
};

RrefResult rref(const Matrix& m);

/// Linear subspace of k^n, canonicalized as an RREF basis (rows are basis
/// vectors, no zero rows). Equality of subspaces is row-wise matrix equality.
class Subspace {
 public:
  Subspace() = default;
  /// Canonicalizes the spanning rows via RREF.
  Subspace(std::size_t ambient_dim, const Matrix& spanning_rows);

  static Subspace zero(const FieldSpec& f, std::size_t ambient_dim);
  static Subspace full(const FieldSpec& f, std::size_t ambient_dim);
  /// Span of the given column vectors.
  static Subspace span_columns(const Matrix& columns);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const FieldSpec& field() const { return basis_.field(); }

  bool contains(const Matrix& column_vector) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const;

  /// Basis vector i as a column.
  Matrix basis_column(std::size_t i) const;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);  // column span
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
/// {x : map(x) in target}; computed as the kernel of the composite of map
/// with a projection annihilating exactly target.
Subspace preimage(const Matrix& map, const Subspace& target);
/// Tensor product of subspaces of k^a, k^b inside k^{ab}.
Subspace subspace_tensor(const Subspace& a, const Subspace& b);

/// One particular solution of m x = rhs (column by column), or nullopt if any
/// column is inconsistent. Inconsistency is an outcome, not an error.
std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs);

inline Matrix tensor_matrix(const Matrix& a, const Matrix& b) { return a.kron(b); }

/// Permutation matrix rearranging tensor legs: dims are the source leg
/// dimensions, new_order[k] is the source leg placed at destination slot k.
Matrix tensor_permutation(const FieldSpec& f, const std::vector<std::size_t>& dims,
                          const std::vector<std::size_t>& new_order);

}  // namespace hopfpar
