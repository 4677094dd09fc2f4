#include "hopfpar/linalg.hpp"

#include <sstream>

namespace hopfpar {

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols),
      data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::zero(const FieldSpec& f, std::size_t rows, std::size_t cols) {
  return Matrix(f, rows, cols);
}

Matrix Matrix::flip(const FieldSpec& f, std::size_t a, std::size_t b) {
  Matrix m(f, a * b, a * b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      m.at(j * a + i, i * b + j) = Scalar::one(f);
  return m;
}

Matrix Matrix::column(const FieldSpec& f, const std::vector<Scalar>& entries) {
  Matrix m(f, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, 0) = entries[i];
  return m;
}

Matrix Matrix::row_vector(const FieldSpec& f, const std::vector<Scalar>& entries) {
  Matrix m(f, 1, entries.size());
  for (std::size_t j = 0; j < entries.size(); ++j) m.at(0, j) = entries[j];
  return m;
}

Matrix Matrix::from_int(const FieldSpec& f,
                        const std::vector<std::vector<long>>& rows) {
  if (rows.empty()) return Matrix(f, 0, 0);
  Matrix m(f, rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols())
      throw std::invalid_argument("ragged integer matrix literal");
    for (std::size_t j = 0; j < m.cols(); ++j)
      m.at(i, j) = Scalar(f, rows[i][j]);
  }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch in +");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch in -");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_)
    throw std::invalid_argument("matrix shape mismatch in *: " +
                                std::to_string(cols_) + " vs " +
                                std::to_string(o.rows_));
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;  // structure-constant matrices are sparse
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) += a * b;
      }
    }
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (auto& e : r.data_) e *= c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i]) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  auto sol = solve(*this, identity(field_, rows_));
  if (!sol) return std::nullopt;
  // solve() returns some preimage; for invertibility rank must be full
  if (rref(*this).rank != rows_) return std::nullopt;
  return sol;
}

Matrix Matrix::kron(const Matrix& o) const {
  Matrix r(field_, rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& a = at(i, j);
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < o.rows_; ++k)
        for (std::size_t l = 0; l < o.cols_; ++l) {
          const Scalar& b = o.at(k, l);
          if (!b.is_zero()) r.at(i * o.rows_ + k, j * o.cols_ + l) = a * b;
        }
    }
  return r;
}

Matrix Matrix::hstack(const Matrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("hstack row mismatch");
  Matrix r(field_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("vstack col mismatch");
  Matrix r(field_, rows_ + o.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

Matrix Matrix::submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                         std::size_t ncols) const {
  Matrix r(field_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) r.at(i, j) = at(row0 + i, col0 + j);
  return r;
}

Matrix Matrix::col(std::size_t j) const { return submatrix(0, j, rows_, 1); }
Matrix Matrix::row(std::size_t i) const { return submatrix(i, 0, 1, cols_); }

std::string Matrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? " " : "[") << at(i, j).str();
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  if (rows_ == 0) os << "[[]]";
  return os.str();
}

RrefResult rref(const Matrix& m) {
  RrefResult out;
  Matrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!a.at(i, c).is_zero()) { piv = i; break; }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(a.at(piv, j), a.at(r, j));
    Scalar inv = a.at(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Scalar f = a.at(i, c);
      for (std::size_t j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.matrix = a;
  return out;
}

Subspace::Subspace(std::size_t ambient_dim, const Matrix& spanning_rows)
    : ambient_(ambient_dim) {
  if (spanning_rows.cols() != ambient_dim)
    throw std::invalid_argument("subspace spanning rows have wrong width");
  RrefResult rr = rref(spanning_rows);
  basis_ = rr.matrix.submatrix(0, 0, rr.rank, ambient_dim);
}

Subspace Subspace::zero(const FieldSpec& f, std::size_t ambient_dim) {
  return Subspace(ambient_dim, Matrix(f, 0, ambient_dim));
}

Subspace Subspace::full(const FieldSpec& f, std::size_t ambient_dim) {
  return Subspace(ambient_dim, Matrix::identity(f, ambient_dim));
}

Subspace Subspace::span_columns(const Matrix& columns) {
  return Subspace(columns.rows(), columns.transpose());
}

bool Subspace::contains(const Matrix& v) const {
  if (v.rows() != ambient_ || v.cols() != 1)
    throw std::invalid_argument("contains() expects an ambient column vector");
  // reduce v against the RREF rows
  Matrix w = v;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    std::size_t p = 0;
    while (p < ambient_ && basis_.at(r, p).is_zero()) ++p;
    const Scalar& c = w.at(p, 0);
    if (c.is_zero()) continue;
    Scalar f = c;
    for (std::size_t j = 0; j < ambient_; ++j)
      w.at(j, 0) -= f * basis_.at(r, j);
  }
  return w.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_column(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Matrix Subspace::basis_column(std::size_t i) const {
  return basis_.row(i).transpose();
}

Subspace kernel(const Matrix& m) {
  RrefResult rr = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  Matrix rows(m.field(), n - rr.rank, n);
  std::size_t k = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    rows.at(k, c) = Scalar::one(m.field());
    for (std::size_t r = 0; r < rr.rank; ++r)
      rows.at(k, rr.pivots[r]) = -rr.matrix.at(r, c);
    ++k;
  }
  return Subspace(n, rows);
}

Subspace image(const Matrix& m) { return Subspace(m.rows(), m.transpose()); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace_sum: ambient dimension mismatch");
  return Subspace(a.ambient_dim(), a.basis().vstack(b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace_intersect: ambient dimension mismatch");
  // kernel of the stacked bases: (lambda, mu) with lambda*A + mu*B = 0 gives
  // the intersection element lambda*A.
  const Matrix stacked = a.basis().transpose().hstack(b.basis().transpose());
  Subspace ker = kernel(stacked);
  Matrix rows(a.field(), ker.dim(), a.ambient_dim());
  for (std::size_t i = 0; i < ker.dim(); ++i) {
    Matrix lm = ker.basis_column(i);
    Matrix lambda = lm.submatrix(0, 0, a.dim(), 1);
    Matrix elem = a.basis().transpose() * lambda;  // column in ambient
    for (std::size_t j = 0; j < a.ambient_dim(); ++j)
      rows.at(i, j) = elem.at(j, 0);
  }
  return Subspace(a.ambient_dim(), rows);
}

Subspace preimage(const Matrix& map, const Subspace& target) {
  if (map.rows() != target.ambient_dim())
    throw std::invalid_argument("preimage: map codomain mismatch");
  // functionals vanishing on target: kernel of basis * (.)
  Subspace ann = kernel(target.basis());
  if (ann.dim() == 0) return Subspace::full(map.field(), map.cols());
  Matrix proj = ann.basis();  // rows are functionals
  return kernel(proj * map);
}

Subspace subspace_tensor(const Subspace& a, const Subspace& b) {
  return Subspace(a.ambient_dim() * b.ambient_dim(), a.basis().kron(b.basis()));
}

Matrix tensor_permutation(const FieldSpec& f, const std::vector<std::size_t>& dims,
                          const std::vector<std::size_t>& new_order) {
  if (dims.size() != new_order.size())
    throw std::invalid_argument("tensor_permutation: arity mismatch");
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  Matrix m(f, total, total);
  std::vector<std::size_t> idx(dims.size());
  for (std::size_t src = 0; src < total; ++src) {
    std::size_t rem = src;
    for (std::size_t k = dims.size(); k-- > 0;) {
      idx[k] = rem % dims[k];
      rem /= dims[k];
    }
    std::size_t dst = 0;
    for (std::size_t k = 0; k < dims.size(); ++k)
      dst = dst * dims[new_order[k]] + idx[new_order[k]];
    m.at(dst, src) = Scalar::one(f);
  }
  return m;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs) {
  if (m.rows() != rhs.rows())
    throw std::invalid_argument("solve: rhs height mismatch");
  RrefResult rr = rref(m.hstack(rhs));
  // any pivot inside the rhs block means an inconsistent column
  for (auto p : rr.pivots)
    if (p >= m.cols()) return std::nullopt;
  Matrix x(m.field(), m.cols(), rhs.cols());
  for (std::size_t r = 0; r < rr.rank; ++r)
    for (std::size_t j = 0; j < rhs.cols(); ++j)
      x.at(rr.pivots[r], j) = rr.matrix.at(r, m.cols() + j);
  return x;
}

}  // namespace hopfpar
