#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfpar/linalg.hpp"

using namespace hopfpar;

namespace {

const FieldSpec Q{};
const FieldSpec F2{2};
const FieldSpec F3{3};

Matrix random_matrix(const FieldSpec& f, std::size_t rows, std::size_t cols,
                     std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-4, 4);
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar(f, d(rng));
  return m;
}

// all vectors of F_p^n, as columns
std::vector<Matrix> enumerate_vectors(const FieldSpec& f, std::size_t n) {
  std::size_t p = f.characteristic;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  std::vector<Matrix> out;
  for (std::size_t code = 0; code < total; ++code) {
    Matrix v(f, n, 1);
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      v.at(i, 0) = Scalar(f, static_cast<long>(c % p));
      c /= p;
    }
    out.push_back(v);
  }
  return out;
}

bool in_enumerated_span(const FieldSpec& f, const std::vector<Matrix>& gens,
                        const Matrix& v) {
  // brute-force span membership over F_p by walking all coefficient tuples
  std::size_t p = f.characteristic;
  std::size_t total = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) total *= p;
  for (std::size_t code = 0; code < total; ++code) {
    Matrix acc(f, v.rows(), 1);
    std::size_t c = code;
    for (const auto& g : gens) {
      acc = acc + g.scaled(Scalar(f, static_cast<long>(c % p)));
      c /= p;
    }
    if (acc == v) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("scalar arithmetic and canonical strings") {
  Scalar a = Scalar::parse(Q, "2/4");
  CHECK(a.str() == "1/2");
  CHECK((a + a).str() == "1");
  CHECK((a - a).is_zero());
  CHECK((-a).str() == "-1/2");
  CHECK(a.inverse().str() == "2");

  Scalar b(F3, -1);
  CHECK(b.str() == "2");
  CHECK((b * b).str() == "1");
  CHECK(b.inverse().str() == "2");
  CHECK_THROWS(Scalar(F3, 1) == Scalar(F2, 1));
  CHECK_THROWS(FieldSpec(4));
  CHECK_THROWS(FieldSpec(1));
}

TEST_CASE("rref identity, zero, hand-eliminated example") {
  Matrix id3 = Matrix::identity(Q, 3);
  auto r = rref(id3);
  CHECK(r.matrix == id3);
  CHECK(r.rank == 3);

  auto z = rref(Matrix::zero(Q, 2, 4));
  CHECK(z.rank == 0);
  CHECK(z.matrix.is_zero());

  // [[2,4],[1,2]] -> [[1,2],[0,0]], rank 1
  Matrix m = Matrix::from_int(Q, {{2, 4}, {1, 2}});
  auto rr = rref(m);
  CHECK(rr.rank == 1);
  CHECK(rr.matrix == Matrix::from_int(Q, {{1, 2}, {0, 0}}));
}

TEST_CASE("rref is idempotent on random matrices") {
  std::mt19937 rng(7);
  for (const FieldSpec& f : {Q, F2, F3})
    for (int trial = 0; trial < 20; ++trial) {
      Matrix m = random_matrix(f, 4, 5, rng);
      auto r1 = rref(m);
      auto r2 = rref(r1.matrix);
      CHECK(r1.matrix == r2.matrix);
      CHECK(r1.rank == r2.rank);
    }
}

TEST_CASE("kernel: identity, zero map, F_2 example, rank-nullity") {
  CHECK(kernel(Matrix::identity(Q, 3)).dim() == 0);
  CHECK(kernel(Matrix::zero(Q, 2, 3)) == Subspace::full(Q, 3));

  // [[1,1]] over F_2 -> span{(1,1)}; cross-checked by exhausting F_2^2
  Matrix m = Matrix::from_int(F2, {{1, 1}});
  Subspace k = kernel(m);
  CHECK(k.dim() == 1);
  for (const auto& v : enumerate_vectors(F2, 2)) {
    bool in_kernel = (m * v).is_zero();
    CHECK(k.contains(v) == in_kernel);
  }

  std::mt19937 rng(11);
  for (const FieldSpec& f : {Q, F2, F3})
    for (int trial = 0; trial < 20; ++trial) {
      Matrix m2 = random_matrix(f, 3, 5, rng);
      CHECK(rref(m2).rank + kernel(m2).dim() == m2.cols());
    }
}

TEST_CASE("subspace sum/intersection dimensions and examples") {
  Subspace e1(2, Matrix::from_int(Q, {{1, 0}}));
  Subspace diag(2, Matrix::from_int(Q, {{1, 1}}));
  CHECK(subspace_intersect(e1, diag).dim() == 0);
  CHECK(subspace_sum(e1, diag) == Subspace::full(Q, 2));

  Subspace v(3, Matrix::from_int(Q, {{1, 2, 0}, {0, 0, 1}}));
  CHECK(subspace_sum(v, Subspace::zero(Q, 3)) == v);
  CHECK(subspace_intersect(v, v) == v);

  CHECK_THROWS(subspace_sum(e1, v));

  std::mt19937 rng(13);
  for (const FieldSpec& f : {Q, F3})
    for (int trial = 0; trial < 25; ++trial) {
      Subspace a(4, random_matrix(f, 2, 4, rng));
      Subspace b(4, random_matrix(f, 2, 4, rng));
      CHECK(subspace_sum(a, b).dim() + subspace_intersect(a, b).dim() ==
            a.dim() + b.dim());
      CHECK(subspace_sum(a, b).contains(a));
      CHECK(a.contains(subspace_intersect(a, b)));
    }
}

TEST_CASE("kernel/sum/intersect agree with exhaustive enumeration over F_p") {
  std::mt19937 rng(17);
  for (const FieldSpec& f : {F2, F3}) {
    const std::size_t n = f.characteristic == 2 ? 6 : 4;
    for (int trial = 0; trial < 6; ++trial) {
      Matrix m = random_matrix(f, 3, n, rng);
      Subspace k = kernel(m);
      for (const auto& v : enumerate_vectors(f, n))
        CHECK(k.contains(v) == (m * v).is_zero());

      Subspace a(n, random_matrix(f, 2, n, rng));
      Subspace b(n, random_matrix(f, 2, n, rng));
      Subspace s = subspace_sum(a, b);
      Subspace i = subspace_intersect(a, b);
      std::vector<Matrix> agens, bgens, sgens;
      for (std::size_t r = 0; r < a.dim(); ++r) agens.push_back(a.basis_column(r));
      for (std::size_t r = 0; r < b.dim(); ++r) bgens.push_back(b.basis_column(r));
      sgens = agens;
      sgens.insert(sgens.end(), bgens.begin(), bgens.end());
      for (const auto& v : enumerate_vectors(f, n)) {
        bool in_a = in_enumerated_span(f, agens, v);
        bool in_b = in_enumerated_span(f, bgens, v);
        CHECK(i.contains(v) == (in_a && in_b));
        CHECK(s.contains(v) == in_enumerated_span(f, sgens, v));
      }
    }
  }
}

TEST_CASE("preimage: full, zero, explicit system") {
  Matrix m = Matrix::from_int(Q, {{1, 0, 2}, {0, 1, 1}});
  CHECK(preimage(m, Subspace::full(Q, 2)) == Subspace::full(Q, 3));
  CHECK(preimage(m, Subspace::zero(Q, 2)) == kernel(m));

  // Delta of kC2 maps 1 -> e00, g -> e11; preimage of 1(x)H + H(x)1 is span{1}
  Matrix delta(Q, 4, 2);
  delta.at(0, 0) = Scalar::one(Q);
  delta.at(3, 1) = Scalar::one(Q);
  Subspace target(4, Matrix::from_int(Q, {{1, 0, 0, 0}, {0, 1, 0, 0},
                                          {0, 0, 1, 0}}));
  Subspace pre = preimage(delta, target);
  CHECK(pre.dim() == 1);
  CHECK(pre.basis() == Matrix::from_int(Q, {{1, 0}}));
}

TEST_CASE("solve: identity, inconsistent, back-substitution") {
  Matrix id = Matrix::identity(Q, 3);
  Matrix b = Matrix::from_int(Q, {{1}, {2}, {3}});
  auto x = solve(id, b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  auto none = solve(Matrix::zero(Q, 2, 2), Matrix::from_int(Q, {{1}, {0}}));
  CHECK(!none.has_value());

  Matrix m = Matrix::from_int(Q, {{1, 1}, {0, 1}});
  auto sol = solve(m, Matrix::from_int(Q, {{3}, {1}}));
  REQUIRE(sol.has_value());
  CHECK(*sol == Matrix::from_int(Q, {{2}, {1}}));
}

TEST_CASE("tensor products: identity, entrywise, action on simple tensors") {
  Matrix i2 = Matrix::identity(Q, 2), i3 = Matrix::identity(Q, 3);
  CHECK(tensor_matrix(i2, i3) == Matrix::identity(Q, 6));

  Matrix a = Matrix::from_int(Q, {{1, 2}, {3, 4}});
  Matrix b = Matrix::from_int(Q, {{0, 5}, {6, 7}});
  Matrix t = tensor_matrix(a, b);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          CHECK(t.at(i * 2 + k, j * 2 + l) == a.at(i, j) * b.at(k, l));

  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix x = random_matrix(Q, 2, 1, rng), y = random_matrix(Q, 2, 1, rng);
    CHECK(t * x.kron(y) == (a * x).kron(b * y));
  }
}

TEST_CASE("flip matrix implements the tensor swap") {
  Matrix fl = Matrix::flip(Q, 2, 3);
  std::mt19937 rng(29);
  Matrix x = random_matrix(Q, 2, 1, rng), y = random_matrix(Q, 3, 1, rng);
  CHECK(fl * x.kron(y) == y.kron(x));
}
