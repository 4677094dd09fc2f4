#include "hopfpar/truncation.hpp"

#include <deque>

namespace hopfpar {

TruncatedQuotient::TruncatedQuotient(const FieldSpec& f, std::size_t letters,
                                     std::size_t degree,
                                     const std::vector<SparseVec>& base_relations,
                                     std::vector<std::string> letter_labels)
    : field_(f), words_(letters, degree), letter_labels_(std::move(letter_labels)),
      echelon_(f) {
  if (degree < 1) throw std::invalid_argument("truncation degree must be >= 1");
  certificate_.suite = "truncation";
  run_closure(base_relations);

  dims_.assign(degree + 1, 0);
  std::vector<std::size_t> pivots_by_degree(degree + 1, 0);
  for (const auto& [pivot, row] : echelon_.rows())
    ++pivots_by_degree[words_.degree_of(pivot)];
  std::size_t words_cum = 0, pivots_cum = 0;
  for (std::size_t l = 0; l <= degree; ++l) {
    words_cum += words_.words_of_degree(l);
    pivots_cum += pivots_by_degree[l];
    dims_[l] = words_cum - pivots_cum;
  }
  for (std::size_t l = 0; l <= degree; ++l)
    certificate_.add("dim-T<=" + std::to_string(l), true, "",
                     std::to_string(dims_[l]));

  detect_stabilization(base_relations);
}

void TruncatedQuotient::run_closure(const std::vector<SparseVec>& base_relations) {
  const std::size_t d = words_.max_degree();
  std::deque<std::uint32_t> work;
  for (const auto& rel : base_relations) {
    if (rel.empty()) continue;
    if (rel.front().first >= words_.total()) {
      relations_complete_ = false;  // relation does not fit in this window
      continue;
    }
    if (auto pivot = echelon_.insert(rel)) work.push_back(*pivot);
  }
  while (!work.empty()) {
    std::uint32_t pivot = work.front();
    work.pop_front();
    if (words_.degree_of(pivot) >= d) continue;  // products would overflow
    const SparseVec row = echelon_.rows().at(pivot);
    for (std::size_t g = 0; g < words_.letters(); ++g) {
      SparseVec left, right;
      left.reserve(row.size());
      right.reserve(row.size());
      for (const auto& [idx, c] : row) {
        left.emplace_back(words_.prepend(g, idx), c);
        right.emplace_back(words_.append(idx, g), c);
      }
      // prepend preserves the in-degree rank order, append as well
      if (auto p = echelon_.insert(left)) work.push_back(*p);
      if (auto p = echelon_.insert(right)) work.push_back(*p);
    }
  }
}

void TruncatedQuotient::detect_stabilization(
    const std::vector<SparseVec>& base_relations) {
  const std::size_t d = words_.max_degree();
  certificate_.add("relations-within-degree", true, "",
                   relations_complete_ ? "true" : "false");
  std::size_t l = 0;
  bool found = false;
  for (; l + 2 <= d; ++l)
    if (dims_[l] == dims_[l + 1] && dims_[l] == dims_[l + 2]) {
      found = true;
      break;
    }
  // absence of a plateau is an outcome, not a failure
  if (!found || !relations_complete_) {
    certificate_.add("plateau", true, "", "none");
    return;
  }
  certificate_.add("plateau", true, "", "l=" + std::to_string(l));

  basis_pos_.assign(words_.total(), 0);
  for (std::uint32_t idx = 0;
       idx < static_cast<std::uint32_t>(words_.degree_begin(l) +
                                        words_.words_of_degree(l));
       ++idx)
    if (!echelon_.is_pivot(idx)) {
      basis_words_.push_back(idx);
      basis_pos_[idx] = basis_words_.size();
    }
  stable_degree_ = l;
  const std::size_t m = basis_words_.size();

  // closure of the basis under one-letter products on both sides; a plateau
  // makes this automatic, so a failure here is an internal inconsistency
  auto in_basis_span = [&](const SparseVec& v) {
    for (const auto& [idx, c] : v)
      if (basis_pos_[idx] == 0) return false;
    return true;
  };
  bool closure_ok = true;
  std::vector<std::vector<Matrix>> right_mul(words_.letters());
  for (std::size_t g = 0; g < words_.letters(); ++g)
    right_mul[g].assign(m, Matrix(field_, m, 1));
  for (std::size_t i = 0; i < m && closure_ok; ++i) {
    for (std::size_t g = 0; g < words_.letters(); ++g) {
      SparseVec left = normal_form({{words_.prepend(g, basis_words_[i]),
                                     Scalar::one(field_)}});
      SparseVec right = normal_form({{words_.append(basis_words_[i], g),
                                      Scalar::one(field_)}});
      if (!in_basis_span(left) || !in_basis_span(right)) {
        closure_ok = false;
        break;
      }
      Matrix col(field_, m, 1);
      for (const auto& [idx, c] : right) col.at(basis_pos_[idx] - 1, 0) = c;
      right_mul[g][i] = col;
    }
  }
  certificate_.add("generator-closure", closure_ok);
  if (!closure_ok)
    throw std::logic_error(
        "truncation: dimension plateau without generator closure");
  stabilized_ = true;

  // multiplication table by appending the letters of the second factor
  table_.field = field_;
  table_.dim = m;
  table_.mult = Matrix(field_, m, m * m);
  for (std::size_t i = 0; i < m; ++i)
    table_.labels.push_back(basis_word_string(i));
  for (std::size_t j = 0; j < m; ++j) {
    const auto word = words_.word_at(basis_words_[j]);
    for (std::size_t i = 0; i < m; ++i) {
      Matrix x(field_, m, 1);
      x.at(i, 0) = Scalar::one(field_);
      for (auto g : word) {
        Matrix next(field_, m, 1);
        for (std::size_t k = 0; k < m; ++k) {
          const Scalar& c = x.at(k, 0);
          if (c.is_zero()) continue;
          next = next + right_mul[g][k].scaled(c);
        }
        x = next;
      }
      for (std::size_t r = 0; r < m; ++r) table_.mult.at(r, i * m + j) = x.at(r, 0);
    }
  }
  table_.unit = coords(normal_form({{words_.index_of({}), Scalar::one(field_)}}));

  Report alg = verify_algebra(table_);
  certificate_.merge(alg, "table");
  if (!alg.passed())
    throw std::logic_error("truncation: stabilized table is not an algebra");

  bool relations_die = true;
  for (const auto& rel : base_relations)
    if (!normal_form(rel).empty()) relations_die = false;
  certificate_.add("relations-reduce-to-zero", relations_die);
  if (!relations_die)
    throw std::logic_error("truncation: a base relation failed to die");

  bracket_ = Matrix(field_, m, words_.letters());
  for (std::size_t g = 0; g < words_.letters(); ++g) {
    Matrix col = coords_of_word({g});
    for (std::size_t r = 0; r < m; ++r) bracket_.at(r, g) = col.at(r, 0);
  }
}

Matrix TruncatedQuotient::coords(const SparseVec& v) const {
  if (!stabilized_)
    throw std::logic_error("coords() requires a stabilized quotient");
  SparseVec r = normal_form(v);
  Matrix out(field_, basis_words_.size(), 1);
  for (const auto& [idx, c] : r) {
    if (basis_pos_[idx] == 0)
      throw std::logic_error("normal form escapes the stabilized basis");
    out.at(basis_pos_[idx] - 1, 0) = c;
  }
  return out;
}

Matrix TruncatedQuotient::coords_of_word(const std::vector<std::size_t>& word) const {
  return coords({{words_.index_of(word), Scalar::one(field_)}});
}

const AlgebraData& TruncatedQuotient::algebra() const {
  if (!stabilized_)
    throw std::logic_error("algebra() requires a stabilized quotient");
  return table_;
}

const Matrix& TruncatedQuotient::bracket() const {
  if (!stabilized_)
    throw std::logic_error("bracket() requires a stabilized quotient");
  return bracket_;
}

Matrix TruncatedQuotient::unit_coords() const { return algebra().unit; }

}  // namespace hopfpar
