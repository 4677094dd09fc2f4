#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfpar/field.hpp"

namespace hopfpar {

/// Indexing of words of bounded degree over an n-letter alphabet, ordered by
/// degree then lexicographically (first letter most significant). Index order
/// therefore coincides with graded-lex order on words.
class WordSpace {
 public:
  WordSpace(std::size_t letters, std::size_t max_degree);

  std::size_t letters() const { return letters_; }
  std::size_t max_degree() const { return max_degree_; }
  std::size_t total() const { return offsets_.back(); }
  std::size_t words_of_degree(std::size_t deg) const {
    return offsets_[deg + 1] - offsets_[deg];
  }
  std::size_t degree_begin(std::size_t deg) const { return offsets_[deg]; }

  std::size_t degree_of(std::uint32_t index) const;
  std::uint32_t index_of(const std::vector<std::size_t>& word) const;
  std::vector<std::size_t> word_at(std::uint32_t index) const;

  /// Index of g . w (degree grows by one; must stay within max_degree).
  std::uint32_t prepend(std::size_t letter, std::uint32_t index) const;
  /// Index of w . g.
  std::uint32_t append(std::uint32_t index, std::size_t letter) const;

  std::string word_string(std::uint32_t index,
                          const std::vector<std::string>& letter_labels) const;

 private:
  std::size_t letters_, max_degree_;
  std::vector<std::size_t> offsets_;  // offsets_[deg], size max_degree + 2
};

/// Sparse vector over a word space: (index, coefficient) pairs sorted by
/// strictly decreasing index, so the leading (graded-lex largest) term comes
/// first.
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

/// Accumulator-to-SparseVec conversion; drops zeros.
SparseVec to_sparse(const std::map<std::uint32_t, Scalar, std::greater<>>& acc);

/// Row echelon of a relation subspace of a word space, with graded-lex
/// pivots. Rows are monic and immutable once inserted; normal forms reduce
/// against pivots top-down.
class RelationEchelon {
 public:
  explicit RelationEchelon(const FieldSpec& f) : field_(f) {}

  /// Reduces v modulo the current rows; the result has no pivot indices in
  /// its support.
  SparseVec reduce(const SparseVec& v) const;

  /// Inserts the reduction of v as a new monic row; returns the new pivot or
  /// nothing when v reduces to zero.
  std::optional<std::uint32_t> insert(const SparseVec& v);

  bool is_pivot(std::uint32_t index) const { return rows_.count(index) > 0; }
  std::size_t row_count() const { return rows_.size(); }
  const std::map<std::uint32_t, SparseVec, std::greater<>>& rows() const {
    return rows_;
  }

 private:
  FieldSpec field_;
  std::map<std::uint32_t, SparseVec, std::greater<>> rows_;
};

}  // namespace hopfpar
