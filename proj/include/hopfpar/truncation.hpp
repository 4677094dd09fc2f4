#pragma once

#include "hopfpar/algebra.hpp"
#include "hopfpar/words.hpp"

namespace hopfpar {

/// Degree-d truncation of a tensor-algebra quotient: the span of all padded
/// relation instances of degree <= d is echelonized (graded-lex pivots) by a
/// worklist closure under left/right multiplication by generators. Words
/// outside the pivot set represent the image of T^{<=l} in the quotient.
///
/// Stabilization: the dimension table plateaus over a three-degree window
/// and the image of T^{<=l} is closed under multiplication by generators,
/// certified by the constructed multiplication table (unital, associative,
/// relations reduce to zero). A stabilized quotient is the exact infinite
/// quotient: the plateau propagates upward degree by degree inside the
/// window, and the certified table yields the inverse surjections.
class TruncatedQuotient {
 public:
  TruncatedQuotient(const FieldSpec& f, std::size_t letters, std::size_t degree,
                    const std::vector<SparseVec>& base_relations,
                    std::vector<std::string> letter_labels = {});

  const FieldSpec& field() const { return field_; }
  const WordSpace& words() const { return words_; }
  std::size_t truncation_degree() const { return words_.max_degree(); }
  const std::vector<std::size_t>& dims_by_degree() const { return dims_; }

  bool stabilized() const { return stabilized_; }
  /// Smallest l with basis = image of T^{<=l} (stabilized only).
  std::size_t stable_degree() const { return stable_degree_; }
  std::size_t dim() const { return basis_words_.size(); }
  const std::vector<std::uint32_t>& basis_words() const { return basis_words_; }
  std::string basis_word_string(std::size_t i) const {
    return words_.word_string(basis_words_[i], letter_labels_);
  }

  SparseVec normal_form(const SparseVec& v) const { return echelon_.reduce(v); }
  /// Coordinates of the class of v in the stabilized basis.
  Matrix coords(const SparseVec& v) const;
  Matrix coords_of_word(const std::vector<std::size_t>& word) const;

  /// Multiplication table on the stabilized basis, as structure constants.
  const AlgebraData& algebra() const;
  /// The map [-] : generators -> quotient (dim x letters).
  const Matrix& bracket() const;
  Matrix unit_coords() const;

  /// Construction certificates (dims table, closure, associativity,
  /// relation kill).
  const Report& certificate() const { return certificate_; }

 private:
  FieldSpec field_;
  WordSpace words_;
  std::vector<std::string> letter_labels_;
  RelationEchelon echelon_;
  std::vector<std::size_t> dims_;
  bool stabilized_ = false;
  bool relations_complete_ = true;  // every base relation fit inside degree d
  std::size_t stable_degree_ = 0;
  std::vector<std::uint32_t> basis_words_;
  std::vector<std::size_t> basis_pos_;  // word index -> basis position + 1, 0 = none
  AlgebraData table_;
  Matrix bracket_;
  Report certificate_;

  void run_closure(const std::vector<SparseVec>& base_relations);
  void detect_stabilization(const std::vector<SparseVec>& base_relations);
};

}  // namespace hopfpar
