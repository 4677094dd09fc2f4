#include "hopfpar/words.hpp"

#include <sstream>

namespace hopfpar {

WordSpace::WordSpace(std::size_t letters, std::size_t max_degree)
    : letters_(letters), max_degree_(max_degree) {
  if (letters == 0) throw std::invalid_argument("word space needs letters");
  offsets_.assign(max_degree + 2, 0);
  std::size_t count = 1;
  for (std::size_t deg = 0; deg <= max_degree; ++deg) {
    offsets_[deg + 1] = offsets_[deg] + count;
    if (count > (1u << 30) / letters)
      throw std::invalid_argument("word space too large");
    count *= letters;
  }
}

std::size_t WordSpace::degree_of(std::uint32_t index) const {
  for (std::size_t deg = 0; deg <= max_degree_; ++deg)
    if (index < offsets_[deg + 1]) return deg;
  throw std::out_of_range("word index out of range");
}

std::uint32_t WordSpace::index_of(const std::vector<std::size_t>& word) const {
  if (word.size() > max_degree_)
    throw std::out_of_range("word exceeds max degree");
  std::size_t rank = 0;
  for (auto l : word) rank = rank * letters_ + l;
  return static_cast<std::uint32_t>(offsets_[word.size()] + rank);
}

std::vector<std::size_t> WordSpace::word_at(std::uint32_t index) const {
  std::size_t deg = degree_of(index);
  std::size_t rank = index - offsets_[deg];
  std::vector<std::size_t> word(deg);
  for (std::size_t k = deg; k-- > 0;) {
    word[k] = rank % letters_;
    rank /= letters_;
  }
  return word;
}

std::uint32_t WordSpace::prepend(std::size_t letter, std::uint32_t index) const {
  std::size_t deg = degree_of(index);
  if (deg + 1 > max_degree_) throw std::out_of_range("prepend exceeds degree");
  std::size_t rank = index - offsets_[deg];
  std::size_t stride = 1;
  for (std::size_t k = 0; k < deg; ++k) stride *= letters_;
  return static_cast<std::uint32_t>(offsets_[deg + 1] + letter * stride + rank);
}

std::uint32_t WordSpace::append(std::uint32_t index, std::size_t letter) const {
  std::size_t deg = degree_of(index);
  if (deg + 1 > max_degree_) throw std::out_of_range("append exceeds degree");
  std::size_t rank = index - offsets_[deg];
  return static_cast<std::uint32_t>(offsets_[deg + 1] + rank * letters_ + letter);
}

std::string WordSpace::word_string(
    std::uint32_t index, const std::vector<std::string>& letter_labels) const {
  auto word = word_at(index);
  if (word.empty()) return "1";
  std::ostringstream os;
  for (auto l : word)
    os << "[" << (l < letter_labels.size() ? letter_labels[l]
                                           : "b" + std::to_string(l))
       << "]";
  return os.str();
}

SparseVec to_sparse(const std::map<std::uint32_t, Scalar, std::greater<>>& acc) {
  SparseVec v;
  v.reserve(acc.size());
  for (const auto& [idx, c] : acc)
    if (!c.is_zero()) v.emplace_back(idx, c);
  return v;
}

SparseVec RelationEchelon::reduce(const SparseVec& v) const {
  std::map<std::uint32_t, Scalar, std::greater<>> acc;
  for (const auto& [idx, c] : v) {
    auto [it, fresh] = acc.try_emplace(idx, c);
    if (!fresh) it->second += c;
  }
  SparseVec out;
  while (!acc.empty()) {
    auto top = acc.begin();
    std::uint32_t idx = top->first;
    Scalar c = top->second;
    acc.erase(top);
    if (c.is_zero()) continue;
    auto row = rows_.find(idx);
    if (row == rows_.end()) {
      out.emplace_back(idx, c);
      continue;
    }
    // subtract c * row; the pivot entry cancels by monicity
    const SparseVec& r = row->second;
    for (std::size_t k = 1; k < r.size(); ++k) {
      auto [it, fresh] = acc.try_emplace(r[k].first, Scalar::zero(field_));
      it->second -= c * r[k].second;
    }
  }
  return out;
}

std::optional<std::uint32_t> RelationEchelon::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return std::nullopt;
  const Scalar inv = r.front().second.inverse();
  for (auto& [idx, c] : r) c *= inv;
  std::uint32_t pivot = r.front().first;
  rows_.emplace(pivot, std::move(r));
  return pivot;
}

}  // namespace hopfpar
