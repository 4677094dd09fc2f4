#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hopfpar {

/// Exact base field: the rationals (characteristic 0) or a prime field F_p.
struct FieldSpec {
  std::uint64_t characteristic = 0;

  FieldSpec() = default;
  explicit FieldSpec(std::uint64_t ch);

  bool is_rational() const { return characteristic == 0; }
  bool operator==(const FieldSpec&) const = default;

  std::string describe() const;
};

/// Field element in exact arithmetic. Rationals are kept in lowest terms with
/// positive denominator (mpq canonical form); residues live in [0, p).
class Scalar {
 public:
  Scalar() = default;  // zero over Q

  Scalar(const FieldSpec& f, long value);
  Scalar(const FieldSpec& f, const mpq_class& value);

  static Scalar zero(const FieldSpec& f) { return Scalar(f, 0); }
  static Scalar one(const FieldSpec& f) { return Scalar(f, 1); }

  /// Parses the canonical string form: "num", "num/den" or a residue digit
  /// string, according to the field.
  static Scalar parse(const FieldSpec& f, const std::string& text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical exact string: lowest-terms "a/b" (den omitted when 1) over Q,
  /// the residue over F_p. Stable across runs; used by reports and the
  /// interchange format.
  std::string str() const;

  /// Rational value (char 0 only).
  const mpq_class& rational() const;
  /// Residue in [0, p) (char p only).
  std::uint64_t residue() const;

 private:
  FieldSpec field_;
  // lazily engaged so that F_p scalars never touch the heap; a disengaged
  // payload reads as the rational zero
  std::optional<mpq_class> q_;
  std::uint64_t res_ = 0;  // char p payload

  const mpq_class& qval() const;
  void check_same_field(const Scalar& o) const;
};

}  // namespace hopfpar
