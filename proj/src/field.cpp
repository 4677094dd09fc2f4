#include "hopfpar/field.hpp"

#include <utility>

namespace hopfpar {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // extended Euclid; a in [1, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::domain_error("element not invertible mod p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

FieldSpec::FieldSpec(std::uint64_t ch) : characteristic(ch) {
  if (ch != 0 && !is_prime(ch))
    throw std::invalid_argument("field characteristic must be 0 or prime, got " +
                                std::to_string(ch));
}

std::string FieldSpec::describe() const {
  return is_rational() ? "Q" : "F_" + std::to_string(characteristic);
}

Scalar::Scalar(const FieldSpec& f, long value) : field_(f) {
  if (f.is_rational()) {
    q_ = value;
  } else {
    long p = static_cast<long>(f.characteristic);
    long r = value % p;
    if (r < 0) r += p;
    res_ = static_cast<std::uint64_t>(r);
  }
}

Scalar::Scalar(const FieldSpec& f, const mpq_class& value) : field_(f) {
  if (f.is_rational()) {
    q_ = value;
    q_->canonicalize();
  } else {
    // residue of num * den^{-1}
    mpz_class p(static_cast<unsigned long>(f.characteristic));
    mpz_class num = value.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = value.get_den() % p;
    if (den == 0) throw std::domain_error("denominator vanishes mod p");
    res_ = (num.get_ui() * mod_inverse(den.get_ui(), f.characteristic)) %
           f.characteristic;
  }
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
  mpq_class v(text);
  v.canonicalize();
  return Scalar(f, v);
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? qval() == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? qval() == 1 : res_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw std::invalid_argument("scalar field mismatch: " + field_.describe() +
                                " vs " + o.field_.describe());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar r;
  r.field_ = field_;
  if (field_.is_rational())
    r.q_ = qval() + o.qval();
  else
    r.res_ = (res_ + o.res_) % field_.characteristic;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  Scalar r;
  r.field_ = field_;
  if (field_.is_rational())
    r.q_ = qval() - o.qval();
  else
    r.res_ = (res_ + field_.characteristic - o.res_) % field_.characteristic;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar r;
  r.field_ = field_;
  if (field_.is_rational())
    r.q_ = qval() * o.qval();
  else
    r.res_ = (res_ * o.res_) % field_.characteristic;
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r;
  r.field_ = field_;
  if (field_.is_rational())
    r.q_ = -qval();
  else
    r.res_ = res_ == 0 ? 0 : field_.characteristic - res_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  Scalar r;
  r.field_ = field_;
  if (field_.is_rational())
    r.q_ = 1 / qval();
  else
    r.res_ = mod_inverse(res_, field_.characteristic);
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  return field_.is_rational() ? qval() == o.qval() : res_ == o.res_;
}

std::string Scalar::str() const {
  if (field_.is_rational()) return qval().get_str();
  return std::to_string(res_);
}

const mpq_class& Scalar::qval() const {
  static const mpq_class zero;
  return q_ ? *q_ : zero;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational())
    throw std::logic_error("rational() called on F_p scalar");
  return qval();
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational())
    throw std::logic_error("residue() called on rational scalar");
  return res_;
}

}  // namespace hopfpar
