#include "gindepth/field.hpp"

namespace gindepth {

namespace {

bool is_odd_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return acc;
}

}  // namespace

Field Field::fp(std::uint32_t p) {
  if (!is_odd_prime(p))
    fail(ErrorKind::contract, "field characteristic must be an odd prime, got " + std::to_string(p));
  return Field{p};
}

std::string Field::describe() const {
  return is_rational() ? "q" : "p:" + std::to_string(prime);
}

Scalar Scalar::zero(const Field& f) {
  Scalar s;
  s.field_ = f;
  return s;
}

Scalar Scalar::one(const Field& f) { return from_int(1, f); }

Scalar Scalar::from_int(long long v, const Field& f) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    s.rat_ = mpq_class(static_cast<long>(v));
  } else {
    long long r = v % static_cast<long long>(f.prime);
    if (r < 0) r += f.prime;
    s.fp_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::from_rational(const mpq_class& q, const Field& f) {
  if (!f.is_rational())
    fail(ErrorKind::field_mismatch, "rational literal over a prime field");
  Scalar s;
  s.field_ = f;
  s.rat_ = q;
  s.rat_.canonicalize();
  return s;
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? rat_ == 0 : fp_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? rat_ == 1 : fp_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    fail(ErrorKind::field_mismatch,
         "scalars over different fields: " + field_.describe() + " vs " + o.field_.describe());
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (field_.is_rational())
    s.rat_ = -rat_;
  else if (fp_ != 0)
    s.fp_ = field_.prime - fp_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s(*this);
  if (field_.is_rational()) {
    s.rat_ = rat_ + o.rat_;
  } else {
    s.fp_ = fp_ + o.fp_;
    if (s.fp_ >= field_.prime) s.fp_ -= field_.prime;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s(*this);
  if (field_.is_rational())
    s.rat_ = rat_ * o.rat_;
  else
    s.fp_ = fp_ * o.fp_ % field_.prime;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorKind::contract, "inverse of zero");
  Scalar s(*this);
  if (field_.is_rational())
    s.rat_ = 1 / rat_;
  else
    s.fp_ = mod_pow(fp_, field_.prime - 2, field_.prime);
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  return field_.is_rational() ? rat_ == o.rat_ : fp_ == o.fp_;
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational())
    fail(ErrorKind::contract, "residue() over the rationals");
  return fp_;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational())
    fail(ErrorKind::contract, "rational() over a prime field");
  return rat_;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return rat_.get_str();
  std::uint64_t p = field_.prime;
  if (fp_ > p / 2) return "-" + std::to_string(p - fp_);
  return std::to_string(fp_);
}

}  // namespace gindepth
