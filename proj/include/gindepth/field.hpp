#ifndef GINDEPTH_FIELD_HPP
#define GINDEPTH_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "gindepth/errors.hpp"

namespace gindepth {

// Coefficient field: F_p for an odd prime p, or the rationals when prime == 0.
struct Field {
  std::uint32_t prime = 32003;

  static Field fp(std::uint32_t p);  // validates that p is an odd prime
  static Field rationals() { return Field{0}; }

  bool is_rational() const { return prime == 0; }
  bool operator==(const Field&) const = default;
  std::string describe() const;  // "p:32003" or "q"
};

// Immutable field element. The backing field travels with the value, so
// scalars are self-contained and safe to share across threads.
class Scalar {
 public:
  Scalar() = default;  // zero over the default field F_32003

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(long long v, const Field& f);
  static Scalar from_rational(const mpq_class& q, const Field& f);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // rejects zero divisor
  Scalar inverse() const;                   // rejects zero

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // F_p residue in canonical range [0, p); contract error over the rationals.
  std::uint64_t residue() const;
  const mpq_class& rational() const;  // contract error over F_p

  // Balanced residue for F_p ("-1" rather than "32002"), "a/b" for rationals.
  std::string to_string() const;

 private:
  void check_same_field(const Scalar& o) const;

  Field field_;
  std::uint64_t fp_ = 0;
  mpq_class rat_;
};

}  // namespace gindepth

#endif
