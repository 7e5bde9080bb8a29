#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace lefschetz {

/// Exact arbitrary-precision rational, always canonical: gcd(num, den) = 1,
/// den > 0. Backed by GMP's mpq_class, whose arithmetic preserves canonical
/// form; construction from a raw num/den pair canonicalizes explicitly.
using Rational = mpq_class;

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Arithmetic context over Q, mirroring PrimeField's interface so the graded
/// linear algebra can be instantiated over either field.
class RationalField {
 public:
  using Value = Rational;

  Value zero() const { return Rational(0); }
  Value one() const { return Rational(1); }
  bool is_zero(const Value& a) const { return sgn(a) == 0; }

  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value neg(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value submul(const Value& a, const Value& f, const Value& b) const { return a - f * b; }

  Value inv(const Value& a) const {
    if (sgn(a) == 0) throw std::domain_error("RationalField::inv: zero has no inverse");
    return 1 / a;
  }

  Value from_int(long long v) const { return Rational(static_cast<long>(v)); }
};

}  // namespace lefschetz
