#pragma once

#include <cstdint>
#include <stdexcept>

namespace lefschetz {

/// Default modulus: the Mersenne prime 2^61 - 1 (fast reduction, and large
/// enough that random rank deficiencies mod p are vanishingly unlikely).
inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

bool is_prime_u64(std::uint64_t n);

/// Arithmetic context for F_p. Elements are residues in [0, p) stored as
/// uint64_t; all ops keep that invariant. p must be an odd prime < 2^62
/// (so a+b never wraps a 64-bit accumulator).
class PrimeField {
 public:
  using Value = std::uint64_t;

  explicit PrimeField(std::uint64_t p = kMersenne61) : p_(p), m61_(p == kMersenne61) {
    if (p < 3 || p >= (std::uint64_t{1} << 62)) {
      throw std::invalid_argument("PrimeField: modulus must be an odd prime in [3, 2^62)");
    }
    if (!is_prime_u64(p)) {
      throw std::invalid_argument("PrimeField: modulus is not prime");
    }
  }

  std::uint64_t modulus() const { return p_; }

  Value zero() const { return 0; }
  Value one() const { return 1; }
  bool is_zero(Value a) const { return a == 0; }

  Value add(Value a, Value b) const {
    Value s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  Value sub(Value a, Value b) const { return a >= b ? a - b : a + (p_ - b); }

  Value neg(Value a) const { return a == 0 ? 0 : p_ - a; }

  Value mul(Value a, Value b) const {
    unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
    if (m61_) {
      // 2^61 ≡ 1 (mod p): fold the high 61-bit limb onto the low one.
      Value lo = static_cast<Value>(z) & kMersenne61;
      Value hi = static_cast<Value>(z >> 61);
      Value s = lo + hi;
      return s >= p_ ? s - p_ : s;
    }
    return static_cast<Value>(z % p_);
  }

  /// a - f*b in one call (the elimination inner loop).
  Value submul(Value a, Value f, Value b) const { return sub(a, mul(f, b)); }

  Value pow(Value a, std::uint64_t e) const {
    Value r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /// Multiplicative inverse; throws on 0 (explicit error per the field contract).
  Value inv(Value a) const {
    if (a == 0) throw std::domain_error("PrimeField::inv: zero has no inverse");
    return pow(a, p_ - 2);
  }

  /// Canonical image of a (possibly negative) machine integer.
  Value from_int(long long v) const {
    long long m = static_cast<long long>(p_);
    long long r = v % m;
    if (r < 0) r += m;
    return static_cast<Value>(r);
  }

  /// Symmetric lift to the integer of least absolute value (used when an
  /// instance escalates from F_p to Q: -1 entered mod p comes back as -1).
  long long lift_symmetric(Value a) const {
    if (a > p_ / 2) return static_cast<long long>(a) - static_cast<long long>(p_);
    return static_cast<long long>(a);
  }

 private:
  std::uint64_t p_;
  bool m61_;
};

}  // namespace lefschetz
