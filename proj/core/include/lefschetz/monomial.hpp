#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lefschetz {

/// Practical size guards. They keep every binomial this module ever asks for
/// inside uint64 (and keep callers honest about desk-scale inputs).
inline constexpr int kMaxVars = 12;
inline constexpr int kMaxDegree = 120;

/// binom(a, b) for 0 <= a <= 159, 0 <= b <= 13, exact in uint64.
/// Throws std::out_of_range beyond the table.
std::uint64_t binom(int a, int b);

/// Number of monomials of total degree t in v variables: binom(t+v-1, v-1).
std::uint64_t monomial_count(int num_vars, int degree);

/// A monomial in num_vars variables; exponents plus cached total degree.
/// Invariant: degree == sum of exponents.
struct Monomial {
  std::vector<std::uint8_t> exps;
  int degree = 0;

  static Monomial make(std::vector<std::uint8_t> e);
  int num_vars() const { return static_cast<int>(exps.size()); }

  bool operator==(const Monomial& o) const { return exps == o.exps; }
};

/// Graded-lex comparison, x0 most significant: lower total degree first,
/// then lexicographically *smaller* exponent vector is the smaller monomial
/// (so x1^2 < x0*x1 < x0^2). Returns <0, 0, >0.
int grlex_cmp(const Monomial& a, const Monomial& b);

/// Product (exponentwise sum). Degrees add; num_vars must match.
Monomial monomial_mul(const Monomial& a, const Monomial& b);

/// All monomials of the given degree, largest first (x0^t, ..., xn^t).
/// Column j of every degree-t matrix in this library is element j of this list.
std::vector<Monomial> enumerate_monomials(int num_vars, int degree);

/// Same enumeration, flat exponent storage (count * num_vars bytes), for the
/// staircase tower's hot paths.
std::vector<std::uint8_t> enumerate_exponents_flat(int num_vars, int degree, std::size_t& count_out);

/// Index of a monomial within enumerate_monomials(num_vars, degree), i.e. the
/// number of strictly larger monomials of the same degree. O(num_vars) with
/// the binomial table.
std::size_t monomial_index(const std::uint8_t* exps, int num_vars, int degree);
std::size_t monomial_index(const Monomial& m);

/// Index at degree+1 of x_var * m, given m's exponents at `degree`.
std::size_t shifted_index(const std::uint8_t* exps, int num_vars, int degree, int var);

/// Human-readable rendering, e.g. "x0^2*x3". The constant monomial is "1".
std::string monomial_to_string(const Monomial& m);

}  // namespace lefschetz
