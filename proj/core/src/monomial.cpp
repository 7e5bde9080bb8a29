#include "lefschetz/monomial.hpp"

#include <array>
#include <stdexcept>

namespace lefschetz {

namespace {

constexpr int kBinomRows = 160;  // a < 160
constexpr int kBinomCols = 14;   // b < 14

// Pascal's triangle, truncated to the first kBinomCols columns. Every entry
// in this range fits uint64 (max is binom(159,13) ~ 1.1e18).
struct BinomTable {
  std::array<std::array<std::uint64_t, kBinomCols>, kBinomRows> t{};
  BinomTable() {
    for (int a = 0; a < kBinomRows; ++a) {
      t[a][0] = 1;
      for (int b = 1; b < kBinomCols; ++b) {
        if (b > a) {
          t[a][b] = 0;
        } else {
          t[a][b] = t[a - 1][b - 1] + (b <= a - 1 ? t[a - 1][b] : 0);
        }
      }
    }
  }
};

const BinomTable& table() {
  static const BinomTable tb;
  return tb;
}

void check_dims(int num_vars, int degree) {
  if (num_vars < 1 || num_vars > kMaxVars) {
    throw std::out_of_range("num_vars must be in [1, " + std::to_string(kMaxVars) + "]");
  }
  if (degree < 0 || degree > kMaxDegree) {
    throw std::out_of_range("degree must be in [0, " + std::to_string(kMaxDegree) + "]");
  }
}

}  // namespace

std::uint64_t binom(int a, int b) {
  if (b < 0 || a < 0) return 0;
  if (b > a) return 0;
  if (a >= kBinomRows || b >= kBinomCols) {
    throw std::out_of_range("binom: outside the exact uint64 table");
  }
  return table().t[a][b];
}

std::uint64_t monomial_count(int num_vars, int degree) {
  check_dims(num_vars, degree);
  return binom(degree + num_vars - 1, num_vars - 1);
}

Monomial Monomial::make(std::vector<std::uint8_t> e) {
  Monomial m;
  m.degree = 0;
  for (auto x : e) m.degree += x;
  m.exps = std::move(e);
  return m;
}

int grlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) {
    throw std::invalid_argument("grlex_cmp: num_vars mismatch");
  }
  if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
  for (int i = 0; i < a.num_vars(); ++i) {
    if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
  }
  return 0;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) {
    throw std::invalid_argument("monomial_mul: num_vars mismatch");
  }
  Monomial r;
  r.exps.resize(a.exps.size());
  for (std::size_t i = 0; i < a.exps.size(); ++i) {
    int s = a.exps[i] + b.exps[i];
    if (s > kMaxDegree) throw std::out_of_range("monomial_mul: exponent overflow");
    r.exps[i] = static_cast<std::uint8_t>(s);
  }
  r.degree = a.degree + b.degree;
  return r;
}

std::vector<std::uint8_t> enumerate_exponents_flat(int num_vars, int degree, std::size_t& count_out) {
  check_dims(num_vars, degree);
  count_out = monomial_count(num_vars, degree);
  std::vector<std::uint8_t> flat;
  flat.reserve(count_out * static_cast<std::size_t>(num_vars));

  // Descending lex walk: start at x0^degree, repeatedly move one unit of
  // degree from the rightmost positive non-final slot to its right.
  std::vector<int> e(num_vars, 0);
  e[0] = degree;
  while (true) {
    for (int i = 0; i < num_vars; ++i) flat.push_back(static_cast<std::uint8_t>(e[i]));
    // Find the last index < num_vars-1 with e[i] > 0.
    int i = num_vars - 2;
    while (i >= 0 && e[i] == 0) --i;
    if (i < 0) break;  // all degree on the last variable: smallest monomial
    // Standard successor: decrement e[i], move everything after i plus one
    // unit onto slot i+1.
    int tail = e[num_vars - 1];
    e[num_vars - 1] = 0;
    e[i] -= 1;
    e[i + 1] = tail + 1;
    // (slots between i+1 and the end are already 0 except the last, handled)
  }
  return flat;
}

std::vector<Monomial> enumerate_monomials(int num_vars, int degree) {
  std::size_t count = 0;
  auto flat = enumerate_exponents_flat(num_vars, degree, count);
  std::vector<Monomial> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Monomial m;
    m.exps.assign(flat.begin() + static_cast<std::ptrdiff_t>(k * num_vars),
                  flat.begin() + static_cast<std::ptrdiff_t>((k + 1) * num_vars));
    m.degree = degree;
    out.push_back(std::move(m));
  }
  return out;
}

std::size_t monomial_index(const std::uint8_t* exps, int num_vars, int degree) {
  // Count monomials lex-greater than m: at the first position where they
  // exceed m, hockey-stick the tail counts.
  std::size_t idx = 0;
  int remaining = degree;
  for (int i = 0; i + 1 < num_vars; ++i) {
    int gap = remaining - exps[i];  // how far e_i is below its max here
    if (gap > 0) {
      int v = num_vars - 1 - i;  // variables to the right
      idx += binom(gap - 1 + v, v);
    }
    remaining -= exps[i];
  }
  return idx;
}

std::size_t monomial_index(const Monomial& m) {
  return monomial_index(m.exps.data(), m.num_vars(), m.degree);
}

std::size_t shifted_index(const std::uint8_t* exps, int num_vars, int degree, int var) {
  std::size_t idx = 0;
  int remaining = degree + 1;
  for (int i = 0; i + 1 < num_vars; ++i) {
    int ei = exps[i] + (i == var ? 1 : 0);
    int gap = remaining - ei;
    if (gap > 0) {
      int v = num_vars - 1 - i;
      idx += binom(gap - 1 + v, v);
    }
    remaining -= ei;
  }
  return idx;
}

std::string monomial_to_string(const Monomial& m) {
  std::string s;
  for (int i = 0; i < m.num_vars(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i);
    if (m.exps[i] > 1) s += "^" + std::to_string(static_cast<int>(m.exps[i]));
  }
  return s.empty() ? "1" : s;
}

}  // namespace lefschetz
