// Independent reference implementations used to cross-check the library.
// Everything here recomputes from first principles: own monomial enumeration,
// own dense rational Gaussian elimination, own Macaulay row construction.
#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "lefschetz/macaulay.hpp"

namespace oracle {

using Q = mpq_class;
using ExpVec = std::vector<int>;

// All exponent vectors of the given total degree, in the map's own order.
inline void collect_exponents(int num_vars, int degree, int var, ExpVec& cur,
                              std::vector<ExpVec>& out) {
  if (var == num_vars - 1) {
    cur[var] = degree;
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= degree; ++e) {
    cur[var] = e;
    collect_exponents(num_vars, degree - e, var + 1, cur, out);
  }
}

inline std::vector<ExpVec> degree_monomials(int num_vars, int degree) {
  std::vector<ExpVec> out;
  ExpVec cur(num_vars, 0);
  collect_exponents(num_vars, degree, 0, cur, out);
  return out;
}

inline std::map<ExpVec, std::size_t> column_index(const std::vector<ExpVec>& monos) {
  std::map<ExpVec, std::size_t> idx;
  for (std::size_t i = 0; i < monos.size(); ++i) idx[monos[i]] = i;
  return idx;
}

// Plain fraction Gaussian elimination; O(r^2 c), fine at test sizes.
inline std::size_t rank_q(std::vector<std::vector<Q>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t sel = rank;
    while (sel < rows.size() && sgn(rows[sel][c]) == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || sgn(rows[i][c]) == 0) continue;
      const Q f = rows[i][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Rows spanning [I]_t: every generator times every monomial of complementary degree.
inline std::vector<std::vector<Q>> macaulay_rows(const lefschetz::QCiSpec& spec, int t) {
  const auto monos = degree_monomials(spec.num_vars, t);
  const auto idx = column_index(monos);
  std::vector<std::vector<Q>> rows;
  for (std::size_t g = 0; g < spec.generators.size(); ++g) {
    const int shift_deg = t - spec.degrees[g];
    if (shift_deg < 0) continue;
    for (const ExpVec& shift : degree_monomials(spec.num_vars, shift_deg)) {
      std::vector<Q> row(monos.size(), Q(0));
      for (const auto& [mono, coeff] : spec.generators[g].terms) {
        ExpVec key(spec.num_vars);
        for (int v = 0; v < spec.num_vars; ++v) key[v] = shift[v] + mono.exps[v];
        row[idx.at(key)] += coeff;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

inline std::size_t ideal_rank(const lefschetz::QCiSpec& spec, int t) {
  return rank_q(macaulay_rows(spec, t));
}

inline long quotient_dim(const lefschetz::QCiSpec& spec, int t) {
  const auto monos = degree_monomials(spec.num_vars, t);
  return static_cast<long>(monos.size()) - static_cast<long>(ideal_rank(spec, t));
}

// rank of x(ell): [R/I]_{t-1} -> [R/I]_t, computed without any quotient basis:
// rank([ell * R_{t-1} rows; I_t rows]) - rank(I_t rows).
inline std::size_t mul_rank(const lefschetz::QCiSpec& spec, const lefschetz::QForm& ell, int t) {
  if (ell.degree != 1) throw std::invalid_argument("oracle::mul_rank: ell must be linear");
  const auto monos = degree_monomials(spec.num_vars, t);
  const auto idx = column_index(monos);
  auto rows = macaulay_rows(spec, t);
  const std::size_t ideal = rank_q(rows);
  for (const ExpVec& src : degree_monomials(spec.num_vars, t - 1)) {
    std::vector<Q> row(monos.size(), Q(0));
    for (const auto& [mono, coeff] : ell.terms) {
      ExpVec key(spec.num_vars);
      for (int v = 0; v < spec.num_vars; ++v) key[v] = src[v] + mono.exps[v];
      row[idx.at(key)] += coeff;
    }
    rows.push_back(std::move(row));
  }
  return rank_q(std::move(rows)) - ideal;
}

}  // namespace oracle
