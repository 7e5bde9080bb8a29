#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lefschetz/matrix.hpp"
#include "lefschetz/rng.hpp"
#include "lefschetz/tower.hpp"

namespace lefschetz {

/// A graded ideal presentation: num_vars, generator degrees, generators.
/// Invariants: degrees[i] == generators[i].degree >= 1; generator count need
/// not equal num_vars (complete intersections are the case where it does).
template <class V>
struct CiSpecT {
  int num_vars = 0;
  std::vector<int> degrees;
  std::vector<FormT<V>> generators;
  std::optional<std::uint64_t> seed;  // set when randomly generated

  void validate() const {
    if (num_vars < 1 || num_vars > kMaxVars) throw std::invalid_argument("CiSpec: bad num_vars");
    if (degrees.size() != generators.size()) {
      throw std::invalid_argument("CiSpec: degrees/generators size mismatch");
    }
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (generators[i].num_vars != num_vars) {
        throw std::invalid_argument("CiSpec: generator num_vars mismatch");
      }
      if (generators[i].degree != degrees[i]) {
        throw std::invalid_argument("CiSpec: generator degree does not match its slot");
      }
      if (degrees[i] < 1) throw std::invalid_argument("CiSpec: generator degrees must be >= 1");
    }
  }

  bool equigenerated() const {
    for (int d : degrees) {
      if (d != degrees.front()) return false;
    }
    return !degrees.empty();
  }
};

using CiSpec = CiSpecT<std::uint64_t>;
using QCiSpec = CiSpecT<Rational>;

/// Random spec: `count` dense forms of the given degrees. Generator i draws
/// from split_seed(split_seed(seed, 0), i); ell trials elsewhere use tag 1,
/// so generator and trial streams never overlap.
CiSpec random_ci_spec(const PrimeField& field, int num_vars, const std::vector<int>& degrees,
                      std::uint64_t seed);
QCiSpec random_ci_spec_q(int num_vars, const std::vector<int>& degrees, std::uint64_t seed);

/// n+1 random forms of degree d in n+1 variables (the would-be complete
/// intersection the theorems speak about).
CiSpec random_equigenerated_ci(const PrimeField& field, int proj_dim_n, int d, std::uint64_t seed);

/// Symmetric lift of every generator to Q (escalation path).
QCiSpec lift_spec_to_q(const PrimeField& field, const CiSpec& spec);

/// View of [I]_t as computed by the tower: column monomials are
/// enumerate_monomials(num_vars, t); rank = dim [I]_t.
struct MacaulayPieceView {
  int degree = 0;
  std::size_t num_cols = 0;
  std::size_t rank = 0;
  std::size_t quotient_dim = 0;
};

template <class F>
MacaulayPieceView piece_view(IdealTower<F>& tower, int t) {
  const auto& lvl = tower.level(t);
  return {t, lvl.num_cols, lvl.rank(), lvl.quotient_dim()};
}

/// The monomial basis of [R/I]_t (non-pivot = standard monomials, graded-lex order).
template <class F>
std::vector<Monomial> quotient_basis_monomials(IdealTower<F>& tower, int t) {
  const auto& lvl = tower.level(t);
  std::vector<Monomial> out;
  out.reserve(lvl.quotient_dim());
  const int nv = tower.num_vars();
  for (auto col : lvl.basis_cols) {
    Monomial m;
    m.exps.assign(lvl.exps_of(static_cast<std::size_t>(col), nv),
                  lvl.exps_of(static_cast<std::size_t>(col), nv) + nv);
    m.degree = t;
    out.push_back(std::move(m));
  }
  return out;
}

/// Matrix of multiplication by the linear form ell from [R/I]_{t-1} to
/// [R/I]_t, in the standard-monomial bases (rows = target, cols = source).
/// ell must be linear in the tower's variables.
template <class F>
Matrix<typename F::Value> multiplication_matrix(IdealTower<F>& tower, int t,
                                                const FormT<typename F::Value>& ell) {
  if (ell.degree != 1 || ell.num_vars != tower.num_vars()) {
    throw std::invalid_argument("multiplication_matrix: ell must be linear in the same variables");
  }
  if (t < 1) throw std::invalid_argument("multiplication_matrix: t must be >= 1");
  tower.advance_to(t);  // before taking references: advancing reallocates levels
  const auto& src = tower.level(t - 1);
  const auto& dst = tower.level(t);
  if (!dst.tails_present && dst.rank() > 0) {
    throw std::logic_error("multiplication_matrix: target level tails were dropped");
  }
  const auto& field = tower.field();
  const int nv = tower.num_vars();

  // ell as coefficient-per-variable.
  std::vector<typename F::Value> coef(static_cast<std::size_t>(nv), field.zero());
  for (const auto& [m, c] : ell.terms) {
    for (int j = 0; j < nv; ++j) {
      if (m.exps[static_cast<std::size_t>(j)] == 1) coef[static_cast<std::size_t>(j)] = c;
    }
  }

  Matrix<typename F::Value> M(dst.quotient_dim(), src.quotient_dim());
  for (auto& v : M.data) v = field.zero();
  for (std::size_t s = 0; s < src.basis_cols.size(); ++s) {
    const auto* exps = src.exps_of(static_cast<std::size_t>(src.basis_cols[s]), nv);
    for (int j = 0; j < nv; ++j) {
      if (field.is_zero(coef[static_cast<std::size_t>(j)])) continue;
      const std::size_t target_col = shifted_index(exps, nv, t - 1, j);
      const std::int32_t bp = dst.basis_pos[target_col];
      if (bp >= 0) {
        // x_j * m is a standard monomial.
        auto& cell = M.at(static_cast<std::size_t>(bp), s);
        cell = field.add(cell, coef[static_cast<std::size_t>(j)]);
      } else {
        // x_j * m is a pivot: its normal form is minus the reduced row's tail.
        const auto& row = dst.rows[static_cast<std::size_t>(dst.pivot_row[target_col])];
        for (std::size_t k = 0; k < row.cols.size(); ++k) {
          const std::int32_t tp = dst.basis_pos[static_cast<std::size_t>(row.cols[k])];
          auto& cell = M.at(static_cast<std::size_t>(tp), s);
          cell = field.submul(cell, coef[static_cast<std::size_t>(j)], row.vals[k]);
        }
      }
    }
  }
  return M;
}

/// The literal Macaulay matrix: one row per monomial shift m*f_i with
/// deg(m) = t - d_i, columns the degree-t monomials. Exponential in size at
/// high degree; used for cross-checks, small cases, and benchmarks.
template <class F>
Matrix<typename F::Value> raw_macaulay_matrix(const F& field, const CiSpecT<typename F::Value>& spec,
                                              int t) {
  spec.validate();
  const int nv = spec.num_vars;
  std::size_t rows = 0;
  for (int d : spec.degrees) {
    if (t >= d) rows += monomial_count(nv, t - d);
  }
  Matrix<typename F::Value> M(rows, monomial_count(nv, t));
  for (auto& v : M.data) v = field.zero();
  std::size_t r = 0;
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    const auto& f = spec.generators[i];
    if (t < f.degree) continue;
    for (const auto& shift : enumerate_monomials(nv, t - f.degree)) {
      for (const auto& [m, c] : f.terms) {
        M.at(r, monomial_index(monomial_mul(shift, m))) = c;
      }
      ++r;
    }
  }
  return M;
}

}  // namespace lefschetz
