#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace lefschetz {

/// Dense row-major matrix over a field value type.
template <class V>
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<V> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  V* row(std::size_t i) { return data.data() + i * cols; }
  const V* row(std::size_t i) const { return data.data() + i * cols; }

  V& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const V& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// In-place reduced row echelon form. Deterministic: columns are processed
/// left to right and the pivot is the first row with a nonzero entry (the
/// result is the canonical RREF of the row space no matter the row order).
/// Returns the pivot column list; rank = its size.
template <class F>
std::vector<std::size_t> rref_in_place(const F& field, Matrix<typename F::Value>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t sel = r;
    while (sel < m.rows && field.is_zero(m.at(sel, c))) ++sel;
    if (sel == m.rows) continue;
    if (sel != r) {
      for (std::size_t j = c; j < m.cols; ++j) std::swap(m.at(r, j), m.at(sel, j));
    }
    const auto piv_inv = field.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = field.mul(m.at(r, j), piv_inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || field.is_zero(m.at(i, c))) continue;
      const auto f = m.at(i, c);
      for (std::size_t j = c; j < m.cols; ++j) {
        m.at(i, j) = field.submul(m.at(i, j), f, m.at(r, j));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Rank via forward elimination only (no back-substitution); destroys m.
template <class F>
std::size_t rank_in_place(const F& field, Matrix<typename F::Value>& m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t sel = r;
    while (sel < m.rows && field.is_zero(m.at(sel, c))) ++sel;
    if (sel == m.rows) continue;
    if (sel != r) {
      for (std::size_t j = c; j < m.cols; ++j) std::swap(m.at(r, j), m.at(sel, j));
    }
    const auto piv_inv = field.inv(m.at(r, c));
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      if (field.is_zero(m.at(i, c))) continue;
      const auto f = field.mul(m.at(i, c), piv_inv);
      m.at(i, c) = field.zero();
      for (std::size_t j = c + 1; j < m.cols; ++j) {
        m.at(i, j) = field.submul(m.at(i, j), f, m.at(r, j));
      }
    }
    ++r;
  }
  return r;
}

template <class F>
std::size_t rank(const F& field, Matrix<typename F::Value> m) {
  return rank_in_place(field, m);
}

}  // namespace lefschetz
