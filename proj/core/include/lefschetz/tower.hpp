#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lefschetz/form.hpp"
#include "lefschetz/fp.hpp"
#include "lefschetz/rational.hpp"

namespace lefschetz {

/// The graded pieces [I]_t of a homogeneous ideal, computed degree by degree.
///
/// Level t holds the canonical reduced row echelon form of [I]_t in the
/// degree-t monomial basis (columns in descending graded-lex order). Rows are
/// stored sparsely as pivot + tail, where tails live entirely over non-pivot
/// (standard-monomial) columns — that is what keeps high degrees cheap: near
/// the socle almost every column is a pivot and tails are tiny.
///
/// Level t+1 is generated by the variable shifts x_j * row for every reduced
/// row of level t, plus any generators of degree t+1 (the span is identical
/// to the full set of monomial shifts m*f_i, and RREF is canonical, so the
/// result does not depend on this assembly choice). Reduction of one
/// candidate row runs in a dense scratch row with a bitmask of its support;
/// every new pivot back-reduces the stored rows so the RREF invariant holds
/// at all times.
template <class F>
class IdealTower {
 public:
  using Value = typename F::Value;

  struct SparseRow {
    std::int32_t pivot_col = -1;
    std::vector<std::int32_t> cols;  // tail columns, ascending (all non-pivot)
    std::vector<Value> vals;         // matching coefficients
  };

  struct Level {
    int degree = 0;
    std::size_t num_cols = 0;
    std::vector<std::uint8_t> expo;        // num_cols * num_vars exponents
    std::vector<std::int32_t> pivot_row;   // col -> index into rows, or -1
    std::vector<std::int32_t> basis_pos;   // col -> quotient basis position, or -1
    std::vector<std::int32_t> basis_cols;  // basis position -> col
    std::vector<SparseRow> rows;
    bool tails_present = true;

    std::size_t rank() const { return rows.size(); }
    std::size_t quotient_dim() const { return basis_cols.size(); }
    const std::uint8_t* exps_of(std::size_t col, int num_vars) const {
      return expo.data() + col * static_cast<std::size_t>(num_vars);
    }
  };

  IdealTower(F field, int num_vars, std::vector<FormT<Value>> generators);

  const F& field() const { return field_; }
  int num_vars() const { return num_vars_; }
  const std::vector<FormT<Value>>& generators() const { return gens_; }

  /// Highest degree computed so far (-1 if none).
  int top_degree() const { return static_cast<int>(levels_.size()) - 1; }

  /// Compute levels up to and including t (idempotent).
  void advance_to(int t);

  const Level& level(int t) {
    advance_to(t);
    return levels_[static_cast<std::size_t>(t)];
  }

  /// dim [R/I]_t.
  std::size_t quotient_dim(int t) { return level(t).quotient_dim(); }

  /// Free the sparse rows of level t, keeping pivot/basis data. Levels with
  /// dropped tails can no longer seed advance_to or answer normal forms.
  void drop_tails(int t);
  /// Drop tails of every level strictly below t.
  void drop_tails_below(int t);

 private:
  void advance_one();

  F field_;
  int num_vars_;
  std::vector<FormT<Value>> gens_;
  std::vector<Level> levels_;
};

extern template class IdealTower<PrimeField>;
extern template class IdealTower<RationalField>;

}  // namespace lefschetz
