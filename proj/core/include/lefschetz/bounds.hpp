#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lefschetz/numeric.hpp"
#include "lefschetz/rational.hpp"

namespace lefschetz {

/// Half-open integer interval [lo, hi_excl). Every degree range is normalized
/// to this shape (the source inequalities mix strict and non-strict forms, and
/// one representation keeps the off-by-ones in a single place). Empty ranges
/// keep their natural lower endpoint with hi_excl == lo.
struct Interval {
  int lo = 0;
  int hi_excl = 0;

  bool empty() const { return hi_excl <= lo; }
  bool contains(int t) const { return t >= lo && t < hi_excl; }
  int length() const { return empty() ? 0 : hi_excl - lo; }
  bool operator==(const Interval&) const = default;
};

/// [lo, hi_excl) with the empty case normalized to hi_excl == lo.
Interval make_interval(int lo, int hi_excl);

/// A bundle E on P^n presented by 0 -> sum O(a_i) -> sum O(b_j) -> E -> 0 with
/// a_1 >= ... >= a_k, b_1 >= ... >= b_{n+k}; the rank is n = #b - #a.
struct ResolutionShape {
  std::vector<int> sub_twists;   // the a_i, non-increasing (may be empty)
  std::vector<int> quot_twists;  // the b_j, non-increasing

  int rank() const { return static_cast<int>(quot_twists.size() - sub_twists.size()); }
  void validate() const;
};

/// Presentation of the dual of the syzygy bundle of n+1 forms of degree d:
/// 0 -> O(-d) -> O^{n+1} -> E* -> 0.
ResolutionShape dual_ci_shape(int n, int d);

/// mu(E) = c1/rank = (sum b_j - sum a_i) / n, exactly.
Rational slope(const ResolutionShape& shape);

/// Stability shape test: E is stable iff b_1 < mu(E) (strict, exact).
bool is_stable(const ResolutionShape& shape);

/// Restriction of the degree-d syzygy bundle to a general line: writing
/// d = a*n + b with 0 <= b < n, the twists b_1 >= ... >= b_n sum to -d, have
/// unit gaps, and satisfy -a - floor((n+1)/2) <= b_1 and b_n <= -a + floor((n-1)/2).
struct SplittingBounds {
  int n = 0;
  int d = 0;
  int a = 0;
  int b = 0;         // d = a*n + b, 0 <= b < n
  int lower_b1 = 0;  // -a - floor((n+1)/2)
  int upper_bn = 0;  // -a + floor((n-1)/2)
};

SplittingBounds splitting_bounds(int n, int d);  // pre: n >= 3, d >= 2

/// A concrete admissible splitting type: non-increasing, unit gaps, sum -d,
/// endpoints within the SplittingBounds window (feasibility witness).
std::vector<int> balanced_splitting(int n, int d);

/// One prior published threshold, stored as data so reports can compare.
struct RegistryEntry {
  std::string source;
  Interval range;
  std::string note;
};

/// Thresholds known before the bounds computed here, for n+1 forms of degree d
/// in n+1 variables: alzati-re (degree d itself) and, when n = 3, bmmn-ci
/// (every t < floor((3d+1)/2)).
std::vector<RegistryEntry> ci_registry(int n, int d);

/// Prior thresholds for Jacobian ideals of smooth degree-d hypersurfaces in
/// P^N: ilardi (degree d-1, d > 2, any N), alzati-re (degree d-1 via the
/// generator degree), and for surfaces (N = 3) the bmmn results.
std::vector<RegistryEntry> jacobian_registry(int ambient_dim, int d);

/// WLP degrees guaranteed for the Jacobian ideal of a smooth degree-d
/// hypersurface in P^N: t < d-1 + ceil((d-1)/N), valid for N >= 3 and d > 2
/// (empty otherwise).
Interval jacobian_guaranteed_range(int ambient_dim, int d);

/// Hyperplane sections of a smooth degree-d hypersurface in P^N vary
/// maximally in moduli when d >= N + 2 (stated for N >= 3).
bool maximal_variation(int ambient_dim, int d);

/// Every closed-form range for the complete intersection of n+1 forms of
/// degree d in P^n (n >= 3, d >= 2), plus the Jacobian-side ranges read at
/// ambient dimension n and the prior-results registry.
struct BoundReport {
  int n = 0;
  int d = 0;
  Interval range_main;               // d-1 < t < d + floor(d/n) - floor((n-1)/2)
  int main_proof_inclusive_end = 0;  // the derivation actually reaches t <= this
  std::string main_note;
  Interval range_bound2;  // 1 <= t <= d + ceil(d/n)
  SplittingBounds splitting;
  std::optional<int> prop36_b1;           // user-supplied generic first twist
  std::optional<Interval> range_prop36;   // 1 <= t < -b1, when b1 given
  Interval jacobian_range;                // degree-d hypersurface in P^n
  bool beauville_covered = false;         // jacobian_range contains t = d
  bool maximal_variation = false;         // d >= n + 2
  std::vector<RegistryEntry> registry;    // ci_registry(n, d)
};

BoundReport wlp_ranges(int n, int d, std::optional<int> b1 = std::nullopt);

/// For an Artinian ideal whose syzygy bundle restricts to a general line with
/// leading twist b1: WLP holds in every degree t < -b1.
Interval prop36_range(int b1);

}  // namespace lefschetz
