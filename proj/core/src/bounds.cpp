#include "lefschetz/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace lefschetz {

Interval make_interval(int lo, int hi_excl) {
  if (hi_excl < lo) hi_excl = lo;
  return {lo, hi_excl};
}

void ResolutionShape::validate() const {
  if (quot_twists.size() <= sub_twists.size()) {
    throw std::invalid_argument("ResolutionShape: rank must be positive");
  }
  const auto sorted_desc = [](const std::vector<int>& v) {
    return std::is_sorted(v.rbegin(), v.rend());
  };
  if (!sorted_desc(sub_twists) || !sorted_desc(quot_twists)) {
    throw std::invalid_argument("ResolutionShape: twists must be non-increasing");
  }
}

ResolutionShape dual_ci_shape(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("dual_ci_shape: need n >= 1, d >= 1");
  ResolutionShape s;
  s.sub_twists = {-d};
  s.quot_twists.assign(static_cast<std::size_t>(n) + 1, 0);
  return s;
}

Rational slope(const ResolutionShape& shape) {
  shape.validate();
  long long c1 = 0;
  for (int b : shape.quot_twists) c1 += b;
  for (int a : shape.sub_twists) c1 -= a;
  return make_rational(c1, shape.rank());
}

bool is_stable(const ResolutionShape& shape) {
  shape.validate();
  const Rational mu = slope(shape);
  return Rational(shape.quot_twists.front()) < mu;
}

SplittingBounds splitting_bounds(int n, int d) {
  if (n < 3) throw std::invalid_argument("splitting_bounds: n >= 3 required");
  if (d < 2) throw std::invalid_argument("splitting_bounds: d >= 2 required");
  SplittingBounds s;
  s.n = n;
  s.d = d;
  s.a = d / n;
  s.b = d % n;
  s.lower_b1 = -s.a - (n + 1) / 2;
  s.upper_bn = -s.a + (n - 1) / 2;
  return s;
}

std::vector<int> balanced_splitting(int n, int d) {
  if (n < 1 || d < 0) throw std::invalid_argument("balanced_splitting: need n >= 1, d >= 0");
  const int a = d / n;
  const int b = d % n;
  // n - b copies of -a, then b copies of -a-1: non-increasing, unit gap, sum -d.
  std::vector<int> twists(static_cast<std::size_t>(n), -a);
  for (int i = n - b; i < n; ++i) twists[static_cast<std::size_t>(i)] = -a - 1;
  return twists;
}

std::vector<RegistryEntry> ci_registry(int n, int d) {
  std::vector<RegistryEntry> reg;
  reg.push_back({"alzati-re", make_interval(d, d + 1),
                 "maximal rank in degree d for any equigenerated complete intersection"});
  if (n == 3) {
    reg.push_back({"bmmn-ci", make_interval(1, floor_div(3 * d + 1, 2)),
                   "four forms of degree d in four variables: every t < floor((3d+1)/2)"});
  }
  return reg;
}

std::vector<RegistryEntry> jacobian_registry(int ambient_dim, int d) {
  std::vector<RegistryEntry> reg;
  if (d > 2) {
    reg.push_back({"ilardi", make_interval(d - 1, d),
                   "degree d-1 for the Jacobian ideal of any smooth hypersurface"});
  }
  reg.push_back({"alzati-re", make_interval(d - 1, d),
                 "maximal rank in the generator degree d-1 (equigenerated complete intersection)"});
  if (ambient_dim == 3 && d > 2) {
    reg.push_back({"bmmn-surfaces", make_interval(1, floor_div(3 * d + 1, 2) - 1),
                   "smooth surfaces: all degrees <= floor((3d+1)/2) - 2"});
  }
  if (ambient_dim == 3 && d >= 3 && d <= 6) {
    const int socle = 4 * (d - 2);
    reg.push_back({"bmmn-surfaces-full", make_interval(1, socle + 2),
                   "smooth surfaces of degree 3..6: full WLP"});
  }
  return reg;
}

Interval jacobian_guaranteed_range(int ambient_dim, int d) {
  if (ambient_dim < 3 || d <= 2) return make_interval(1, 1);
  return make_interval(1, d - 1 + ceil_div(d - 1, ambient_dim));
}

bool maximal_variation(int ambient_dim, int d) { return ambient_dim >= 3 && d >= ambient_dim + 2; }

BoundReport wlp_ranges(int n, int d, std::optional<int> b1) {
  if (n < 3) throw std::invalid_argument("wlp_ranges: n >= 3 required");
  if (d < 2) throw std::invalid_argument("wlp_ranges: d >= 2 required");
  BoundReport r;
  r.n = n;
  r.d = d;
  const int main_hi = d + d / n - (n - 1) / 2;  // strict upper bound of the stated range
  r.range_main = make_interval(d, main_hi);
  r.main_proof_inclusive_end = main_hi;
  r.main_note =
      "the stated range is the strict inequality d-1 < t < d + floor(d/n) - floor((n-1)/2); "
      "its proof reaches t <= main_proof_inclusive_end";
  r.range_bound2 = make_interval(1, d + ceil_div(d, n) + 1);
  r.splitting = splitting_bounds(n, d);
  if (b1.has_value()) {
    r.prop36_b1 = b1;
    r.range_prop36 = prop36_range(*b1);
  }
  r.jacobian_range = jacobian_guaranteed_range(n, d);
  r.beauville_covered = r.jacobian_range.contains(d);
  r.maximal_variation = maximal_variation(n, d);
  r.registry = ci_registry(n, d);
  return r;
}

Interval prop36_range(int b1) { return make_interval(1, -b1); }

}  // namespace lefschetz
