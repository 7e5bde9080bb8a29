#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lefschetz/macaulay.hpp"
#include "lefschetz/tower.hpp"

namespace lefschetz {

/// h_0 .. h_e of an Artinian graded quotient (h_e > 0; values beyond e are 0).
struct HilbertFunction {
  std::vector<std::uint64_t> values;
  int socle_degree = 0;

  std::uint64_t at(int t) const {
    if (t < 0 || t > socle_degree) return 0;
    return values[static_cast<std::size_t>(t)];
  }
  std::uint64_t total_dim() const {
    std::uint64_t s = 0;
    for (auto v : values) s += v;
    return s;
  }
};

/// Socle degree of a complete intersection with these generator degrees.
int ci_socle_degree(const std::vector<int>& degrees);

/// Hilbert function of a complete intersection via the generating function
/// prod (1-z^{d_i}) / (1-z)^{n+1}  =  prod (1 + z + ... + z^{d_i - 1}).
/// Requires degrees.size() == num_vars (that is what makes the quotient
/// Artinian with this series). Exact in uint64 (checked).
HilbertFunction hilbert_by_product_formula(int num_vars, const std::vector<int>& degrees);

/// The honest route: h_t = C(t+n, n) - dim [I]_t, degree by degree.
class NotArtinianError : public std::runtime_error {
 public:
  NotArtinianError(int probed_through, std::string msg)
      : std::runtime_error(std::move(msg)), probed_through(probed_through) {}
  int probed_through;
};

struct HilbertScan {
  std::vector<std::uint64_t> values;  // h_0 .. h_through
  int through = -1;
  bool reached_zero = false;
  int socle_degree = -1;  // last t with h_t > 0 (valid when reached_zero)
};

/// Advance the tower until h_t = 0 or t = cap (inclusive), collecting dims.
template <class F>
HilbertScan scan_hilbert(IdealTower<F>& tower, int cap) {
  HilbertScan s;
  for (int t = 0; t <= cap; ++t) {
    const std::uint64_t h = tower.quotient_dim(t);
    s.values.push_back(h);
    s.through = t;
    if (h == 0) {
      s.reached_zero = true;
      s.socle_degree = t - 1;
      break;
    }
  }
  return s;
}

/// Default degree cap for the Artinian probe: the complete-intersection socle
/// bound + 1 when the generator count matches num_vars, else 2*max(d)*num_vars.
int default_artinian_cap(int num_vars, const std::vector<int>& degrees);

/// Matrix-rank Hilbert function. Throws NotArtinianError if h has not reached
/// zero by the cap (pass cap = -1 for the default).
template <class F>
HilbertFunction hilbert_by_linear_algebra(const F& field, const CiSpecT<typename F::Value>& spec,
                                          int cap = -1) {
  spec.validate();
  if (cap < 0) cap = default_artinian_cap(spec.num_vars, spec.degrees);
  IdealTower<F> tower(field, spec.num_vars, spec.generators);
  HilbertScan s = scan_hilbert(tower, cap);
  if (!s.reached_zero) {
    throw NotArtinianError(s.through, "quotient is not Artinian up to degree " + std::to_string(s.through));
  }
  HilbertFunction h;
  h.socle_degree = s.socle_degree;
  h.values.assign(s.values.begin(), s.values.end() - 1);  // drop the final zero
  return h;
}

/// Certificate that the generators cut out a complete intersection: the
/// matrix-rank Hilbert function exists (Artinian) and agrees with the product
/// formula through socle degree + 1. Generator count must equal num_vars.
struct CiCertification {
  bool certified = false;
  HilbertFunction by_matrix;   // filled when Artinian
  HilbertFunction by_formula;  // always filled
  std::string failure;         // empty when certified
};

template <class F>
CiCertification certify_complete_intersection(const F& field, const CiSpecT<typename F::Value>& spec) {
  spec.validate();
  if (static_cast<int>(spec.degrees.size()) != spec.num_vars) {
    throw std::invalid_argument("certify_complete_intersection: generator count != num_vars");
  }
  CiCertification cert;
  cert.by_formula = hilbert_by_product_formula(spec.num_vars, spec.degrees);
  try {
    cert.by_matrix = hilbert_by_linear_algebra(field, spec, cert.by_formula.socle_degree + 1);
  } catch (const NotArtinianError& e) {
    cert.failure = e.what();
    return cert;
  }
  if (cert.by_matrix.socle_degree != cert.by_formula.socle_degree ||
      cert.by_matrix.values != cert.by_formula.values) {
    cert.failure = "Hilbert function differs from the complete-intersection values";
    return cert;
  }
  cert.certified = true;
  return cert;
}

}  // namespace lefschetz
