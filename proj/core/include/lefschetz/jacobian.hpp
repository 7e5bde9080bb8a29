#pragma once

#include <string>
#include <vector>

#include "lefschetz/bounds.hpp"
#include "lefschetz/wlp.hpp"

namespace lefschetz {

/// X = V(f) in P^N with N+1 = f.num_vars. Degree d = f.degree >= 2.
template <class V>
struct HypersurfaceT {
  FormT<V> f;

  int ambient_dim() const { return f.num_vars - 1; }
  int degree() const { return f.degree; }
};

using Hypersurface = HypersurfaceT<std::uint64_t>;
using QHypersurface = HypersurfaceT<Rational>;

/// The Jacobian ideal: all N+1 partials, each kept in its degree-(d-1) slot
/// even when identically zero (so the complete-intersection shape the
/// smoothness test expects is preserved; a zero partial then fails it).
template <class F>
CiSpecT<typename F::Value> jacobian_ideal(const F& field, const FormT<typename F::Value>& f) {
  if (f.degree < 2) throw std::invalid_argument("jacobian_ideal: degree must be >= 2");
  if (f.num_vars < 2) throw std::invalid_argument("jacobian_ideal: need at least 2 variables");
  CiSpecT<typename F::Value> spec;
  spec.num_vars = f.num_vars;
  for (int j = 0; j < f.num_vars; ++j) {
    spec.generators.push_back(form_derivative(field, f, j));
    spec.degrees.push_back(f.degree - 1);
  }
  spec.validate();
  return spec;
}

/// Smoothness, algebraically: X is smooth iff R/J(X) is Artinian, i.e. the
/// Jacobian ideal is a complete intersection with socle degree (N+1)(d-2).
template <class F>
bool certify_smooth(const F& field, const HypersurfaceT<typename F::Value>& X) {
  return certify_complete_intersection(field, jacobian_ideal(field, X.f)).certified;
}

/// x0^d + ... + x_{n}^d, the standard smooth testbed.
template <class F>
HypersurfaceT<typename F::Value> fermat_hypersurface(const F& field, int num_vars, int d) {
  if (num_vars < 2 || d < 2) throw std::invalid_argument("fermat_hypersurface: need >= 2 vars, d >= 2");
  if (d > kMaxDegree) throw std::invalid_argument("fermat_hypersurface: degree exceeds kMaxDegree");
  std::vector<std::pair<Monomial, typename F::Value>> terms;
  for (int i = 0; i < num_vars; ++i) {
    std::vector<std::uint8_t> e(static_cast<std::size_t>(num_vars), 0);
    e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(d);
    terms.emplace_back(Monomial::make(std::move(e)), field.one());
  }
  return {make_form(field, num_vars, d, std::move(terms))};
}

struct JacobianReport {
  int ambient_dim = 0;  // N
  int degree = 0;       // d
  bool smooth_certified = false;
  ArtinianSummary quotient;        // Hilbert data of R/J(X)
  Interval wlp_guaranteed_range;   // t < d-1 + ceil((d-1)/N), N >= 3, d > 2
  bool degree_d_checked = false;   // rank test below was run (requires smoothness)
  DegreeVerdict degree_d;          // WLP of J(X) in degree d (the variation-of-sections spot)
  bool guaranteed_covers_degree_d = false;  // d inside wlp_guaranteed_range, i.e. d >= N+2
  bool beauville_guaranteed = false;        // published threshold: N == 4 and d >= 7
  bool maximal_variation = false;           // d >= N+2 (hyperplane sections vary maximally)
  std::vector<RegistryEntry> registry;
};

/// Certify smoothness, test WLP of J(X) in degree d, and evaluate every
/// closed-form consequence. The tower is scanned once: the full socle scan
/// certifies the complete intersection (= smoothness), keeping the rows the
/// degree-d rank test needs.
template <class F>
JacobianReport beauville_check(const F& field, const HypersurfaceT<typename F::Value>& X,
                               const WlpOptions& opts) {
  const int d = X.degree();
  const int N = X.ambient_dim();
  JacobianReport rep;
  rep.ambient_dim = N;
  rep.degree = d;
  rep.wlp_guaranteed_range = jacobian_guaranteed_range(N, d);
  rep.guaranteed_covers_degree_d = rep.wlp_guaranteed_range.contains(d);
  rep.beauville_guaranteed = N == 4 && d >= 7;
  rep.maximal_variation = maximal_variation(N, d);
  rep.registry = jacobian_registry(N, d);

  CiSpecT<typename F::Value> jac = jacobian_ideal(field, X.f);
  const HilbertFunction formula = hilbert_by_product_formula(jac.num_vars, jac.degrees);
  const int e = formula.socle_degree;  // (N+1)(d-2)
  QuotientRing<F> q(field, std::move(jac));
  ArtinianSummary& sum = rep.quotient;
  sum.ci_eligible = true;
  bool mismatch = false;
  for (int t = 0; t <= e + 1; ++t) {
    const std::uint64_t h = q.tower.quotient_dim(t);
    sum.probed_through = t;
    if (h != formula.at(t)) {
      mismatch = true;
      if (h > 0) sum.h.push_back(h);
      break;
    }
    if (t <= e) sum.h.push_back(h);
    sum.ci_match_through = t;
    const int done = t - 1;
    if (opts.drop_used_tails && done >= 0 && done != d) q.tower.drop_tails(done);
  }
  if (mismatch) return rep;  // singular: not an Artinian complete intersection

  sum.artinian = true;
  sum.socle_degree = e;
  sum.ci_certified = true;
  rep.smooth_certified = true;
  if (d <= e + 1) {
    rep.degree_d = wlp_in_degree(q, d, opts);
    rep.degree_d_checked = true;
  } else {
    // Both graded pieces vanish in degree d; the map is trivially maximal.
    rep.degree_d.degree = d;
    rep.degree_d.maximal = true;
    rep.degree_d.status = WlpStatus::certified_holds;
    rep.degree_d_checked = true;
  }
  return rep;
}

}  // namespace lefschetz
