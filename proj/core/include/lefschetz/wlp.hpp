#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "lefschetz/hilbert.hpp"
#include "lefschetz/macaulay.hpp"
#include "lefschetz/numeric.hpp"

namespace lefschetz {

/// A graded quotient R/I bundled with its incremental elimination state.
template <class F>
struct QuotientRing {
  F field;
  CiSpecT<typename F::Value> spec;
  IdealTower<F> tower;

  QuotientRing(const F& f, CiSpecT<typename F::Value> s)
      : field(f), spec(std::move(s)), tower(field, spec.num_vars, spec.generators) {
    spec.validate();
  }
};

using FpQuotient = QuotientRing<PrimeField>;
using QQuotient = QuotientRing<RationalField>;

/// What a degree check can conclude.
///  - certified_holds: some tested ell reached maximal rank. Rank is a lower
///    bound that only grows under lifting, so one witness settles the degree
///    in characteristic zero as well (given matching dimensions).
///  - suspected_failure: every tested ell fell short over F_p and no exact
///    confirmation was performed (dimensions too large, escalation disabled,
///    or the lifted quotient did not match).
///  - certified_failure_over_rationals: the tested witnesses, including
///    x0+...+xn, fall short in exact rational arithmetic. For monomial ideals
///    the all-ones witness is decisive; in general this certifies the tested
///    elements only.
enum class WlpStatus {
  certified_holds,
  suspected_failure,
  certified_failure_over_rationals,
};

const char* wlp_status_name(WlpStatus s);

struct DegreeVerdict {
  int degree = 0;  // the map [A]_{degree-1} -> [A]_degree
  std::uint64_t dim_from = 0;
  std::uint64_t dim_to = 0;
  std::uint64_t target_rank = 0;  // min(dim_from, dim_to)
  std::uint64_t best_rank = 0;
  bool maximal = false;
  WlpStatus status = WlpStatus::suspected_failure;
  std::string witness;  // ell achieving best_rank; empty when no trial was needed
  int trials_used = 0;
  bool escalated = false;             // exact rational recheck performed
  bool escalation_dims_match = true;  // lifted quotient had the same dims
  std::uint64_t rational_rank = 0;    // best exact rank (when escalated)
};

struct ArtinianSummary {
  bool artinian = false;
  int socle_degree = -1;
  std::vector<std::uint64_t> h;  // h_0 .. h_e when artinian, else the probed values
  int probed_through = -1;
  bool ci_eligible = false;    // generator count == num_vars
  int ci_match_through = -1;   // highest probed t with h_t equal to the product formula
  bool ci_certified = false;   // artinian and matching through the socle
};

struct WlpOptions {
  std::uint64_t seed = 0;  // per-instance trial stream; degree t draws from split_seed(seed, t)
  int trials = 5;
  bool shortcut = true;    // certify via the two middle degrees when the quotient is a CI
  int prefix_through = -1;  // >= 0: only test degrees 1..this (scan may stop there too)
  std::uint64_t escalation_limit = 200;  // max dim for the exact rational recheck
  bool allow_escalation = true;
  bool drop_used_tails = true;  // free elimination rows once no later map needs them
  int cap = -1;                 // Artinian probe cap override (-1 = default)
};

struct WlpReport {
  ArtinianSummary quotient;
  std::vector<DegreeVerdict> degrees;  // tested degrees, ascending
  bool used_shortcut = false;
  bool covers_all_degrees = false;  // verdict extends to every degree (exhaustive or shortcut)
  int checked_through = 0;          // highest degree tested
  bool wlp_certified = false;       // every tested degree reached maximal rank
  bool any_suspected = false;
  bool any_certified_failure = false;
};

/// Degrees whose maximal rank settles every degree of a complete intersection
/// with this socle degree: injectivity at floor((e-1)/2)+1 propagates down,
/// surjectivity at floor(e/2)+1 propagates up (one degree when e is odd).
std::vector<int> shortcut_degrees(int socle_degree);

namespace detail {

inline Form trial_ell_fp(const PrimeField& field, int num_vars, std::uint64_t degree_stream, int k) {
  if (k == 0) return all_ones_linear(field, num_vars);
  return random_form(field, num_vars, 1, split_seed(degree_stream, static_cast<std::uint64_t>(k)));
}

inline QForm trial_ell_q(int num_vars, std::uint64_t degree_stream, int k) {
  RationalField q;
  if (k == 0) return all_ones_linear(q, num_vars);
  return random_qform(num_vars, 1, split_seed(degree_stream, static_cast<std::uint64_t>(k)));
}

}  // namespace detail

/// Test maximal rank of multiplication by a general linear form in one degree.
/// Trial 0 is x0+...+xn; later trials are seeded random linear forms; the scan
/// stops at the first maximal witness (rank can only be certified upward).
template <class F>
DegreeVerdict wlp_in_degree(QuotientRing<F>& q, int t, const WlpOptions& opts) {
  if (t < 1) throw std::invalid_argument("wlp_in_degree: degree must be >= 1");
  if (opts.trials < 1) throw std::invalid_argument("wlp_in_degree: need at least one trial");
  const int nv = q.spec.num_vars;
  DegreeVerdict v;
  v.degree = t;
  v.dim_from = q.tower.quotient_dim(t - 1);
  v.dim_to = q.tower.quotient_dim(t);
  v.target_rank = std::min(v.dim_from, v.dim_to);
  if (v.target_rank == 0) {
    v.maximal = true;
    v.status = WlpStatus::certified_holds;
    return v;
  }

  const std::uint64_t degree_stream = split_seed(opts.seed, static_cast<std::uint64_t>(t));
  std::vector<FormT<typename F::Value>> tried;
  for (int k = 0; k < opts.trials; ++k) {
    FormT<typename F::Value> ell;
    if constexpr (std::is_same_v<F, PrimeField>) {
      ell = detail::trial_ell_fp(q.field, nv, degree_stream, k);
    } else {
      ell = detail::trial_ell_q(nv, degree_stream, k);
    }
    auto M = multiplication_matrix(q.tower, t, ell);
    const std::uint64_t r = rank_in_place(q.field, M);
    v.trials_used = k + 1;
    if (r > v.best_rank || v.witness.empty()) {
      v.best_rank = r;
      v.witness = form_to_string(ell);
    }
    tried.push_back(std::move(ell));
    if (v.best_rank == v.target_rank) break;
  }
  v.maximal = v.best_rank == v.target_rank;
  if (v.maximal) {
    v.status = WlpStatus::certified_holds;
    return v;
  }

  if constexpr (std::is_same_v<F, RationalField>) {
    // Already exact: the tested witnesses certifiably fall short over Q.
    v.status = WlpStatus::certified_failure_over_rationals;
    return v;
  } else {
    v.status = WlpStatus::suspected_failure;
    if (!opts.allow_escalation || std::max(v.dim_from, v.dim_to) > opts.escalation_limit) {
      return v;
    }
    // Exact recheck: lift the instance and the very same witnesses to Q.
    v.escalated = true;
    RationalField qf;
    QCiSpec lifted = lift_spec_to_q(q.field, q.spec);
    IdealTower<RationalField> qtower(qf, nv, lifted.generators);
    v.escalation_dims_match = qtower.quotient_dim(t - 1) == v.dim_from && qtower.quotient_dim(t) == v.dim_to;
    if (!v.escalation_dims_match) {
      // The mod-p quotient degenerated; this prime is not a faithful proxy here.
      return v;
    }
    for (const auto& ell : tried) {
      auto M = multiplication_matrix(qtower, t, lift_to_q(q.field, ell));
      v.rational_rank = std::max(v.rational_rank, rank_in_place(qf, M));
      if (v.rational_rank == v.target_rank) break;
    }
    v.status = v.rational_rank == v.target_rank ? WlpStatus::certified_holds
                                                : WlpStatus::certified_failure_over_rationals;
    v.maximal = v.rational_rank == v.target_rank;
    return v;
  }
}

namespace detail {

inline void fold_verdict(WlpReport& rep, const DegreeVerdict& v) {
  if (v.status == WlpStatus::suspected_failure) rep.any_suspected = true;
  if (v.status == WlpStatus::certified_failure_over_rationals) rep.any_certified_failure = true;
}

}  // namespace detail

/// Full analysis: probe the Hilbert function, then test maximal rank degree by
/// degree (all of 1..e+1, or just the two shortcut degrees for a certified
/// complete intersection, or a prefix when opts.prefix_through is set).
template <class F>
WlpReport run_wlp(QuotientRing<F>& q, const WlpOptions& opts) {
  q.spec.validate();
  if (opts.trials < 1) throw std::invalid_argument("run_wlp: need at least one trial");
  const int nv = q.spec.num_vars;
  WlpReport rep;
  ArtinianSummary& sum = rep.quotient;
  sum.ci_eligible = static_cast<int>(q.spec.degrees.size()) == nv;
  HilbertFunction formula;
  if (sum.ci_eligible) formula = hilbert_by_product_formula(nv, q.spec.degrees);
  const int cap = opts.cap >= 0 ? opts.cap : default_artinian_cap(nv, q.spec.degrees);

  const bool try_shortcut = opts.shortcut && sum.ci_eligible && opts.prefix_through < 0;
  if (try_shortcut) {
    const int e = formula.socle_degree;
    const std::vector<int> checks = shortcut_degrees(e);
    bool mismatch = false;
    for (int t = 0; t <= e + 1; ++t) {
      const std::uint64_t h = q.tower.quotient_dim(t);
      if (h != formula.at(t)) {
        mismatch = true;
        break;
      }
      if (t <= e) sum.h.push_back(h);
      sum.probed_through = t;
      sum.ci_match_through = t;
      const int done = t - 1;  // fully consumed as a shift source once t exists
      if (opts.drop_used_tails && done >= 0 &&
          std::find(checks.begin(), checks.end(), done) == checks.end()) {
        q.tower.drop_tails(done);
      }
    }
    if (!mismatch) {
      sum.artinian = true;
      sum.socle_degree = e;
      sum.ci_certified = true;
      rep.used_shortcut = true;
      rep.covers_all_degrees = true;
      rep.checked_through = e + 1;
      for (int t : checks) {
        DegreeVerdict v = wlp_in_degree(q, t, opts);
        detail::fold_verdict(rep, v);
        rep.degrees.push_back(std::move(v));
      }
      rep.wlp_certified = true;
      for (const auto& v : rep.degrees) rep.wlp_certified = rep.wlp_certified && v.maximal;
      return rep;
    }
    // Hilbert left the complete-intersection track: the shortcut theorems do
    // not apply, so rebuild and fall through to the exhaustive scan.
    sum = ArtinianSummary{};
    sum.ci_eligible = true;
    q.tower = IdealTower<F>(q.field, nv, q.spec.generators);
  }

  const int check_limit = opts.prefix_through >= 0 ? opts.prefix_through : std::numeric_limits<int>::max();
  sum.h.push_back(q.tower.quotient_dim(0));
  sum.probed_through = 0;
  if (sum.ci_eligible && sum.h[0] == formula.at(0)) sum.ci_match_through = 0;
  for (int t = 1; t <= cap; ++t) {
    const std::uint64_t h = q.tower.quotient_dim(t);
    if (sum.ci_eligible && sum.ci_match_through == t - 1 && h == formula.at(t)) {
      sum.ci_match_through = t;
    }
    if (t <= check_limit) {
      DegreeVerdict v = wlp_in_degree(q, t, opts);
      detail::fold_verdict(rep, v);
      rep.degrees.push_back(std::move(v));
      rep.checked_through = t;
    }
    if (opts.drop_used_tails) q.tower.drop_tails(t - 1);
    sum.probed_through = t;
    if (h == 0) {
      sum.artinian = true;
      sum.socle_degree = t - 1;
      break;
    }
    sum.h.push_back(h);
    if (t >= check_limit && opts.prefix_through >= 0) break;  // prefix mode: stop probing
  }
  sum.ci_certified = sum.ci_eligible && sum.artinian && sum.socle_degree == formula.socle_degree &&
                     sum.ci_match_through >= sum.socle_degree;
  rep.covers_all_degrees = sum.artinian && rep.checked_through >= sum.socle_degree + 1;
  rep.wlp_certified = !rep.degrees.empty();
  for (const auto& v : rep.degrees) rep.wlp_certified = rep.wlp_certified && v.maximal;
  return rep;
}

}  // namespace lefschetz
