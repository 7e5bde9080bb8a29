#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/fp.hpp"
#include "lefschetz/monomial.hpp"
#include "lefschetz/rational.hpp"
#include "lefschetz/rng.hpp"

namespace lefschetz {

/// A homogeneous form: declared degree + terms with nonzero coefficients,
/// kept sorted largest monomial first. The zero form has no terms but keeps
/// its declared degree (a Jacobian with a vanished partial still reports the
/// slot's degree). V is a field value type (uint64_t over F_p, Rational over Q).
template <class V>
struct FormT {
  int num_vars = 0;
  int degree = 0;
  std::vector<std::pair<Monomial, V>> terms;

  bool is_zero() const { return terms.empty(); }
};

using Form = FormT<std::uint64_t>;
using QForm = FormT<Rational>;

namespace detail {
template <class V>
void sort_terms(FormT<V>& f) {
  std::sort(f.terms.begin(), f.terms.end(),
            [](const auto& a, const auto& b) { return grlex_cmp(a.first, b.first) > 0; });
}
}  // namespace detail

/// Build a form from (monomial, coefficient) pairs: merges duplicates,
/// drops zeros, sorts, and checks homogeneity against `degree`.
template <class F>
FormT<typename F::Value> make_form(const F& field, int num_vars, int degree,
                                   std::vector<std::pair<Monomial, typename F::Value>> terms) {
  FormT<typename F::Value> f;
  f.num_vars = num_vars;
  f.degree = degree;
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return grlex_cmp(a.first, b.first) > 0; });
  for (auto& [m, c] : terms) {
    if (m.num_vars() != num_vars) throw std::invalid_argument("make_form: num_vars mismatch");
    if (m.degree != degree) throw std::invalid_argument("make_form: non-homogeneous term");
    if (!f.terms.empty() && grlex_cmp(f.terms.back().first, m) == 0) {
      f.terms.back().second = field.add(f.terms.back().second, c);
    } else {
      f.terms.emplace_back(std::move(m), std::move(c));
    }
  }
  std::erase_if(f.terms, [&](const auto& t) { return field.is_zero(t.second); });
  return f;
}

template <class F>
FormT<typename F::Value> form_add(const F& field, const FormT<typename F::Value>& a,
                                  const FormT<typename F::Value>& b) {
  if (a.num_vars != b.num_vars || a.degree != b.degree) {
    throw std::invalid_argument("form_add: shape mismatch");
  }
  auto terms = a.terms;
  terms.insert(terms.end(), b.terms.begin(), b.terms.end());
  return make_form(field, a.num_vars, a.degree, std::move(terms));
}

template <class F>
FormT<typename F::Value> form_scale(const F& field, const FormT<typename F::Value>& a,
                                    const typename F::Value& c) {
  FormT<typename F::Value> r;
  r.num_vars = a.num_vars;
  r.degree = a.degree;
  if (field.is_zero(c)) return r;
  r.terms = a.terms;
  for (auto& t : r.terms) t.second = field.mul(t.second, c);
  return r;
}

/// Product of homogeneous forms; degrees add (also for zero factors).
template <class F>
FormT<typename F::Value> form_mul(const F& field, const FormT<typename F::Value>& a,
                                  const FormT<typename F::Value>& b) {
  if (a.num_vars != b.num_vars) throw std::invalid_argument("form_mul: num_vars mismatch");
  std::vector<std::pair<Monomial, typename F::Value>> terms;
  terms.reserve(a.terms.size() * b.terms.size());
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) {
      terms.emplace_back(monomial_mul(ma, mb), field.mul(ca, cb));
    }
  }
  return make_form(field, a.num_vars, a.degree + b.degree, std::move(terms));
}

/// Partial derivative d/dx_var (power rule; exponents map into the field).
template <class F>
FormT<typename F::Value> form_derivative(const F& field, const FormT<typename F::Value>& a, int var) {
  if (var < 0 || var >= a.num_vars) throw std::invalid_argument("form_derivative: bad variable");
  if (a.degree == 0) throw std::invalid_argument("form_derivative: degree-0 form");
  std::vector<std::pair<Monomial, typename F::Value>> terms;
  for (const auto& [m, c] : a.terms) {
    if (m.exps[var] == 0) continue;
    Monomial d = m;
    d.exps[var] -= 1;
    d.degree -= 1;
    terms.emplace_back(std::move(d), field.mul(c, field.from_int(m.exps[var])));
  }
  return make_form(field, a.num_vars, a.degree - 1, std::move(terms));
}

/// Dense random form: every degree-`degree` monomial gets a coefficient drawn
/// uniformly from F_p (zeros are dropped from storage). Same seed, same form.
Form random_form(const PrimeField& field, int num_vars, int degree, std::uint64_t seed);

/// Random form over Q for native-rational confirmatory runs: integer
/// coefficients uniform in [-99, 99] (kept small so exact elimination stays
/// tractable).
QForm random_qform(int num_vars, int degree, std::uint64_t seed);

/// x0 + x1 + ... + x_{n-1}, the first Lefschetz trial element.
template <class F>
FormT<typename F::Value> all_ones_linear(const F& field, int num_vars) {
  std::vector<std::pair<Monomial, typename F::Value>> terms;
  for (int i = 0; i < num_vars; ++i) {
    std::vector<std::uint8_t> e(num_vars, 0);
    e[i] = 1;
    terms.emplace_back(Monomial::make(std::move(e)), field.one());
  }
  return make_form(field, num_vars, 1, std::move(terms));
}

/// Symmetric lift F_p -> Q, coefficientwise (see PrimeField::lift_symmetric).
QForm lift_to_q(const PrimeField& field, const Form& f);

/// Rendering, round-trippable through parse_form: "x0^3 + 2*x1*x2^2".
std::string form_to_string(const Form& f);
std::string form_to_string(const QForm& f);

inline Form random_form(const PrimeField& field, int num_vars, int degree, std::uint64_t seed) {
  Rng rng(seed);
  auto monos = enumerate_monomials(num_vars, degree);
  std::vector<std::pair<Monomial, std::uint64_t>> terms;
  terms.reserve(monos.size());
  for (auto& m : monos) {
    std::uint64_t c = rng.below(field.modulus());
    if (c != 0) terms.emplace_back(std::move(m), c);
  }
  return make_form(field, num_vars, degree, std::move(terms));
}

inline QForm random_qform(int num_vars, int degree, std::uint64_t seed) {
  Rng rng(seed);
  RationalField q;
  auto monos = enumerate_monomials(num_vars, degree);
  std::vector<std::pair<Monomial, Rational>> terms;
  for (auto& m : monos) {
    long long c = static_cast<long long>(rng.below(199)) - 99;
    if (c != 0) terms.emplace_back(std::move(m), q.from_int(c));
  }
  return make_form(q, num_vars, degree, std::move(terms));
}

inline QForm lift_to_q(const PrimeField& field, const Form& f) {
  RationalField q;
  QForm r;
  r.num_vars = f.num_vars;
  r.degree = f.degree;
  for (const auto& [m, c] : f.terms) {
    r.terms.emplace_back(m, q.from_int(field.lift_symmetric(c)));
  }
  return r;
}

}  // namespace lefschetz
