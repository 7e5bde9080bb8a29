#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lefschetz/form.hpp"

namespace lefschetz {

/// Parse failure; `position` is the byte offset into the input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("parse error at byte " + std::to_string(position) + ": " + message),
        position(position) {}
  std::size_t position;
};

/// Field-independent parse result: integer coefficients as written.
struct ParsedTerm {
  long long coeff = 1;
  std::vector<std::pair<int, int>> powers;  // (variable index, exponent)
  int degree = 0;
};

struct ParsedPoly {
  std::vector<ParsedTerm> terms;
  int max_var = -1;  // -1 when the text has no variables (constant)
  int degree = 0;    // common term degree (0 for "0")
};

/// Grammar (whitespace ignored between tokens):
///   poly   := ['-'|'+'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := integer | 'x' index ['^' exponent]
/// All terms must share one total degree; otherwise a ParseError lists the
/// degrees found.
ParsedPoly parse_poly_text(const std::string& text);

/// Map a parsed polynomial into a field. num_vars = -1 infers max_var+1
/// (at least 1); an explicit num_vars bounds-checks variable indices.
template <class F>
FormT<typename F::Value> parse_form(const F& field, const std::string& text, int num_vars = -1) {
  ParsedPoly p = parse_poly_text(text);
  int nv = num_vars >= 0 ? num_vars : (p.max_var + 1 > 1 ? p.max_var + 1 : 1);
  if (p.max_var >= nv) {
    throw ParseError(0, "variable x" + std::to_string(p.max_var) + " out of range for " +
                            std::to_string(nv) + " variables");
  }
  std::vector<std::pair<Monomial, typename F::Value>> terms;
  terms.reserve(p.terms.size());
  for (const auto& t : p.terms) {
    std::vector<std::uint8_t> e(static_cast<std::size_t>(nv), 0);
    for (auto [v, k] : t.powers) {
      int s = e[static_cast<std::size_t>(v)] + k;
      if (s > kMaxDegree) throw ParseError(0, "exponent too large");
      e[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(s);
    }
    terms.emplace_back(Monomial::make(std::move(e)), field.from_int(t.coeff));
  }
  return make_form(field, nv, p.degree, std::move(terms));
}

}  // namespace lefschetz
