#include "lefschetz/parse.hpp"

#include <cctype>
#include <set>

namespace lefschetz {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char take() {
    skip_ws();
    return s[pos++];
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos;
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      int d = s[pos] - '0';
      if (v > (9223372036854775807LL - d) / 10) {
        throw ParseError(start, "integer literal too large");
      }
      v = v * 10 + d;
      ++pos;
    }
    if (pos == start) throw ParseError(pos, "expected an integer");
    return v;
  }
};

ParsedTerm parse_term(Cursor& c) {
  ParsedTerm t;
  bool first = true;
  while (true) {
    char ch = c.peek();
    if (ch == 'x') {
      c.take();
      std::size_t at = c.pos;
      long long var = c.integer();
      if (var > 1000) throw ParseError(at, "variable index too large");
      int exp = 1;
      if (c.peek() == '^') {
        c.take();
        std::size_t ep = c.pos;
        long long e = c.integer();
        if (e > kMaxDegree) throw ParseError(ep, "exponent too large");
        exp = static_cast<int>(e);
      }
      t.powers.emplace_back(static_cast<int>(var), exp);
      t.degree += exp;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      long long v = c.integer();
      // Coefficients multiply; overflow check mirrors Cursor::integer's bound.
      if (v != 0 && (t.coeff > 9223372036854775807LL / v || t.coeff < -9223372036854775807LL / v)) {
        throw ParseError(c.pos, "coefficient too large");
      }
      t.coeff *= v;
    } else {
      throw ParseError(c.pos, first ? "expected a term" : "expected a factor after '*'");
    }
    first = false;
    if (c.peek() == '*') {
      c.take();
      continue;
    }
    break;
  }
  return t;
}

}  // namespace

ParsedPoly parse_poly_text(const std::string& text) {
  Cursor c{text};
  ParsedPoly p;
  if (c.done()) throw ParseError(0, "empty input");

  bool negate = false;
  if (c.peek() == '-') {
    c.take();
    negate = true;
  } else if (c.peek() == '+') {
    c.take();
  }

  while (true) {
    ParsedTerm t = parse_term(c);
    if (negate) t.coeff = -t.coeff;
    for (auto [v, k] : t.powers) {
      if (v > p.max_var) p.max_var = v;
    }
    p.terms.push_back(std::move(t));
    if (c.done()) break;
    char ch = c.take();
    if (ch == '+') {
      negate = false;
    } else if (ch == '-') {
      negate = true;
    } else {
      throw ParseError(c.pos - 1, std::string("unexpected character '") + ch + "'");
    }
  }

  // Homogeneity: drop syntactically zero terms (e.g. "0"), then require one
  // common degree among the rest.
  std::erase_if(p.terms, [](const ParsedTerm& t) { return t.coeff == 0; });
  std::set<int> degrees;
  for (const auto& t : p.terms) degrees.insert(t.degree);
  if (degrees.size() > 1) {
    std::string list;
    for (int d : degrees) list += (list.empty() ? "" : ", ") + std::to_string(d);
    throw ParseError(0, "non-homogeneous polynomial: term degrees {" + list + "}");
  }
  p.degree = degrees.empty() ? 0 : *degrees.begin();
  return p;
}

namespace {

// Shared rendering skeleton: coefficient text (empty when the coefficient is
// a plain 1 and the monomial carries it) + monomial text.
std::string render_term(const std::string& coeff, bool coeff_is_one, const Monomial& m) {
  std::string mono = monomial_to_string(m);
  if (mono == "1") return coeff;
  if (coeff_is_one) return mono;
  return coeff + "*" + mono;
}

}  // namespace

std::string form_to_string(const Form& f) {
  if (f.terms.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : f.terms) {
    if (!s.empty()) s += " + ";
    s += render_term(std::to_string(c), c == 1, m);
  }
  return s;
}

std::string form_to_string(const QForm& f) {
  if (f.terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : f.terms) {
    Rational a = c;
    bool neg = sgn(a) < 0;
    if (neg) a = -a;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    s += render_term(a.get_str(), a == 1, m);
  }
  return s;
}

}  // namespace lefschetz
