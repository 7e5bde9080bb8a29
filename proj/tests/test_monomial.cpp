#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "lefschetz/monomial.hpp"

using namespace lefschetz;

namespace {

// independent Pascal triangle
std::uint64_t pascal(int a, int b) {
  if (b < 0 || b > a) return 0;
  std::vector<std::vector<std::uint64_t>> t(a + 1);
  for (int i = 0; i <= a; ++i) {
    t[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return t[a][b];
}

Monomial from_exps(std::vector<std::uint8_t> e) { return Monomial::make(std::move(e)); }

}  // namespace

TEST_CASE("binomials match an independent Pascal triangle") {
  CHECK(binom(16, 4) == 1820);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(5, 7) == 0);
  for (int a = 0; a <= 40; ++a)
    for (int b = 0; b <= 13 && b <= a; ++b) CHECK(binom(a, b) == pascal(a, b));
}

TEST_CASE("monomial counts") {
  for (int nv = 1; nv <= 6; ++nv)
    for (int d = 0; d <= 10; ++d) CHECK(monomial_count(nv, d) == pascal(nv - 1 + d, d));
  CHECK(monomial_count(3, 2) == 6);
  CHECK(monomial_count(1, 9) == 1);
}

TEST_CASE("enumeration is complete, duplicate-free, strictly descending") {
  for (int nv = 1; nv <= 5; ++nv) {
    for (int d = 0; d <= 6; ++d) {
      const auto monos = enumerate_monomials(nv, d);
      REQUIRE(monos.size() == monomial_count(nv, d));
      for (const auto& m : monos) {
        int total = 0;
        for (auto e : m.exps) total += e;
        CHECK(total == d);
        CHECK(m.degree == d);
        CHECK(m.num_vars() == nv);
      }
      for (std::size_t i = 0; i + 1 < monos.size(); ++i)
        CHECK(grlex_cmp(monos[i], monos[i + 1]) > 0);
      if (d > 0) {
        CHECK(monos.front().exps[0] == d);          // x0^d first
        CHECK(monos.back().exps[nv - 1] == d);      // x_{nv-1}^d last
      }
    }
  }
}

TEST_CASE("flat enumeration agrees with the structured one") {
  for (int nv = 1; nv <= 5; ++nv) {
    for (int d = 0; d <= 6; ++d) {
      std::size_t count = 0;
      const auto flat = enumerate_exponents_flat(nv, d, count);
      const auto monos = enumerate_monomials(nv, d);
      REQUIRE(count == monos.size());
      REQUIRE(flat.size() == count * static_cast<std::size_t>(nv));
      for (std::size_t i = 0; i < count; ++i)
        for (int v = 0; v < nv; ++v)
          CHECK(flat[i * nv + v] == monos[i].exps[v]);
    }
  }
}

TEST_CASE("index is the position in the enumeration") {
  for (int nv = 1; nv <= 4; ++nv) {
    for (int d = 0; d <= 6; ++d) {
      const auto monos = enumerate_monomials(nv, d);
      for (std::size_t i = 0; i < monos.size(); ++i) {
        CHECK(monomial_index(monos[i]) == i);
        CHECK(monomial_index(monos[i].exps.data(), nv, d) == i);
      }
    }
  }
}

TEST_CASE("shifted index equals the index of the product with x_v") {
  for (int nv = 2; nv <= 4; ++nv) {
    for (int d = 0; d <= 5; ++d) {
      const auto monos = enumerate_monomials(nv, d);
      for (const auto& m : monos) {
        for (int v = 0; v < nv; ++v) {
          auto e = m.exps;
          e[v] += 1;
          const auto prod = from_exps(e);
          CHECK(shifted_index(m.exps.data(), nv, d, v) == monomial_index(prod));
        }
      }
    }
  }
}

TEST_CASE("graded-lex order properties") {
  const auto a = from_exps({2, 0, 0});  // x0^2
  const auto b = from_exps({1, 1, 0});  // x0*x1
  const auto c = from_exps({0, 2, 0});  // x1^2
  const auto low = from_exps({1, 0, 0});
  CHECK(grlex_cmp(a, b) > 0);
  CHECK(grlex_cmp(b, c) > 0);
  CHECK(grlex_cmp(a, c) > 0);  // transitive on the chain
  CHECK(grlex_cmp(low, c) < 0);  // degree dominates
  CHECK(grlex_cmp(a, a) == 0);
  CHECK(grlex_cmp(c, a) < 0);  // antisymmetric
  // totality: distinct monomials never compare equal
  const auto monos = enumerate_monomials(3, 4);
  for (std::size_t i = 0; i < monos.size(); ++i)
    for (std::size_t j = 0; j < monos.size(); ++j)
      CHECK((grlex_cmp(monos[i], monos[j]) == 0) == (i == j));
}

TEST_CASE("monomial product adds exponents") {
  const auto a = from_exps({2, 1, 0});
  const auto b = from_exps({0, 1, 3});
  const auto p = monomial_mul(a, b);
  CHECK(p.exps == std::vector<std::uint8_t>{2, 2, 3});
  CHECK(p.degree == a.degree + b.degree);
}

TEST_CASE("monomial rendering") {
  CHECK(monomial_to_string(from_exps({2, 0, 1})) == "x0^2*x2");
  CHECK(monomial_to_string(from_exps({0, 1, 0})) == "x1");
  CHECK(monomial_to_string(from_exps({0, 0, 0})) == "1");
}
