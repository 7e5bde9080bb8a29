#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <vector>

#include "lefschetz/fp.hpp"
#include "lefschetz/hilbert.hpp"
#include "lefschetz/macaulay.hpp"
#include "lefschetz/parse.hpp"
#include "lefschetz/rational.hpp"
#include "lefschetz/tower.hpp"
#include "oracle.hpp"

using namespace lefschetz;

namespace {

// independent truncated-geometric product: prod_i (1 + t + ... + t^(d_i - 1))
std::vector<std::uint64_t> series_product(const std::vector<int>& degrees) {
  std::vector<std::uint64_t> acc{1};
  for (int d : degrees) {
    std::vector<std::uint64_t> next(acc.size() + static_cast<std::size_t>(d) - 1, 0);
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (int k = 0; k < d; ++k) next[i + static_cast<std::size_t>(k)] += acc[i];
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

TEST_CASE("socle degree of a complete intersection") {
  CHECK(ci_socle_degree({2, 2, 2}) == 3);
  CHECK(ci_socle_degree({3, 3, 3, 3}) == 8);
  CHECK(ci_socle_degree({1}) == 0);
  CHECK(ci_socle_degree({2, 3, 4, 5}) == 10);
}

TEST_CASE("product formula golden values") {
  const auto h = hilbert_by_product_formula(4, {3, 3, 3, 3});
  CHECK(h.values == std::vector<std::uint64_t>{1, 4, 10, 16, 19, 16, 10, 4, 1});
  CHECK(h.socle_degree == 8);
  CHECK(h.at(4) == 19);
  CHECK(h.at(9) == 0);   // past the socle
  CHECK(h.at(-1) == 0);
  const auto sq4 = hilbert_by_product_formula(4, {2, 2, 2, 2});
  CHECK(sq4.values == std::vector<std::uint64_t>{1, 4, 6, 4, 1});  // (1+t)^4
  const auto sq5 = hilbert_by_product_formula(5, {2, 2, 2, 2, 2});
  CHECK(sq5.values == std::vector<std::uint64_t>{1, 5, 10, 10, 5, 1});
  const auto one_var = hilbert_by_product_formula(1, {1});
  CHECK(one_var.values == std::vector<std::uint64_t>{1});
  CHECK(one_var.socle_degree == 0);
}

TEST_CASE("product formula equals an independent series expansion") {
  const std::vector<std::vector<int>> cases = {
      {2, 2, 2}, {3, 4}, {2, 3, 4, 5}, {5, 5, 5}, {2, 2, 3, 3, 4}};
  for (const auto& degrees : cases) {
    const auto h = hilbert_by_product_formula(static_cast<int>(degrees.size()), degrees);
    CHECK(h.values == series_product(degrees));
  }
}

TEST_CASE("total dimension is the product of the degrees") {
  for (const auto& degrees : std::vector<std::vector<int>>{{2, 2, 2}, {3, 3, 3, 3}, {2, 4, 6}}) {
    const auto h = hilbert_by_product_formula(static_cast<int>(degrees.size()), degrees);
    std::uint64_t prod = 1;
    for (int d : degrees) prod *= static_cast<std::uint64_t>(d);
    CHECK(std::accumulate(h.values.begin(), h.values.end(), std::uint64_t{0}) == prod);
    CHECK(h.total_dim() == prod);
  }
}

TEST_CASE("gorenstein symmetry of the formula") {
  for (const auto& degrees : std::vector<std::vector<int>>{{2, 3, 4}, {3, 3, 3, 3}, {2, 2, 5, 5}}) {
    const auto h = hilbert_by_product_formula(static_cast<int>(degrees.size()), degrees);
    const int e = h.socle_degree;
    for (int t = 0; t <= e; ++t) CHECK(h.at(t) == h.at(e - t));
  }
}

TEST_CASE("formula requires one degree per variable") {
  CHECK_THROWS_AS(hilbert_by_product_formula(3, {2, 2}), std::invalid_argument);
}

TEST_CASE("linear algebra route agrees with the formula on random cis") {
  PrimeField f;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const std::vector<int> degrees = seed % 2 ? std::vector<int>{2, 3, 3}
                                              : std::vector<int>{2, 2, 4};
    const auto spec = random_ci_spec(f, 3, degrees, seed);
    const auto by_matrix = hilbert_by_linear_algebra(f, spec);
    const auto by_formula = hilbert_by_product_formula(3, degrees);
    CHECK(by_matrix.values == by_formula.values);
    CHECK(by_matrix.socle_degree == by_formula.socle_degree);
  }
}

TEST_CASE("linear algebra route agrees with the dense rational oracle") {
  const auto spec = random_ci_spec_q(3, {2, 2, 3}, 11);
  RationalField qf;
  const auto h = hilbert_by_linear_algebra(qf, spec);
  for (int t = 0; t <= h.socle_degree + 1; ++t)
    CHECK(h.at(t) == static_cast<std::uint64_t>(oracle::quotient_dim(spec, t)));
}

TEST_CASE("monomial complete intersection certifies") {
  PrimeField f;
  CiSpec spec;
  spec.num_vars = 3;
  spec.degrees = {2, 2, 2};
  for (int i = 0; i < 3; ++i) spec.generators.push_back(parse_form(f, "x" + std::to_string(i) + "^2", 3));
  const auto cert = certify_complete_intersection(f, spec);
  CHECK(cert.certified);
  CHECK(cert.by_matrix.values == cert.by_formula.values);
  CHECK(cert.failure.empty());
}

TEST_CASE("hidden regular sequence certifies") {
  // (x0^2 + x1^2, x0*x1) is Artinian in two variables
  PrimeField f;
  CiSpec spec;
  spec.num_vars = 2;
  spec.degrees = {2, 2};
  spec.generators = {parse_form(f, "x0^2 + x1^2", 2), parse_form(f, "x0*x1", 2)};
  const auto cert = certify_complete_intersection(f, spec);
  CHECK(cert.certified);
  CHECK(cert.by_matrix.values == std::vector<std::uint64_t>{1, 2, 1});
}

TEST_CASE("non-artinian input does not certify") {
  PrimeField f;
  CiSpec spec;
  spec.num_vars = 3;
  spec.degrees = {2, 2, 2};
  // x2 never appears: V(x0, x1) survives
  spec.generators = {parse_form(f, "x0^2", 3), parse_form(f, "x0*x1", 3),
                     parse_form(f, "x1^2", 3)};
  const auto cert = certify_complete_intersection(f, spec);
  CHECK_FALSE(cert.certified);
  CHECK_FALSE(cert.failure.empty());
  CHECK_THROWS_AS(hilbert_by_linear_algebra(f, spec), NotArtinianError);
}

TEST_CASE("degenerate pair does not certify") {
  PrimeField f;
  CiSpec spec;
  spec.num_vars = 2;
  spec.degrees = {2, 2};
  spec.generators = {parse_form(f, "x0*x1", 2), parse_form(f, "x0*x1", 2)};
  const auto cert = certify_complete_intersection(f, spec);
  CHECK_FALSE(cert.certified);
}

TEST_CASE("wrong generator count is rejected") {
  PrimeField f;
  CiSpec spec;
  spec.num_vars = 3;
  spec.degrees = {2, 2};
  spec.generators = {parse_form(f, "x0^2", 3), parse_form(f, "x1^2", 3)};
  CHECK_THROWS_AS(certify_complete_intersection(f, spec), std::invalid_argument);
}

TEST_CASE("scan reports the probe window") {
  PrimeField f;
  std::vector<Form> artinian = {parse_form(f, "x0^2", 2), parse_form(f, "x1^3", 2)};
  IdealTower<PrimeField> t1(f, 2, artinian);
  const auto s1 = scan_hilbert(t1, 10);
  CHECK(s1.reached_zero);
  CHECK(s1.socle_degree == 3);
  CHECK(s1.values == std::vector<std::uint64_t>{1, 2, 2, 1, 0});
  std::vector<Form> not_artinian = {parse_form(f, "x0^2", 2)};
  IdealTower<PrimeField> t2(f, 2, not_artinian);
  const auto s2 = scan_hilbert(t2, 7);
  CHECK_FALSE(s2.reached_zero);
  CHECK(s2.through == 7);
  CHECK(s2.values.back() == 2);  // h stabilizes at deg(V) = 2
}

TEST_CASE("default artinian probe caps") {
  CHECK(default_artinian_cap(3, {2, 2, 2}) == 4);         // socle + 1
  CHECK(default_artinian_cap(4, {3, 3, 3, 3}) == 9);
  CHECK(default_artinian_cap(3, {2, 2}) == 2 * 2 * 3);    // fallback window
}

TEST_CASE("nonartinian error carries the probe depth") {
  PrimeField f;
  CiSpec spec;
  spec.num_vars = 2;
  spec.degrees = {2};
  spec.generators = {parse_form(f, "x0^2", 2)};
  try {
    hilbert_by_linear_algebra(f, spec, 6);
    FAIL("expected NotArtinianError");
  } catch (const NotArtinianError& e) {
    CHECK(e.probed_through == 6);
  }
}

TEST_CASE("rational and prime routes agree") {
  PrimeField f;
  const auto fp_spec = random_ci_spec(f, 3, {2, 2, 2}, 4);
  const auto q_spec = lift_spec_to_q(f, fp_spec);
  RationalField qf;
  const auto hq = hilbert_by_linear_algebra(qf, q_spec);
  const auto hp = hilbert_by_linear_algebra(f, fp_spec);
  CHECK(hq.values == hp.values);
}
