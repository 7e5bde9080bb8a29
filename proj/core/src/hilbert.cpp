#include "lefschetz/hilbert.hpp"

#include <algorithm>

#include "lefschetz/monomial.hpp"

namespace lefschetz {

int ci_socle_degree(const std::vector<int>& degrees) {
  int e = 0;
  for (int d : degrees) {
    if (d < 1) throw std::invalid_argument("ci_socle_degree: degrees must be >= 1");
    e += d - 1;
  }
  return e;
}

HilbertFunction hilbert_by_product_formula(int num_vars, const std::vector<int>& degrees) {
  if (num_vars < 1 || num_vars > kMaxVars) {
    throw std::invalid_argument("hilbert_by_product_formula: bad num_vars");
  }
  if (static_cast<int>(degrees.size()) != num_vars) {
    throw std::invalid_argument("hilbert_by_product_formula: need exactly num_vars degrees");
  }
  std::vector<std::uint64_t> acc{1};
  for (int d : degrees) {
    if (d < 1) throw std::invalid_argument("hilbert_by_product_formula: degrees must be >= 1");
    // acc *= 1 + z + ... + z^{d-1}; coefficient c_k = sum of a window of acc.
    std::vector<std::uint64_t> next(acc.size() + static_cast<std::size_t>(d) - 1, 0);
    for (std::size_t k = 0; k < next.size(); ++k) {
      unsigned __int128 s = 0;
      const std::size_t lo = k + 1 >= static_cast<std::size_t>(d) ? k + 1 - static_cast<std::size_t>(d) : 0;
      const std::size_t hi = std::min(k, acc.size() - 1);
      for (std::size_t j = lo; j <= hi; ++j) s += acc[j];
      if (s > static_cast<unsigned __int128>(UINT64_MAX)) {
        throw std::overflow_error("hilbert_by_product_formula: value exceeds uint64");
      }
      next[k] = static_cast<std::uint64_t>(s);
    }
    acc = std::move(next);
  }
  HilbertFunction h;
  h.values = std::move(acc);
  h.socle_degree = static_cast<int>(h.values.size()) - 1;
  return h;
}

int default_artinian_cap(int num_vars, const std::vector<int>& degrees) {
  if (degrees.empty()) throw std::invalid_argument("default_artinian_cap: no generators");
  if (static_cast<int>(degrees.size()) == num_vars) {
    return ci_socle_degree(degrees) + 1;
  }
  const int dmax = *std::max_element(degrees.begin(), degrees.end());
  return 2 * dmax * num_vars;
}

}  // namespace lefschetz
