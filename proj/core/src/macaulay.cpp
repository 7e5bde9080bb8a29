#include "lefschetz/macaulay.hpp"

namespace lefschetz {

CiSpec random_ci_spec(const PrimeField& field, int num_vars, const std::vector<int>& degrees,
                      std::uint64_t seed) {
  CiSpec spec;
  spec.num_vars = num_vars;
  spec.degrees = degrees;
  spec.seed = seed;
  const std::uint64_t gen_stream = split_seed(seed, 0);
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    spec.generators.push_back(random_form(field, num_vars, degrees[i], split_seed(gen_stream, i)));
  }
  spec.validate();
  return spec;
}

QCiSpec random_ci_spec_q(int num_vars, const std::vector<int>& degrees, std::uint64_t seed) {
  QCiSpec spec;
  spec.num_vars = num_vars;
  spec.degrees = degrees;
  spec.seed = seed;
  const std::uint64_t gen_stream = split_seed(seed, 0);
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    spec.generators.push_back(random_qform(num_vars, degrees[i], split_seed(gen_stream, i)));
  }
  spec.validate();
  return spec;
}

CiSpec random_equigenerated_ci(const PrimeField& field, int proj_dim_n, int d, std::uint64_t seed) {
  return random_ci_spec(field, proj_dim_n + 1, std::vector<int>(static_cast<std::size_t>(proj_dim_n) + 1, d),
                        seed);
}

QCiSpec lift_spec_to_q(const PrimeField& field, const CiSpec& spec) {
  QCiSpec out;
  out.num_vars = spec.num_vars;
  out.degrees = spec.degrees;
  out.seed = spec.seed;
  for (const auto& g : spec.generators) out.generators.push_back(lift_to_q(field, g));
  return out;
}

}  // namespace lefschetz
