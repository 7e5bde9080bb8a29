#pragma once

#include <stdexcept>

namespace lefschetz {

/// Floor division for possibly-negative numerators (C++ / truncates toward 0).
inline int floor_div(int a, int b) {
  if (b <= 0) throw std::invalid_argument("floor_div: divisor must be positive");
  int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

inline int ceil_div(int a, int b) {
  if (b <= 0) throw std::invalid_argument("ceil_div: divisor must be positive");
  int q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

}  // namespace lefschetz
