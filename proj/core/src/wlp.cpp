#include "lefschetz/wlp.hpp"

namespace lefschetz {

const char* wlp_status_name(WlpStatus s) {
  switch (s) {
    case WlpStatus::certified_holds:
      return "certified-holds";
    case WlpStatus::suspected_failure:
      return "suspected-failure";
    case WlpStatus::certified_failure_over_rationals:
      return "certified-failure-over-rationals";
  }
  return "unknown";
}

std::vector<int> shortcut_degrees(int socle_degree) {
  if (socle_degree < 0) throw std::invalid_argument("shortcut_degrees: negative socle degree");
  int inj = floor_div(socle_degree - 1, 2) + 1;  // here h_{t-1} <= h_t: maximal = injective
  int surj = floor_div(socle_degree, 2) + 1;     // here h_{t-1} >= h_t: maximal = surjective
  if (inj < 1) inj = 1;
  if (surj < 1) surj = 1;
  if (inj == surj) return {inj};
  return {inj, surj};
}

}  // namespace lefschetz
