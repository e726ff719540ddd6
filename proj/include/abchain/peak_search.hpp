#pragma once

#include <cmath>
#include <utility>

#include "abchain/types.hpp"

namespace abchain {

struct PeakEstimate {
  Real x = 0.0;
  Real value = 0.0;
};

// Golden-section maximization of a unimodal function on [lo, hi]. Terminates
// when the bracket shrinks below rel_tol * max(1, |x|).
template <class F>
PeakEstimate golden_section_maximize(F&& f, Real lo, Real hi, Real rel_tol,
                                     int max_iterations = 200) {
  static const Real inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

  Real a = lo, b = hi;
  Real c = b - inv_phi * (b - a);
  Real d = a + inv_phi * (b - a);
  Real fc = f(c);
  Real fd = f(d);
  for (int i = 0; i < max_iterations && (b - a) > rel_tol * std::max(Real{1}, std::abs(b)); ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const Real x = 0.5 * (a + b);
  return PeakEstimate{x, f(x)};
}

}  // namespace abchain
