#pragma once

// Test-side reference implementations, deliberately different algorithms
// from the library code they check.

#include <algorithm>
#include <cmath>

namespace mahc_test {

// Circle-circle intersection area by composite-Simpson quadrature over the
// x-axis: at abscissa x the lens is the interval [-h, h] with
// h = min(sqrt(r1^2 - x^2), sqrt(r2^2 - (x-d)^2)). Accurate to ~1e-8 for
// unit-scale radii; used to cross-check the closed form.
inline double lens_area_quadrature(double r1, double r2, double d) {
  const double lo = std::max(-r1, d - r2);
  const double hi = std::min(r1, d + r2);
  if (hi <= lo) return 0.0;
  const auto height = [&](double x) {
    const double a = r1 * r1 - x * x;
    const double b = r2 * r2 - (x - d) * (x - d);
    return 2.0 * std::sqrt(std::max(0.0, std::min(a, b)));
  };
  const int panels = 1 << 21;  // even
  const double h = (hi - lo) / panels;
  double sum = height(lo) + height(hi);
  for (int i = 1; i < panels; ++i) {
    sum += height(lo + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return sum * h / 3.0;
}

// Unit-circle lens area via the specialized chord formula
// A = 2*acos(d/2) - (d/2)*sqrt(4 - d^2), valid for 0 <= d <= 2. A second,
// independent expression of the closed form for the common fixture.
inline double unit_lens_area(double d) {
  if (d >= 2.0) return 0.0;
  return 2.0 * std::acos(d / 2.0) - (d / 2.0) * std::sqrt(4.0 - d * d);
}

}  // namespace mahc_test
