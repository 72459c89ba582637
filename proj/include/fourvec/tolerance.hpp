#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace fourvec {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;

// |norm| below this, scaled by max(1, sum |c|^2), counts as zero norm.
inline constexpr double kZeroNormThreshold = 1e-12;

/// |a - b| / max(1, |a|, |b|). Equality under eps means this is <= eps.
template <typename Scalar>
double relative_difference(const Scalar& a, const Scalar& b) {
  using std::abs;
  const double scale = std::max({1.0, double(abs(a)), double(abs(b))});
  return double(abs(a - b)) / scale;
}

template <typename Scalar>
bool approx_equal(const Scalar& a, const Scalar& b,
                  double eps = kDefaultTolerance) {
  return relative_difference(a, b) <= eps;
}

}  // namespace fourvec
