#pragma once

#include <stdexcept>
#include <vector>

namespace staircase {

/// Coefficients in ascending order: p(t) = c[0] + c[1] t + ...
using Poly = std::vector<double>;

inline double polyEval(const Poly& c, double t) {
  double v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
  return v;
}

/// Coefficients of p(t + shift) via repeated synthetic division.
inline Poly polyShift(Poly c, double shift) {
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n - 1; ++i)
    for (int j = n - 2; j >= i; --j) c[j] += shift * c[j + 1];
  return c;
}

/// Monomial coefficients of the interpolating polynomial through (x_i, y_i),
/// by Newton divided differences expanded to the monomial basis.
inline Poly lagrangeInterpolate(const std::vector<double>& x, const std::vector<double>& y) {
  const int n = static_cast<int>(x.size());
  if (static_cast<int>(y.size()) != n || n == 0)
    throw std::invalid_argument("interpolate: bad node count");
  std::vector<double> dd = y;
  for (int level = 1; level < n; ++level)
    for (int i = n - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (x[i] - x[i - level]);

  Poly result{dd[n - 1]};
  for (int i = n - 2; i >= 0; --i) {
    // result = result*(t - x[i]) + dd[i]
    Poly next(result.size() + 1, 0.0);
    for (std::size_t j = 0; j < result.size(); ++j) {
      next[j + 1] += result[j];
      next[j] -= x[i] * result[j];
    }
    next[0] += dd[i];
    result = std::move(next);
  }
  return result;
}

}  // namespace staircase
