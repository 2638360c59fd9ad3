#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <vector>

namespace staircase {

/// Gauss-Legendre rule on [0,1]; nodes computed by Newton iteration on P_n.
struct GaussRule {
  std::vector<double> x, w;
};

inline const GaussRule& gaussRule(int n) {
  static std::map<int, GaussRule> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  GaussRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Tricomi-type initial guess, then Newton on the Legendre polynomial.
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it2 = 0; it2 < 100; ++it2) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    const double wt = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.x[i] = 0.5 * (1.0 - z);
    rule.x[n - 1 - i] = 0.5 * (1.0 + z);
    rule.w[i] = 0.5 * wt;
    rule.w[n - 1 - i] = 0.5 * wt;
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

struct QuadratureSettings {
  int order = 6;        // base tensor Gauss order per axis
  int refinedOrder = 9; // order used for the error estimate
  double relTol = 1e-6;
  int maxDepth = 8;     // adaptive bisection depth for kinked integrands
};

struct QuadratureResult {
  double value = 0.0;
  double errorEstimate = 0.0;
};

namespace detail {

template <int Dim>
double tensorGauss(const std::function<double(const std::array<double, Dim>&)>& f,
                   const std::array<double, Dim>& lo, const std::array<double, Dim>& hi,
                   int order) {
  const GaussRule& g = gaussRule(order);
  std::array<double, Dim> pt{};
  double vol = 1.0;
  for (int k = 0; k < Dim; ++k) vol *= hi[k] - lo[k];
  if (vol == 0.0) return 0.0;

  double sum = 0.0;
  std::array<int, Dim> idx{};
  while (true) {
    double wt = 1.0;
    for (int k = 0; k < Dim; ++k) {
      pt[k] = lo[k] + (hi[k] - lo[k]) * g.x[idx[k]];
      wt *= g.w[idx[k]];
    }
    sum += wt * f(pt);
    int k = 0;
    for (; k < Dim; ++k) {
      if (++idx[k] < order) break;
      idx[k] = 0;
    }
    if (k == Dim) break;
  }
  return sum * vol;
}

template <int Dim>
QuadratureResult adaptive(const std::function<double(const std::array<double, Dim>&)>& f,
                          std::array<double, Dim> lo, std::array<double, Dim> hi,
                          const QuadratureSettings& s, int depth, double absTol) {
  const double coarse = tensorGauss<Dim>(f, lo, hi, s.order);
  const double fine = tensorGauss<Dim>(f, lo, hi, s.refinedOrder);
  const double err = std::abs(fine - coarse);
  if (depth >= s.maxDepth || err <= absTol) return {fine, err};

  int axis = 0;
  for (int k = 1; k < Dim; ++k)
    if (hi[k] - lo[k] > hi[axis] - lo[axis]) axis = k;
  const double mid = 0.5 * (lo[axis] + hi[axis]);
  auto loR = lo, hiL = hi;
  loR[axis] = mid;
  hiL[axis] = mid;
  const auto left = adaptive<Dim>(f, lo, hiL, s, depth + 1, absTol * 0.5);
  const auto right = adaptive<Dim>(f, loR, hi, s, depth + 1, absTol * 0.5);
  return {left.value + right.value, left.errorEstimate + right.errorEstimate};
}

}  // namespace detail

/// Adaptive tensor Gauss quadrature over a box; error estimated by order refinement.
template <int Dim>
QuadratureResult integrateBox(const std::function<double(const std::array<double, Dim>&)>& f,
                              const std::array<double, Dim>& lo, const std::array<double, Dim>& hi,
                              const QuadratureSettings& s = {}) {
  const double probe = std::abs(detail::tensorGauss<Dim>(f, lo, hi, s.order));
  const double absTol = s.relTol * std::max(probe, 1e-300);
  return detail::adaptive<Dim>(f, lo, hi, s, 0, absTol);
}

/// 1D convenience wrapper.
inline QuadratureResult integrateInterval(const std::function<double(double)>& f, double a,
                                          double b, const QuadratureSettings& s = {}) {
  return integrateBox<1>([&](const std::array<double, 1>& q) { return f(q[0]); }, {a}, {b}, s);
}

/// Least-squares line fit of y against x; returns slope, intercept, R^2.
struct LineFit {
  double slope = 0, intercept = 0, r2 = 0;
};

inline LineFit fitLine(const std::vector<double>& x, const std::vector<double>& y) {
  const int n = static_cast<int>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (int i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
    syy += y[i] * y[i];
  }
  LineFit fit;
  const double det = n * sxx - sx * sx;
  fit.slope = (n * sxy - sx * sy) / det;
  fit.intercept = (sy - fit.slope * sx) / n;
  double ssRes = 0;
  const double meanY = sy / n;
  double ssTot = 0;
  for (int i = 0; i < n; ++i) {
    const double pred = fit.slope * x[i] + fit.intercept;
    ssRes += (y[i] - pred) * (y[i] - pred);
    ssTot += (y[i] - meanY) * (y[i] - meanY);
  }
  fit.r2 = ssTot > 0 ? 1.0 - ssRes / ssTot : 1.0;
  return fit;
}

}  // namespace staircase
