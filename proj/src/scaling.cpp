#include "staircase/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "staircase/quadrature.hpp"

namespace staircase::scaling {

namespace {

void checkQuery(const ExponentQuery& q) {
  if (!wells::validateSignature(q.sig)) throw std::invalid_argument("exponent query: f not in S_m");
  if (q.ell < 1 || q.ell > q.sig.m) throw std::invalid_argument("exponent query: ell out of range");
  if (q.p < Rational(1)) throw std::invalid_argument("exponent query: p < 1");
}

int degenerateCount(const wells::LaminationSignature& sig, int upTo) {
  int k = 0;
  for (int i = 1; i <= upTo; ++i) k += (sig.f[i - 1] == 1);
  return k;
}

/// Weights w_i: the elastic term of scale i carries power p*w_i.
std::vector<int> weights(const wells::LaminationSignature& sig, int count, bool reversed) {
  std::vector<int> w(count);
  for (int i = 1; i <= count; ++i) {
    const int level = reversed ? count + 1 - i : i;
    w[i - 1] = sig.f[level - 1] == 1 ? 2 : 1;
  }
  return w;
}

ScalingParams optimize(const ExponentQuery& q, bool reversed) {
  checkQuery(q);
  const int L = q.bc == BoundaryCondition::Dirichlet ? q.ell : q.ell - 1;
  ScalingParams out;
  if (L == 0) {
    out.total = Rational(1);
    return out;
  }
  // All terms share the exponent T:  p*w_i*(e_i - e_{i-1}) = T = 1 - e_L.
  const std::vector<int> w = weights(q.sig, L, reversed);
  Rational invSum(0);
  for (int wi : w) invSum = invSum + Rational(1, wi);
  const Rational T = Rational(1) / (Rational(1) + invSum / q.p);
  Rational acc(0);
  for (int i = 0; i < L; ++i) {
    acc = acc + T / (q.p * Rational(w[i]));
    out.e.push_back(acc);
  }
  out.total = T;
  return out;
}

}  // namespace

Rational predictedExponent(const ExponentQuery& q) {
  checkQuery(q);
  const int order = q.bc == BoundaryCondition::Dirichlet ? q.ell : q.ell - 1;
  const int k = degenerateCount(q.sig, order);
  const Rational p = q.p;
  return (Rational(2) * p) / (Rational(2) * p + Rational(2 * (order - k) + k));
}

ScalingParams heuristicOptimize(const ExponentQuery& q) { return optimize(q, false); }

ScalingParams heuristicOptimizeReversed(const ExponentQuery& q) { return optimize(q, true); }

bool orderingEquivalence(const ExponentQuery& q) {
  if (q.ell < 2) throw std::invalid_argument("orderingEquivalence: ell >= 2 required");
  return optimize(q, false).total == optimize(q, true).total;
}

BruteForceReport bruteForceExponentCheck(const ExponentQuery& q,
                                         const std::vector<double>& epsGrid) {
  checkQuery(q);
  if (epsGrid.size() < 2) throw std::invalid_argument("bruteForce: need a grid");
  const double decades =
      std::abs(std::log10(epsGrid.back()) - std::log10(epsGrid.front()));
  if (decades < 4.0 - 1e-9) throw std::invalid_argument("bruteForce: grid must span >= 4 decades");

  const int L = q.bc == BoundaryCondition::Dirichlet ? q.ell : q.ell - 1;
  const double p = q.p.value();
  BruteForceReport report;
  report.converged = true;

  for (double eps : epsGrid) {
    if (L == 0) {
      report.eps.push_back(eps);
      report.minValue.push_back(eps);
      continue;
    }
    const std::vector<int> w = weights(q.sig, L, false);
    // Coordinate descent in log scales; each 1D slice is convex.
    std::vector<double> t(L);  // t_i = log r_i
    for (int i = 0; i < L; ++i) t[i] = std::log(eps) * (i + 1) / (L + 1);
    auto value = [&](const std::vector<double>& tt) {
      double v = eps * std::exp(-tt[L - 1]);
      double prev = 0.0;
      for (int i = 0; i < L; ++i) {
        v += std::exp(p * w[i] * (tt[i] - prev));
        prev = tt[i];
      }
      return v;
    };
    bool ok = false;
    for (int sweep = 0; sweep < 400 && !ok; ++sweep) {
      double move = 0.0;
      for (int i = 0; i < L; ++i) {
        // Golden-section on the i-th coordinate.
        double lo = (i == 0 ? 4.0 * std::log(eps) : t[i - 1] + 4.0 * std::log(eps));
        double hi = (i == 0 ? 0.0 : t[i - 1]);
        lo = std::min(lo, t[i] - 1.0);
        hi = std::max(hi, t[i] + 1.0);
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double a = lo, b = hi;
        double c = b - gr * (b - a), d = a + gr * (b - a);
        auto slice = [&](double ti) {
          std::vector<double> tt = t;
          tt[i] = ti;
          return value(tt);
        };
        for (int it = 0; it < 200 && b - a > 1e-12 * (1.0 + std::abs(a)); ++it) {
          if (slice(c) < slice(d)) {
            b = d;
          } else {
            a = c;
          }
          c = b - gr * (b - a);
          d = a + gr * (b - a);
        }
        const double ti = 0.5 * (a + b);
        move = std::max(move, std::abs(ti - t[i]));
        t[i] = ti;
      }
      ok = move < 1e-11;
    }
    report.converged = report.converged && ok;
    report.eps.push_back(eps);
    report.minValue.push_back(value(t));
  }

  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < report.eps.size(); ++i) {
    lx.push_back(std::log(report.eps[i]));
    ly.push_back(std::log(report.minValue[i]));
  }
  report.slope = fitLine(lx, ly).slope;
  return report;
}

ScanResult scan(const std::function<ScanPoint(double)>& evaluate,
                const std::vector<double>& epsGrid) {
  ScanResult result;
  for (double eps : epsGrid) result.points.push_back(evaluate(eps));

  auto fitRange = [&](std::size_t lo, std::size_t hi) {
    std::vector<double> lx, ly;
    for (std::size_t i = lo; i < hi; ++i) {
      lx.push_back(std::log(result.points[i].eps));
      ly.push_back(std::log(result.points[i].total));
    }
    return fitLine(lx, ly);
  };

  LineFit fit = fitRange(0, result.points.size());
  if (fit.r2 < 0.99 && result.points.size() >= 5) {
    // Pre-asymptotic contamination at the extremes; drop them once and refit.
    fit = fitRange(1, result.points.size() - 1);
    result.refitted = true;
  }
  result.slope = fit.slope;
  result.intercept = fit.intercept;
  result.r2 = fit.r2;
  return result;
}

std::vector<double> logGrid(double lo, double hi, int points) {
  std::vector<double> out;
  for (int i = 0; i < points; ++i) {
    const double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
    out.push_back(std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo))));
  }
  return out;
}

}  // namespace staircase::scaling
