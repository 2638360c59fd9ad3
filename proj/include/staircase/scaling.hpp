#pragma once

#include <functional>
#include <string>
#include <vector>

#include "staircase/rational.hpp"
#include "staircase/wells.hpp"

namespace staircase::scaling {

enum class BoundaryCondition { Dirichlet, Periodic };

struct ExponentQuery {
  wells::LaminationSignature sig;
  int ell = 1;          // lamination order of the datum, 1 <= ell <= m
  Rational p{2};        // elastic exponent
  BoundaryCondition bc = BoundaryCondition::Dirichlet;
};

/// The predicted total-energy exponent:
///  Dirichlet: 2p / (2p + 2(l - k_l) + k_l)
///  Periodic:  2p / (2p + 2((l-1) - k_{l-1}) + k_{l-1})
Rational predictedExponent(const ExponentQuery& q);

/// Length-scale exponents r_i = eps^{e_i} balancing every term of the
/// multiscale energy, plus the resulting total exponent.
struct ScalingParams {
  std::vector<Rational> e;   // e_1..e_L (L = ell, or ell-1 for periodic)
  Rational total{0};
};

ScalingParams heuristicOptimize(const ExponentQuery& q);

/// Same optimization with the per-level direction counts assigned to the
/// scales in reverse order.
ScalingParams heuristicOptimizeReversed(const ExponentQuery& q);

/// True iff forward and reversed scale assignments give equal total exponents.
bool orderingEquivalence(const ExponentQuery& q);

/// Numerically minimize  eps/r_L + sum (r_i/r_{i-1})^{p w_i}  over positive
/// scales for each eps, then fit the log-log slope of the minimum.
struct BruteForceReport {
  std::vector<double> eps, minValue;
  double slope = 0;
  bool converged = false;
};

BruteForceReport bruteForceExponentCheck(const ExponentQuery& q, const std::vector<double>& epsGrid);

/// Empirical log-log slope fit of total energies produced by a constructor.
struct ScanPoint {
  double eps = 0;
  double total = 0;
  double elasticBulk = 0, elasticCutoff = 0, surface = 0;
  std::string params;
};

struct ScanResult {
  std::vector<ScanPoint> points;
  double slope = 0, intercept = 0, r2 = 0;
  bool refitted = false;  // extremes dropped once because R^2 < 0.99
};

ScanResult scan(const std::function<ScanPoint(double)>& evaluate, const std::vector<double>& epsGrid);

/// Log-spaced grid helper, inclusive of both endpoints.
std::vector<double> logGrid(double lo, double hi, int points);

}  // namespace staircase::scaling
