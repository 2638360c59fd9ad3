#pragma once

#include <vector>

#include "staircase/fields.hpp"
#include "staircase/quadrature.hpp"
#include "staircase/tensor.hpp"

namespace staircase::energy {

using fields::Field;
using fields::Vec3;

enum class SurfaceMode { HessianTV, PhasePerimeter };

struct EnergyBreakdown {
  double p = 2.0;
  double eps = 0.0;
  double elasticBulk = 0.0;
  double elasticCutoff = 0.0;
  double surface = 0.0;
  double total = 0.0;
  double quadratureError = 0.0;
  SurfaceMode surfaceMode = SurfaceMode::HessianTV;

  double elastic() const { return elasticBulk + elasticCutoff; }
};

struct ElasticResult {
  double bulk = 0.0, cutoff = 0.0, errorEstimate = 0.0;
};

/// Per-leaf adaptive Gauss quadrature of dist^p(sym grad u, K), cut-off leaves
/// reported separately; congruence-class multiplicities applied.
ElasticResult elasticEnergy(const Field& field, const std::vector<SymTensor>& wells, double p,
                            const QuadratureSettings& settings = {});

/// Hessian total variation: sum of |[grad u]| over interface classes plus the
/// smooth |grad^2 u| integral; or the per-phase perimeter weighted by the
/// indicator count (each interface bounds two phases).
double surfaceEnergy(const Field& field, SurfaceMode mode = SurfaceMode::HessianTV,
                     const QuadratureSettings& settings = {});

/// Nearest-well index per evaluation cell, ties broken toward the lowest index.
/// Cells outside the field's domain see the affine extension F x + b.
struct PhaseIndicator {
  int dim = 2;
  int n = 0;                  // cells per axis
  Vec3 lo, hi;                // sampling box
  std::vector<int> cell;      // row-major, axis 0 slowest
  int wellCount = 0;

  int at(const std::vector<int>& idx) const;
  double cellVolume() const;
};

PhaseIndicator projectPhase(const Field& field, const std::vector<SymTensor>& wells, int gridN);
PhaseIndicator projectPhase(const Field& field, const std::vector<SymTensor>& wells, int gridN,
                            const Vec3& lo, const Vec3& hi);

/// eps-weighted total of the above.
EnergyBreakdown totalEnergy(const Field& field, const std::vector<SymTensor>& wells, double p,
                            double eps, SurfaceMode mode = SurfaceMode::HessianTV,
                            const QuadratureSettings& settings = {});

/// Quadrature of an arbitrary pointwise functional over the leaf classes
/// (used by oracles and component-bound checks).
double integrateOverLeaves(const Field& field,
                           const std::function<double(const Vec3&, const fields::PointEval&)>& f,
                           const QuadratureSettings& settings = {}, bool cutoffOnly = false,
                           bool bulkOnly = false);

/// L2 elastic energy of the field against a fixed cellwise-constant phase:
/// integral of |sym grad u - chi|^2 assembled as
///   integral |sym grad u|^2  -  2 sum_c chi_c : I_c  +  sum_c |chi_c|^2 vol_c
/// with I_c = cell means of sym grad u computed from boundary integrals of u.
double l2EnergyAgainstPhase(const Field& field, const std::vector<SymTensor>& wells,
                            const PhaseIndicator& phase, const QuadratureSettings& settings = {});

}  // namespace staircase::energy
