#include "staircase/energy.hpp"

#include <cmath>
#include <stdexcept>

namespace staircase::energy {

namespace {

using fields::Chart;
using fields::LeafClass;
using fields::Mat3;
using fields::PointEval;

std::vector<Mat3> toFixed(const std::vector<SymTensor>& wells, int dim) {
  std::vector<Mat3> out;
  for (const auto& w : wells) {
    if (w.d() != dim) throw std::invalid_argument("energy: well dimension mismatch");
    Mat3 m = Mat3::Zero();
    m.topLeftCorner(dim, dim) = w.matrix();
    out.push_back(m);
  }
  return out;
}

double distP(const Mat3& strain, const std::vector<Mat3>& wells, double p) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& w : wells) best = std::min(best, (strain - w).norm());
  return std::pow(best, p);
}

QuadratureResult quadLeaf(const Field& field, const LeafClass& leaf,
                          const std::function<double(const Vec3&, const PointEval&)>& f,
                          const QuadratureSettings& base) {
  QuadratureSettings s = base;
  s.maxDepth += leaf.quadratureBoost;
  auto integrand = [&](const std::array<double, 3>& q) {
    const Vec3 local(q[0], q[1], q[2]);
    const Vec3 x = leaf.chart.toDomain(local);
    const PointEval pe = leaf.localEval ? leaf.localEval(local) : field.eval(x);
    return f(x, pe) * leaf.chart.jacobian(local);
  };
  if (field.dim == 2) {
    auto f2 = [&](const std::array<double, 2>& q) {
      return integrand({q[0], q[1], 0.5 * (leaf.lo[2] + leaf.hi[2])});
    };
    return integrateBox<2>(f2, {leaf.lo[0], leaf.lo[1]}, {leaf.hi[0], leaf.hi[1]}, s);
  }
  return integrateBox<3>(integrand, {leaf.lo[0], leaf.lo[1], leaf.lo[2]},
                         {leaf.hi[0], leaf.hi[1], leaf.hi[2]}, s);
}

}  // namespace

ElasticResult elasticEnergy(const Field& field, const std::vector<SymTensor>& wells, double p,
                            const QuadratureSettings& settings) {
  if (p < 1.0) throw std::invalid_argument("elasticEnergy: p >= 1 required");
  const std::vector<Mat3> fixed = toFixed(wells, field.dim);
  auto density = [&](const Vec3&, const PointEval& pe) {
    return distP(fields::symPart(pe.grad), fixed, p);
  };
  ElasticResult out;
  for (const auto& leaf : field.leaves) {
    const QuadratureResult q = quadLeaf(field, leaf, density, settings);
    (leaf.cutoff ? out.cutoff : out.bulk) += leaf.multiplicity * q.value;
    out.errorEstimate += leaf.multiplicity * q.errorEstimate;
  }
  return out;
}

double surfaceEnergy(const Field& field, SurfaceMode mode, const QuadratureSettings& settings) {
  double total = 0.0;
  const GaussRule& g = gaussRule(settings.order);

  for (const auto& jump : field.jumps) {
    double sum = 0.0;
    if (jump.pdim == 1) {
      for (int i = 0; i < settings.order; ++i) {
        const fields::JumpSample s = jump.sample(g.x[i], 0.0);
        const double weightVal = mode == SurfaceMode::HessianTV
                                     ? s.jumpNorm
                                     : (s.wellA >= 0 && s.wellA != s.wellB ? 2.0 : 0.0);
        sum += g.w[i] * weightVal * s.weight;
      }
    } else {
      for (int i = 0; i < settings.order; ++i)
        for (int j = 0; j < settings.order; ++j) {
          const fields::JumpSample s = jump.sample(g.x[i], g.x[j]);
          const double weightVal = mode == SurfaceMode::HessianTV
                                       ? s.jumpNorm
                                       : (s.wellA >= 0 && s.wellA != s.wellB ? 2.0 : 0.0);
          sum += g.w[i] * g.w[j] * weightVal * s.weight;
        }
    }
    total += jump.multiplicity * sum;
  }

  if (mode == SurfaceMode::HessianTV && field.hessNorm) {
    auto density = [&](const Vec3& x, const PointEval&) { return field.hessNorm(x); };
    for (const auto& leaf : field.leaves)
      total += leaf.multiplicity * quadLeaf(field, leaf, density, settings).value;
  }
  return total;
}

int PhaseIndicator::at(const std::vector<int>& idx) const {
  std::size_t flat = 0;
  for (int k = 0; k < dim; ++k) flat = flat * n + idx[k];
  return cell[flat];
}

double PhaseIndicator::cellVolume() const {
  double v = 1.0;
  for (int k = 0; k < dim; ++k) v *= (hi[k] - lo[k]) / n;
  return v;
}

PhaseIndicator projectPhase(const Field& field, const std::vector<SymTensor>& wells, int gridN) {
  Vec3 lo, hi;
  field.domain.boundingBox(&lo, &hi);
  return projectPhase(field, wells, gridN, lo, hi);
}

PhaseIndicator projectPhase(const Field& field, const std::vector<SymTensor>& wells, int gridN,
                            const Vec3& lo, const Vec3& hi) {
  if (gridN <= 0 || (gridN & (gridN - 1)) != 0)
    throw std::invalid_argument("projectPhase: grid must be a power of two");
  const std::vector<Mat3> fixed = toFixed(wells, field.dim);

  PhaseIndicator phase;
  phase.dim = field.dim;
  phase.n = gridN;
  phase.lo = lo;
  phase.hi = hi;
  phase.wellCount = static_cast<int>(wells.size());
  std::size_t totalCells = 1;
  for (int k = 0; k < field.dim; ++k) totalCells *= static_cast<std::size_t>(gridN);
  phase.cell.resize(totalCells);

  std::vector<int> idx(field.dim, 0);
  for (std::size_t flat = 0; flat < totalCells; ++flat) {
    Vec3 x = Vec3::Zero();
    for (int k = 0; k < field.dim; ++k)
      x[k] = lo[k] + (hi[k] - lo[k]) * (idx[k] + 0.5) / gridN;
    const Mat3 strain = fields::symPart(field.eval(x).grad);
    double best = std::numeric_limits<double>::infinity();
    int arg = 0;
    for (int w = 0; w < static_cast<int>(fixed.size()); ++w) {
      const double dist = (strain - fixed[w]).norm();
      if (dist < best * (1.0 - 1e-12) - 1e-15) {
        best = dist;
        arg = w;
      }
    }
    phase.cell[flat] = arg;
    for (int k = field.dim - 1; k >= 0; --k) {
      if (++idx[k] < gridN) break;
      idx[k] = 0;
    }
  }
  return phase;
}

EnergyBreakdown totalEnergy(const Field& field, const std::vector<SymTensor>& wells, double p,
                            double eps, SurfaceMode mode, const QuadratureSettings& settings) {
  if (eps <= 0) throw std::invalid_argument("totalEnergy: eps > 0 required");
  EnergyBreakdown out;
  out.p = p;
  out.eps = eps;
  out.surfaceMode = mode;
  const ElasticResult el = elasticEnergy(field, wells, p, settings);
  out.elasticBulk = el.bulk;
  out.elasticCutoff = el.cutoff;
  out.quadratureError = el.errorEstimate;
  out.surface = surfaceEnergy(field, mode, settings);
  out.total = out.elasticBulk + out.elasticCutoff + eps * out.surface;
  return out;
}

double integrateOverLeaves(const Field& field,
                           const std::function<double(const Vec3&, const fields::PointEval&)>& f,
                           const QuadratureSettings& settings, bool cutoffOnly, bool bulkOnly) {
  double total = 0.0;
  for (const auto& leaf : field.leaves) {
    if (cutoffOnly && !leaf.cutoff) continue;
    if (bulkOnly && leaf.cutoff) continue;
    total += leaf.multiplicity * quadLeaf(field, leaf, f, settings).value;
  }
  return total;
}

double l2EnergyAgainstPhase(const Field& field, const std::vector<SymTensor>& wells,
                            const PhaseIndicator& phase, const QuadratureSettings& settings) {
  const std::vector<Mat3> fixed = toFixed(wells, field.dim);
  const int dim = field.dim;
  const int n = phase.n;

  // integral |sym grad u|^2 over the sampling box: leaf classes cover the
  // domain; outside it the extension is affine with strain F.
  auto density = [&](const Vec3&, const PointEval& pe) {
    return fields::symPart(pe.grad).squaredNorm();
  };
  double strainSq = integrateOverLeaves(field, density, settings);
  Mat3 F3 = Mat3::Zero();
  F3.topLeftCorner(dim, dim) = field.datum;
  const Mat3 Fsym = fields::symPart(F3);
  double boxVol = 1.0;
  for (int k = 0; k < dim; ++k) boxVol *= phase.hi[k] - phase.lo[k];
  strainSq += Fsym.squaredNorm() * std::max(0.0, boxVol - field.domain.volume());

  // Cell means of sym grad u from boundary integrals of the (continuous) u:
  // integral_cell du_i/dx_j = integral_{faces} u_i n_j.
  const GaussRule& g = gaussRule(12);
  const double cellVol = phase.cellVolume();
  std::vector<double> step(dim);
  for (int k = 0; k < dim; ++k) step[k] = (phase.hi[k] - phase.lo[k]) / n;

  double cross = 0.0, chiSq = 0.0;
  std::vector<int> idx(dim, 0);
  std::size_t totalCells = phase.cell.size();
  for (std::size_t flat = 0; flat < totalCells; ++flat) {
    Vec3 cLo = Vec3::Zero();
    for (int k = 0; k < dim; ++k) cLo[k] = phase.lo[k] + step[k] * idx[k];
    Mat3 meanGrad = Mat3::Zero();
    for (int axis = 0; axis < dim; ++axis) {
      const double faceArea = cellVol / step[axis];
      for (int side = 0; side < 2; ++side) {
        const double sign = side ? 1.0 : -1.0;
        // Quadrature over the face.
        if (dim == 2) {
          const int tAxis = 1 - axis;
          for (int i = 0; i < 12; ++i) {
            Vec3 x = cLo;
            x[axis] += side * step[axis];
            x[tAxis] += g.x[i] * step[tAxis];
            const Vec3 u = field.eval(x).u;
            for (int comp = 0; comp < dim; ++comp)
              meanGrad(comp, axis) += sign * g.w[i] * faceArea * u[comp];
          }
        } else {
          const int t1 = (axis + 1) % 3, t2 = (axis + 2) % 3;
          for (int i = 0; i < 12; ++i)
            for (int j = 0; j < 12; ++j) {
              Vec3 x = cLo;
              x[axis] += side * step[axis];
              x[t1] += g.x[i] * step[t1];
              x[t2] += g.x[j] * step[t2];
              const Vec3 u = field.eval(x).u;
              for (int comp = 0; comp < 3; ++comp)
                meanGrad(comp, axis) += sign * g.w[i] * g.w[j] * faceArea * u[comp];
            }
        }
      }
    }
    const Mat3& chi = fixed[phase.cell[flat]];
    cross += (fields::symPart(meanGrad).cwiseProduct(chi)).sum();
    chiSq += chi.squaredNorm() * cellVol;
    for (int k = dim - 1; k >= 0; --k) {
      if (++idx[k] < n) break;
      idx[k] = 0;
    }
  }
  return strainSq - 2.0 * cross + chiSq;
}

}  // namespace staircase::energy
