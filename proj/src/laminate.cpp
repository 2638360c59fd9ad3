#include <cmath>
#include <stdexcept>

#include "staircase/compat.hpp"
#include "staircase/constructions.hpp"

namespace staircase::fields {

namespace {

/// Area of the section {x . n = c} of the unit box. The staircase normals
/// involve at most two axes with equal magnitudes, so the section is a
/// segment of the corresponding unit square times a unit extrusion.
double sectionArea(Vec3 n, double c, int dim) {
  int axes[2] = {-1, -1};
  int count = 0;
  for (int k = 0; k < dim; ++k)
    if (std::abs(n[k]) > 1e-14) {
      if (count < 2) axes[count] = k;
      ++count;
    }
  if (count == 1) return 1.0;
  if (count != 2) throw std::logic_error("laminate: unexpected interface normal");
  if (n[axes[0]] < 0) {
    n = -n;
    c = -c;
  }
  const double S = c * std::sqrt(2.0);
  const double t = n[axes[1]] < 0 ? S + 1.0 : S;
  if (t <= 0.0 || t >= 2.0) return 0.0;
  return std::sqrt(2.0) * std::min({t, 2.0 - t, 1.0});
}

}  // namespace

Field simpleLaminate(const wells::WellFamily& w, int level, double lambda, int stripes) {
  if (level < 1 || level > w.m()) throw std::invalid_argument("simpleLaminate: bad level");
  if (lambda <= 0.0 || lambda >= 1.0)
    throw std::invalid_argument("simpleLaminate: lambda must lie in (0,1)");
  if (stripes < 1) throw std::invalid_argument("simpleLaminate: stripes >= 1");
  if (w.d > 3)
    throw std::invalid_argument("simpleLaminate: field evaluation supports d <= 3 only");

  const int dim = w.d;
  const SymTensor base = w.midpoint(level - 1);
  const SymTensor top = base + w.increment(level);
  const auto [aRaw, bRaw] = compat::factorize(top, base);

  // sym(a b^T) = M_level; oscillate along n = b/|b| with amplitude a|b|.
  Vec3 n = Vec3::Zero(), amp = Vec3::Zero();
  const double bn = bRaw.norm();
  for (int k = 0; k < dim; ++k) {
    n[k] = bRaw[k] / bn;
    amp[k] = aRaw[k] * bn;
  }

  double tMin = 0.0, tMax = 0.0;
  for (int k = 0; k < dim; ++k) {
    tMin += std::min(0.0, n[k]);
    tMax += std::max(0.0, n[k]);
  }
  const double period = (tMax - tMin) / stripes;

  const Mat F = base.matrix() + lambda * (top.matrix() - base.matrix());
  Mat3 F3 = Mat3::Zero();
  F3.topLeftCorner(dim, dim) = F;

  auto profile = [=](double t) {
    // Integral of (stripe indicator - lambda); continuous, zero at period ends.
    const double rel = (t - tMin) / period;
    const double frac = rel - std::floor(rel);
    return period * (std::min(frac, lambda) - lambda * frac);
  };
  auto indicator = [=](double t) {
    const double rel = (t - tMin) / period;
    const double frac = rel - std::floor(rel);
    return frac < lambda ? 1.0 : 0.0;
  };

  Field field;
  field.dim = dim;
  field.domain.kind = Domain::Kind::Box;
  field.domain.dim = dim;
  field.domain.lo = Vec3::Zero();
  field.domain.hi = Vec3::Zero();
  for (int k = 0; k < dim; ++k) field.domain.hi[k] = 1.0;
  field.datum = F;
  field.wells = w.wellSet();
  field.name = "simple_laminate";

  field.eval = [=](const Vec3& x) {
    PointEval pe;
    const double t = n.dot(x);
    pe.u = F3 * x + profile(t) * amp;
    pe.grad = F3 + (indicator(t) - lambda) * amp * n.transpose();
    return pe;
  };
  field.hessNorm = [](const Vec3&) { return 0.0; };

  LeafClass leaf;
  leaf.lo = Vec3::Zero();
  leaf.hi = field.domain.hi;
  leaf.chart = identityChart();
  leaf.quadratureBoost = 2;
  field.leaves.push_back(leaf);

  // 2N interfaces per cell (periodic convention: the period-wrap plane counts
  // once). The upper phase attains A_level; the base projects to its nearest
  // well for perimeter bookkeeping.
  const int wellTop = level;
  const int wellBase = nearestWell(base.matrix(), w.wellSet());
  const double jumpNorm = amp.norm();
  for (int j = 0; j < stripes; ++j)
    for (int side = 0; side < 2; ++side) {
      const double offset = tMin + (j + side * lambda) * period;
      const double area = sectionArea(n, offset, dim);
      JumpClass jump;
      jump.pdim = 1;
      jump.multiplicity = 1.0;
      jump.tag = "laminate_interface";
      const int wa = side ? wellTop : wellBase;
      const int wb = side ? wellBase : wellTop;
      jump.sample = [=](double, double) {
        JumpSample s;
        s.jumpNorm = jumpNorm;
        s.weight = area;
        s.wellA = wa;
        s.wellB = wb;
        return s;
      };
      field.jumps.push_back(jump);
    }
  return field;
}

}  // namespace staircase::fields
