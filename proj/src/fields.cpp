#include "staircase/fields.hpp"

#include <cmath>
#include <stdexcept>

namespace staircase::fields {

bool Domain::contains(const Vec3& x, double tol) const {
  switch (kind) {
    case Kind::Box: {
      for (int k = 0; k < dim; ++k)
        if (x[k] < lo[k] - tol || x[k] > hi[k] + tol) return false;
      return true;
    }
    case Kind::Cylinder: {
      if (x[0] < lo[0] - tol || x[0] > hi[0] + tol) return false;
      return std::hypot(x[1], x[2]) <= radius + tol;
    }
    case Kind::RotatedBox: {
      const Vec3 y = rot * x;
      for (int k = 0; k < 3; ++k)
        if (y[k] < lo[k] - tol || y[k] > hi[k] + tol) return false;
      return true;
    }
  }
  return false;
}

namespace {

// Low-discrepancy points in [0,1]^2 (generalized golden-ratio lattice).
inline void r2Sequence(std::size_t k, double* a, double* b) {
  constexpr double g = 1.32471795724474602596;  // plastic number
  const double a1 = 1.0 / g, a2 = 1.0 / (g * g);
  *a = std::fmod(0.5 + a1 * static_cast<double>(k + 1), 1.0);
  *b = std::fmod(0.5 + a2 * static_cast<double>(k + 1), 1.0);
}

}  // namespace

Vec3 Domain::boundaryPoint(std::size_t k, std::size_t n) const {
  double s, t;
  r2Sequence(k, &s, &t);
  switch (kind) {
    case Kind::Box: {
      const std::size_t faces = 2 * static_cast<std::size_t>(dim);
      const std::size_t face = k % faces;
      const int axis = static_cast<int>(face / 2);
      Vec3 x = Vec3::Zero();
      for (int d2 = 0; d2 < dim; ++d2) x[d2] = lo[d2] + (hi[d2] - lo[d2]) * (d2 % 2 ? s : t);
      x[axis] = (face % 2) ? hi[axis] : lo[axis];
      // dim==2 needs exactly one free coordinate on the edge.
      if (dim == 2) {
        const int other = 1 - axis;
        x[other] = lo[other] + (hi[other] - lo[other]) * s;
        x[2] = 0.0;
      }
      return x;
    }
    case Kind::Cylinder: {
      // Alternate mantle / caps proportional to n.
      const std::size_t face = k % 3;
      if (face == 0) {
        const double phi = 2.0 * M_PI * s;
        return Vec3(lo[0] + (hi[0] - lo[0]) * t, radius * std::cos(phi), radius * std::sin(phi));
      }
      const double phi = 2.0 * M_PI * s;
      const double r = radius * std::sqrt(t);
      return Vec3(face == 1 ? lo[0] : hi[0], r * std::cos(phi), r * std::sin(phi));
    }
    case Kind::RotatedBox: {
      Domain box;
      box.kind = Kind::Box;
      box.dim = 3;
      box.lo = lo;
      box.hi = hi;
      return rot.inverse() * box.boundaryPoint(k, n);
    }
  }
  return Vec3::Zero();
}

void Domain::boundingBox(Vec3* outLo, Vec3* outHi) const {
  switch (kind) {
    case Kind::Box:
      *outLo = lo;
      *outHi = hi;
      return;
    case Kind::Cylinder:
      *outLo = Vec3(lo[0], -radius, -radius);
      *outHi = Vec3(hi[0], radius, radius);
      return;
    case Kind::RotatedBox: {
      Vec3 mn = Vec3::Constant(std::numeric_limits<double>::infinity());
      Vec3 mx = -mn;
      const Mat3 inv = rot.inverse();
      for (int corner = 0; corner < 8; ++corner) {
        Vec3 y;
        for (int k = 0; k < 3; ++k) y[k] = (corner >> k) & 1 ? hi[k] : lo[k];
        const Vec3 x = inv * y;
        mn = mn.cwiseMin(x);
        mx = mx.cwiseMax(x);
      }
      *outLo = mn;
      *outHi = mx;
      return;
    }
  }
}

double Domain::volume() const {
  switch (kind) {
    case Kind::Box: {
      double v = 1.0;
      for (int k = 0; k < dim; ++k) v *= hi[k] - lo[k];
      return v;
    }
    case Kind::Cylinder:
      return (hi[0] - lo[0]) * M_PI * radius * radius;
    case Kind::RotatedBox:
      return (hi - lo).prod() / std::abs(rot.determinant());
  }
  return 0.0;
}

Chart affineChart(const Vec3& origin, const Mat3& axes) {
  const double det = std::abs(axes.determinant());
  return Chart{[origin, axes](const Vec3& q) -> Vec3 { return origin + axes * q; },
               [det](const Vec3&) { return det; }};
}

Chart identityChart() {
  return Chart{[](const Vec3& q) { return q; }, [](const Vec3&) { return 1.0; }};
}

double Field::boundaryTraceError(std::size_t n) const {
  double worst = 0.0;
  Mat3 F3 = Mat3::Zero();
  F3.topLeftCorner(dim, dim) = datum;
  for (std::size_t k = 0; k < n; ++k) {
    const Vec3 x = domain.boundaryPoint(k, n);
    const PointEval pe = eval(x);
    worst = std::max(worst, (pe.u - (F3 * x + translation)).norm());
  }
  return worst;
}

double smoothstep(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

double smoothstepD1(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  return 30.0 * t * t * (1.0 - t) * (1.0 - t);
}

double smoothstepD2(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  return 60.0 * t * (1.0 - t) * (1.0 - 2.0 * t);
}

}  // namespace staircase::fields
