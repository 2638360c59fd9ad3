#include <cmath>
#include <stdexcept>

#include "staircase/constructions.hpp"

namespace staircase::fields {

Field coordinateTransform(const Field& field, const Mat3& S) {
  if (std::abs(S.determinant()) < 1e-12)
    throw std::invalid_argument("coordinateTransform: singular matrix");
  const bool orthogonal = (S.transpose() * S - Mat3::Identity()).norm() < 1e-12;
  const Mat3 St = S.transpose();
  const Mat3 SinvT = S.inverse().transpose();

  Field out;
  out.dim = field.dim;
  out.name = field.name + "_transformed";

  // y = S^{-T} x maps the original domain onto the new one.
  switch (field.domain.kind) {
    case Domain::Kind::Box: {
      const Mat3 axisTest = SinvT - Mat3::Identity();
      if (axisTest.norm() < 1e-14) {
        out.domain = field.domain;
      } else {
        out.domain.kind = Domain::Kind::RotatedBox;
        out.domain.dim = field.dim;
        out.domain.rot = St;  // y inside iff S^T y in the box
        out.domain.lo = field.domain.lo;
        out.domain.hi = field.domain.hi;
        if (field.dim == 2) {
          out.domain.lo[2] = -0.5;
          out.domain.hi[2] = 0.5;
        }
      }
      break;
    }
    case Domain::Kind::RotatedBox: {
      out.domain = field.domain;
      out.domain.rot = field.domain.rot * St;
      break;
    }
    case Domain::Kind::Cylinder: {
      if (!orthogonal || (S - Mat3::Identity()).norm() > 1e-14)
        throw std::invalid_argument("coordinateTransform: cylinder domains support identity only");
      out.domain = field.domain;
      break;
    }
  }

  const Mat Sd = S.topLeftCorner(field.dim, field.dim);
  out.datum = Sd * field.datum * Sd.transpose();
  out.translation = S * field.translation;
  for (const auto& w : field.wells)
    out.wells.push_back(SymTensor(Sd * w.matrix() * Sd.transpose()));

  auto baseEval = field.eval;
  out.eval = [S, St, baseEval](const Vec3& y) {
    PointEval pe = baseEval(St * y);
    PointEval outPe;
    outPe.u = S * pe.u;
    outPe.grad = S * pe.grad * St;
    return outPe;
  };

  const double jacScale = 1.0 / std::abs(S.determinant());
  for (const auto& leaf : field.leaves) {
    LeafClass nl = leaf;
    auto toDomain = leaf.chart.toDomain;
    auto jac = leaf.chart.jacobian;
    nl.chart.toDomain = [SinvT, toDomain](const Vec3& q) -> Vec3 { return SinvT * toDomain(q); };
    nl.chart.jacobian = [jac, jacScale](const Vec3& q) { return jac(q) * jacScale; };
    out.leaves.push_back(std::move(nl));
  }

  if (orthogonal) {
    // Frobenius norms of jumps and Hessians are invariant under conjugation
    // by a rotation, and interface areas are preserved.
    out.jumps = field.jumps;
    if (field.hessNorm) {
      auto hess = field.hessNorm;
      out.hessNorm = [St, hess](const Vec3& y) { return hess(St * y); };
    }
  }
  return out;
}

}  // namespace staircase::fields
