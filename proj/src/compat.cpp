#include "staircase/compat.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace staircase::compat {

namespace {

struct EigenSplit {
  Vec eigenvalues;   // ascending
  Mat vectors;       // columns
  std::vector<int> nonzero;  // indices of eigenvalues above threshold
};

EigenSplit decompose(const Mat& D) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(D);
  EigenSplit split;
  split.eigenvalues = solver.eigenvalues();
  split.vectors = solver.eigenvectors();
  const double thresh = 1e-10 * D.norm();
  for (int i = 0; i < split.eigenvalues.size(); ++i)
    if (std::abs(split.eigenvalues[i]) > thresh) split.nonzero.push_back(i);
  return split;
}

}  // namespace

CompatClass classify(const SymTensor& A, const SymTensor& B) {
  if (A.d() != B.d()) throw std::invalid_argument("classify: dimension mismatch");
  const Mat D = A.matrix() - B.matrix();
  if (D.norm() <= 1e-12) throw std::invalid_argument("classify: A and B coincide");

  const EigenSplit split = decompose(D);
  CompatClass out;
  out.eigenvalues = split.eigenvalues;

  if (split.nonzero.size() == 1) {
    out.kind = CompatKind::Degenerate;
    const int i = split.nonzero[0];
    const double lam = split.eigenvalues[i];
    const Vec v = split.vectors.col(i);
    out.a = std::sqrt(std::abs(lam)) * v;
    out.b = (lam >= 0 ? 1.0 : -1.0) * out.a;
    return out;
  }
  if (split.nonzero.size() == 2) {
    const double l1 = split.eigenvalues[split.nonzero[0]];
    const double l2 = split.eigenvalues[split.nonzero[1]];
    if (l1 * l2 < 0) {
      out.kind = CompatKind::NonDegenerate;
      // Arrange as (neg, pos) and use the closed form on the eigenbasis.
      const int iNeg = l1 < 0 ? split.nonzero[0] : split.nonzero[1];
      const int iPos = l1 < 0 ? split.nonzero[1] : split.nonzero[0];
      const double ln = split.eigenvalues[iNeg];
      const double lp = split.eigenvalues[iPos];
      const double root = std::sqrt(-ln * lp);
      Vec aLocal = Vec::Zero(A.d()), bLocal = Vec::Zero(A.d());
      aLocal[iNeg] = 1.0;
      aLocal[iPos] = root / ln;
      bLocal[iNeg] = ln;
      bLocal[iPos] = -root;
      out.a = split.vectors * aLocal;
      out.b = split.vectors * bLocal;
      return out;
    }
  }
  out.kind = CompatKind::Incompatible;
  return out;
}

std::pair<Vec, Vec> factorize(const SymTensor& A, const SymTensor& B) {
  const CompatClass c = classify(A, B);
  if (c.kind == CompatKind::Incompatible)
    throw std::invalid_argument("factorize: pair is incompatible");
  return {c.a, c.b};
}

std::vector<LaminateSegment> hullSegments(const wells::WellFamily& w) {
  std::vector<LaminateSegment> segments;
  for (int j = 1; j <= w.m(); ++j) {
    LaminateSegment seg;
    seg.order = j;
    seg.base = w.midpoint(j - 1);
    seg.direction = w.increment(j);
    seg.directionCount = w.sig.f[j - 1];

    // The open segment joins J_{j-1} to A_j; its midpoint must be compatible
    // with both generators.
    const SymTensor mid = seg.base + 0.5 * seg.direction;
    const SymTensor top = seg.base + seg.direction;
    if (classify(mid, seg.base).kind == CompatKind::Incompatible ||
        classify(mid, top).kind == CompatKind::Incompatible)
      throw std::logic_error("hullSegments: segment midpoint lost compatibility");
    segments.push_back(std::move(seg));
  }
  return segments;
}

StaircaseIdentity staircaseIdentity(const Vec& n, const Vec& nu, double s, int sign) {
  if (n.norm() == 0 || nu.norm() == 0)
    throw std::invalid_argument("staircaseIdentity: zero direction");
  if (s < -1.0 || s > 1.0) throw std::invalid_argument("staircaseIdentity: s outside [-1,1]");
  const double sg = sign >= 0 ? 1.0 : -1.0;
  const double sgInner = s >= 0 ? sg : -sg;
  const double root = std::sqrt(std::abs(s));

  StaircaseIdentity out;
  out.lhs = SymTensor(sg * SymTensor::symOuter(nu, nu).matrix() -
                      s * SymTensor::symOuter(sgInner * n, n).matrix());
  out.rhs = SymTensor(sg * SymTensor::symOuter(nu + root * n, nu - root * n).matrix());
  out.mismatch = (out.lhs.matrix() - out.rhs.matrix()).norm();
  return out;
}

}  // namespace staircase::compat
