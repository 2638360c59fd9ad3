#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "staircase/tensor.hpp"

namespace staircase::fields {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Displacement value and gradient at a point (rows/cols beyond `dim` are zero).
struct PointEval {
  Vec3 u = Vec3::Zero();
  Mat3 grad = Mat3::Zero();
};

inline Mat3 symPart(const Mat3& g) { return 0.5 * (g + g.transpose()); }

/// Domain of a field: an axis box, a cylinder (axis along x1), or a box seen
/// through a rotation (x lies inside iff rot*x lies in the box).
struct Domain {
  enum class Kind { Box, Cylinder, RotatedBox };
  Kind kind = Kind::Box;
  int dim = 2;
  Vec3 lo = Vec3::Zero(), hi = Vec3::Ones();  // box / bounding box of rot*x
  double radius = 1.0;                        // cylinder only
  Mat3 rot = Mat3::Identity();                // RotatedBox only

  bool contains(const Vec3& x, double tol = 1e-12) const;
  /// Deterministic quasi-uniform boundary point (index k of n).
  Vec3 boundaryPoint(std::size_t k, std::size_t n) const;
  /// Axis-aligned bounding box in ambient coordinates.
  void boundingBox(Vec3* lo, Vec3* hi) const;
  double volume() const;
};

/// A chart maps a local box onto a congruence class of subdomains; quadrature
/// runs in local coordinates against |det J| supplied by the chart.
struct Chart {
  std::function<Vec3(const Vec3&)> toDomain;      // local -> representative point
  std::function<double(const Vec3&)> jacobian;    // |det J| at local point
};

Chart affineChart(const Vec3& origin, const Mat3& axes);
Chart identityChart();

/// One congruence class of smooth leaves: a local box, a chart to the
/// representative copy, and the number of congruent copies.
struct LeafClass {
  Vec3 lo = Vec3::Zero(), hi = Vec3::Ones();
  Chart chart;
  double multiplicity = 1.0;
  bool cutoff = false;
  int quadratureBoost = 0;  // extra adaptive depth for kinked integrands
  std::string tag;
  /// Optional full-precision evaluation in chart coordinates; falls back to
  /// the field's global evaluator when empty.
  std::function<PointEval(const Vec3&)> localEval;
};

/// Sample of a gradient-jump interface: Frobenius norm of [grad u], the area
/// element (ds/dparam), and the projected wells on both sides when known.
struct JumpSample {
  double jumpNorm = 0.0;
  double weight = 1.0;
  int wellA = -1, wellB = -1;
};

/// One congruence class of jump interfaces, parameterized over [0,1]^pdim.
struct JumpClass {
  int pdim = 1;
  std::function<JumpSample(double, double)> sample;
  double multiplicity = 1.0;
  bool cutoff = false;
  std::string tag;
};

/// A displacement stored as closed-form evaluators plus the congruence-class
/// decomposition used for energy quadrature. Immutable once built.
struct Field {
  int dim = 2;
  Domain domain;
  Mat datum;                 // dim x dim matrix F
  Vec3 translation = Vec3::Zero();
  std::vector<SymTensor> wells;

  std::function<PointEval(const Vec3&)> eval;
  std::function<double(const Vec3&)> hessNorm;  // |grad^2 u|_F in leaf interiors; may be empty

  std::vector<LeafClass> leaves;
  std::vector<JumpClass> jumps;

  std::string name;

  PointEval operator()(const Vec3& x) const { return eval(x); }
  Mat3 strain(const Vec3& x) const { return symPart(eval(x).grad); }
  /// Supremum of |u(x) - F x - b| over n deterministic boundary samples.
  double boundaryTraceError(std::size_t n = 1000) const;
};

/// Quintic smoothstep: 0 below 0, 1 above 1, C^2 everywhere.
double smoothstep(double t);
double smoothstepD1(double t);
double smoothstepD2(double t);

}  // namespace staircase::fields
