#pragma once

#include <functional>
#include <vector>

#include "staircase/constructions.hpp"

namespace staircase::fields::detail {

/// Planar displacement value with named gradient entries.
struct Eval2 {
  double u1 = 0, u2 = 0;
  double g11 = 0, g12 = 0, g21 = 0, g22 = 0;  // g_ij = du_i/dx_j
};

/// Jump of the planar gradient across an interface point, with arclength
/// element and the projected wells on the two sides.
struct Jump2 {
  double d11 = 0, d12 = 0, d21 = 0, d22 = 0;
  double x1 = 0, x2 = 0;
  double ds = 0;  // arclength element per unit parameter
  int wellA = -1, wellB = -1;
};

/// One congruence class of smooth 2D leaves in local coordinates q in [0,1]^2.
struct Leaf2 {
  std::function<void(double, double, double*, double*)> position;  // q -> (x1,x2)
  std::function<double(double, double)> jacobian;
  std::function<Eval2(double, double)> eval;  // full-precision local evaluation
  double multiplicity = 1;
  bool cutoff = false;
};

struct Jump2Class {
  std::function<Jump2(double)> sample;  // parameter in [0,1]
  double multiplicity = 1;
  bool cutoff = false;
};

/// Shared geometry + evaluators of the two branching constructions on
/// [0,L]x[0,H]: generations refine from the midline toward both horizontal
/// boundaries, a linear blend fills the residual strips.
class Branch2D {
 public:
  Branch2D(const BranchPlan2D& plan, double p);

  const BranchPlan2D& plan() const { return plan_; }

  /// Global evaluation with midline mirror and blend strips.
  Eval2 eval(double x1, double x2) const;
  /// Frobenius norm of the second gradient in leaf interiors.
  double hessNorm(double x1, double x2) const;

  void collectLeaves(std::vector<Leaf2>* out) const;
  void collectJumps(std::vector<Jump2Class>* out) const;

  /// Well values of sym(grad u) as planar matrices (index 0/1).
  void wellMatrices(Mat* a, Mat* b) const;

 private:
  // Upper-half evaluation at height y in [H/2, H], before mirroring.
  Eval2 evalUpper(double x1, double y) const;
  Eval2 evalRow(int j, double xiLocal, double t) const;     // block-local
  Eval2 evalStrip(double x1) const;                         // frozen profile at the blend base
  double stripLambda(double y) const;

  BranchPlan2D plan_;
  bool oneDir_ = false;
  double Y_ = 0;  // base height of the blend strip
};

}  // namespace staircase::fields::detail
