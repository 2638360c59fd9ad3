#pragma once

#include "staircase/fields.hpp"
#include "staircase/wells.hpp"

namespace staircase::fields {

/// Periodic simple laminate along lamination level `level` of the family,
/// volume fraction lambda, N periods across the unit cell. Mean strain is
/// J_{level-1} + lambda M_level; elastic energy vanishes.
Field simpleLaminate(const wells::WellFamily& w, int level, double lambda, int stripes);

enum class BranchMode { OneDirection, TwoDirections };

/// Geometry of a 2D branching construction on [0,L] x [0,H]: N coarse stripe
/// pairs at the midline, widths halving and heights contracting by theta per
/// generation toward both horizontal boundaries.
struct BranchPlan2D {
  double L = 1.0, H = 1.0;
  int N = 8;
  double theta = 0.46;
  double qstar = 3.0;      // component bounds stay uniform for q <= qstar
  int j0 = 0;              // deepest full generation
  BranchMode mode = BranchMode::TwoDirections;
  std::vector<double> ell;  // ell_j = L / (2^j N), j = 0..j0+1
  std::vector<double> y;    // y_j = H - (H/2) theta^j, j = 0..j0+2
  std::vector<double> h;    // h_j = y_{j+1} - y_j

  static BranchPlan2D make(double L, double H, int N, double p, BranchMode mode,
                           double theta = 0.46);
  int blocksInRow(int j) const { return N << j; }
};

/// Two-direction branching (straight interfaces, zero Dirichlet trace);
/// elastic ~ L^{p+1}/(N^p H^{p-1}), surface ~ H N.
Field branch2dTwoDir(const BranchPlan2D& plan, double p);

/// One-direction branching (curved interfaces, both displacement components
/// active); elastic ~ L^{2p+1}/(H^{2p-1} N^{2p}), surface ~ H N.
Field branch2dOneDir(const BranchPlan2D& plan, double p);

/// Parameters of the 3D constructions.
struct Construction3D {
  double L = 0.5, H1 = 0.5, H2 = 1.0;
  int N = 16;
  double theta = 0.46;
  double wellScale = 1.0;  // wells are +- wellScale * e1 (.) e1
};

/// Zero-trace competitor on [0,L]x[0,H1]x[0,H2] for the wells +-e1(.)e1, built
/// from the one-direction 2D construction on four wedge regions with smooth
/// cut-offs of width s = L/N. Requires N > 4 L/H1 and H2 > H1.
Field cuboid3d(const Construction3D& c, double p);

/// Zero-trace competitor on (0,1) x B_rho(0): the one-direction construction
/// rotated around the cylinder axis; no cut-off layer. Requires N > 4.
Field cylinder3d(int N, double p, double radius = 1.0, double theta = 0.46);

/// Parameters of the two-scale construction for the second-order datum.
struct NestedParams {
  double r1 = 0.1, r2 = 0.03;  // coarse and fine length scales
  double theta = 0.46;
  double phi = 0.48;           // inner stripe growth base, in (theta, 1/2)
  bool hatCoordinates = true;  // emit on the unit cube in rotated coordinates
};

/// Two nested branchings realizing the second-order datum diag(1/2,1/2,-1/2)
/// for the three-well family with f = (1,2): an outer two-direction branching
/// at scale r1 and inner cuboid corrections at scale r2 on the strips where
/// the outer strain sits at the level-1 midpoint. For p outside [1,3] the
/// construction is still emitted but cannot be optimal.
Field nestedSecondOrder(double eps, double p, const NestedParams& params);

/// Convenience: params from the optimality rules r1 = eps^{2/(2p+3)},
/// r2 = eps^{3/(2p+3)}.
NestedParams nestedParamsForEps(double eps, double p);

/// The rotation taking the f=(1,2) family to its cube-adapted frame.
Mat3 nestedRotation();

/// u_hat(y) = S u(S^T y) with conjugated wells and datum; energy equivalence
/// constants depend only on ||S||, ||S^-1||.
Field coordinateTransform(const Field& field, const Mat3& S);

}  // namespace staircase::fields
