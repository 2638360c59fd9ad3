#pragma once

#include <optional>
#include <vector>

#include "staircase/tensor.hpp"
#include "staircase/wells.hpp"

namespace staircase::compat {

enum class CompatKind { Incompatible, Degenerate, NonDegenerate };

/// Symmetrized rank-one classification of a pair of symmetric matrices,
/// with factor vectors a, b such that sym(a b^T) reconstructs A - B.
struct CompatClass {
  CompatKind kind = CompatKind::Incompatible;
  Vec a, b;              // empty when incompatible
  Vec eigenvalues;       // eigenvalues of A - B, ascending
};

/// Eigenvalue trichotomy: exactly one nonzero eigenvalue -> degenerate;
/// exactly two with opposite signs -> non-degenerate; anything else is
/// incompatible. Eigenvalues with |lambda| <= 1e-10 ||A-B||_F count as zero.
CompatClass classify(const SymTensor& A, const SymTensor& B);

/// Explicit factor vectors (throws when the pair is incompatible).
std::pair<Vec, Vec> factorize(const SymTensor& A, const SymTensor& B);

/// One segment of the staircase lamination hull.
struct LaminateSegment {
  int order = 0;            // j, 1-based
  SymTensor base;           // J_{j-1}
  SymTensor direction;      // M_j; the open segment is base + alpha*direction
  int directionCount = 0;   // f(j)
};

/// Closed-form hull segments of a staircase family; midpoints are verified
/// compatible with both generating endpoints.
std::vector<LaminateSegment> hullSegments(const wells::WellFamily& w);

/// Both sides of the splitting identity
///   sign nu (.) nu - s (sign' n) (.) n = sign (nu + sqrt|s| n) (.) (nu - sqrt|s| n),
/// where sign' = sign for s >= 0 and -sign for s < 0.
struct StaircaseIdentity {
  SymTensor lhs, rhs;
  double mismatch = 0.0;
};

StaircaseIdentity staircaseIdentity(const Vec& n, const Vec& nu, double s, int sign = +1);

}  // namespace staircase::compat
