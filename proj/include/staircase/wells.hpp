#pragma once

#include <optional>
#include <vector>

#include "staircase/polynomial.hpp"
#include "staircase/tensor.hpp"

namespace staircase::wells {

/// Number of lamination levels plus the per-level compatibility-direction count
/// f : {1..m} -> {1,2}. Stored zero-based: f[i-1] is the count at level i.
struct LaminationSignature {
  int m = 0;
  std::vector<int> f;
};

/// True iff f is admissible: total on {1..m}, values in {1,2}, and no two
/// consecutive levels both degenerate. Throws on malformed input.
bool validateSignature(const LaminationSignature& sig);

/// All admissible signatures for a given m (their count follows the Fibonacci
/// recurrence #S_m = #S_{m-1} + #S_{m-2}).
std::vector<LaminationSignature> enumerateSignatures(int m);

/// The compatibility space V_i attached to lamination level i: a genuine
/// subspace for a degenerate level (the span of all degenerate increments),
/// and a union of the two lines through M_i and its mirror otherwise.
struct CompatSpace {
  int level = 0;
  bool unionOfLines = false;
  std::vector<Vec> dirs;  // orthonormal basis (subspace) or two unit vectors (lines)

  double dist(const Vec& unitFreq) const;
};

/// The staircase well family K_m with all index and polynomial bookkeeping.
struct WellFamily {
  LaminationSignature sig;
  int d = 0;
  std::vector<Vec> wells;      // diagonal entries of A_0..A_m
  std::vector<Vec> increments; // M_1..M_m
  std::vector<Vec> mirrored;   // mirrored increments, equal to M_i when f(i)=1
  std::vector<Vec> midpoints;  // J_0..J_m
  std::vector<int> k;          // k_0..k_m, degenerate counts
  std::vector<int> l;          // effective indices l(1)..l(m), 1-based values
  std::vector<int> S1, S2;     // effective-index sets (1-based)
  std::vector<CompatSpace> V;  // V_1..V_m

  int m() const { return sig.m; }
  SymTensor well(int i) const { return SymTensor::diag(wells.at(i)); }
  SymTensor midpoint(int i) const { return SymTensor::diag(midpoints.at(i)); }
  SymTensor increment(int i) const { return SymTensor::diag(increments.at(i - 1)); }
  std::vector<SymTensor> wellSet() const {
    std::vector<SymTensor> out;
    for (const auto& w : wells) out.push_back(SymTensor::diag(w));
    return out;
  }
};

/// Construct K_m in dimension d = 2(m-k_m)+k_m (m>=2); m=1 yields the planar
/// two-well families in d=2. Rejects inadmissible signatures.
WellFamily buildWells(const LaminationSignature& sig);

struct IndexSets {
  std::vector<int> S1, S2;
  std::vector<int> l;  // l(1)..l(m)
  std::vector<int> k;  // k_0..k_m
};

IndexSets indexSets(const WellFamily& w);

/// The two polynomial identities tying the shifted phase components together:
///   chi~_{l(i)} = Q(sqrt5 chi~_{l(i-1)} + sqrt3 chi~_{l(i+1)})
///   chi~_{l(i)} = g(chi~_{l(i-1)}) - sum_{k>i} 2^{i-k} chi~_{l(k)}
/// valid on every well, after an affine reparameterization by the datum F.
struct PolyRelation {
  int level = 0;                 // i >= 2
  Poly Q;                        // shifted, degree <= 4
  Poly g;                        // shifted quadratic
  double qWeightPrev = 0.0;      // sqrt5 (or 1 at i=m)
  double qWeightNext = 0.0;      // sqrt3 (or 0 at i=m)
  std::vector<double> linearTail;  // 2^{i-k} for k=i+1..m
  Vec datum;                     // diagonal of F
};

/// Build the relation for level i (i >= 2; i = m uses Q = g = 4t(1-t)).
PolyRelation polyRelation(const WellFamily& w, int level, const SymTensor& F);

/// Max residual of both identities over all wells of the family.
double polyRelationResidual(const WellFamily& w, const PolyRelation& rel);

}  // namespace staircase::wells
