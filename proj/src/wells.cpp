#include "staircase/wells.hpp"

#include <cmath>
#include <stdexcept>

namespace staircase::wells {

bool validateSignature(const LaminationSignature& sig) {
  if (sig.m < 1 || static_cast<int>(sig.f.size()) != sig.m)
    throw std::invalid_argument("signature: f must be defined on {1..m}");
  for (int v : sig.f)
    if (v != 1 && v != 2) throw std::invalid_argument("signature: values must be 1 or 2");
  for (int i = 0; i + 1 < sig.m; ++i)
    if (sig.f[i] == 1 && sig.f[i + 1] == 1) return false;
  return true;
}

std::vector<LaminationSignature> enumerateSignatures(int m) {
  std::vector<LaminationSignature> out;
  std::vector<int> f(m, 1);
  const int total = 1 << m;
  for (int mask = 0; mask < total; ++mask) {
    for (int i = 0; i < m; ++i) f[i] = (mask >> i) & 1 ? 2 : 1;
    LaminationSignature sig{m, f};
    if (validateSignature(sig)) out.push_back(sig);
  }
  return out;
}

double CompatSpace::dist(const Vec& unitFreq) const {
  if (unionOfLines) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& dir : dirs) {
      const double along = unitFreq.dot(dir);
      const double d2 = std::max(0.0, unitFreq.squaredNorm() - along * along);
      best = std::min(best, std::sqrt(d2));
    }
    return best;
  }
  Vec res = unitFreq;
  for (const auto& dir : dirs) res -= unitFreq.dot(dir) * dir;
  return res.norm();
}

namespace {

CompatSpace makeCompatSpace(int level, const LaminationSignature& sig,
                            const std::vector<Vec>& increments, const std::vector<Vec>& mirrored) {
  CompatSpace space;
  space.level = level;
  if (sig.f[level - 1] == 2) {
    space.unionOfLines = true;
    space.dirs.push_back(increments[level - 1].normalized());
    space.dirs.push_back(mirrored[level - 1].normalized());
  } else {
    space.unionOfLines = false;
    // Span of all degenerate increments; these are distinct unit coordinate
    // vectors, so they are already orthonormal.
    for (int j = 1; j <= sig.m; ++j)
      if (sig.f[j - 1] == 1) space.dirs.push_back(increments[j - 1].normalized());
  }
  return space;
}

}  // namespace

WellFamily buildWells(const LaminationSignature& sig) {
  if (!validateSignature(sig)) throw std::invalid_argument("buildWells: signature not in S_m");

  WellFamily w;
  w.sig = sig;
  const int m = sig.m;

  w.k.assign(m + 1, 0);
  for (int r = 1; r <= m; ++r) w.k[r] = w.k[r - 1] + (sig.f[r - 1] == 1 ? 1 : 0);

  w.l.assign(m, 0);
  int acc = 1;
  for (int i = 1; i <= m; ++i) {
    w.l[i - 1] = acc;
    acc += sig.f[i - 1];
  }

  w.d = (m == 1) ? 2 : 2 * (m - w.k[m]) + w.k[m];

  for (int i = 1; i <= m; ++i) {
    Vec M = Vec::Zero(w.d);
    Vec Mt = Vec::Zero(w.d);
    const int li = w.l[i - 1];  // 1-based
    M[li - 1] = 1.0;
    Mt[li - 1] = 1.0;
    if (sig.f[i - 1] == 2) {
      M[li] = -1.0;
      Mt[li] = 1.0;
    }
    w.increments.push_back(M);
    w.mirrored.push_back(Mt);
  }

  w.midpoints.assign(m + 1, Vec::Zero(w.d));
  for (int i = 1; i <= m; ++i) w.midpoints[i] = w.midpoints[i - 1] + 0.5 * w.increments[i - 1];

  w.wells.assign(m + 1, Vec::Zero(w.d));
  for (int i = 1; i <= m; ++i) w.wells[i] = w.midpoints[i - 1] + w.increments[i - 1];

  for (int i = 1; i <= m; ++i) {
    if (sig.f[i - 1] == 1)
      w.S1.push_back(w.l[i - 1]);
    else
      w.S2.push_back(w.l[i - 1]);
    w.V.push_back(makeCompatSpace(i, sig, w.increments, w.mirrored));
  }
  return w;
}

IndexSets indexSets(const WellFamily& w) { return IndexSets{w.S1, w.S2, w.l, w.k}; }

namespace {

double chiAt(const WellFamily& w, const Vec& wellDiag, int level) {
  // Diagonal entry at the effective index of `level`; levels beyond m read 0.
  if (level > w.m()) return 0.0;
  return wellDiag[w.l[level - 1] - 1];
}

}  // namespace

PolyRelation polyRelation(const WellFamily& w, int level, const SymTensor& F) {
  const int m = w.m();
  if (level < 2 || level > m)
    throw std::invalid_argument("polyRelation: level must satisfy 2 <= i <= m");
  if (!F.isDiagonal()) throw std::invalid_argument("polyRelation: datum must be diagonal");
  Vec Fd = F.matrix().diagonal();
  if (Fd.size() != w.d) throw std::invalid_argument("polyRelation: datum dimension mismatch");

  PolyRelation rel;
  rel.level = level;
  rel.datum = Fd;
  for (int k = level + 1; k <= m; ++k) rel.linearTail.push_back(std::pow(2.0, level - k));

  const double fPrev = Fd[w.l[level - 2] - 1];
  const double fHere = Fd[w.l[level - 1] - 1];
  const double fNext = (level + 1 <= m) ? Fd[w.l[level] - 1] : 0.0;

  const Poly gBase{0.0, 4.0, -4.0};  // 4t(1-t)
  double tailDatum = 0.0;
  for (int k = level + 1; k <= m; ++k)
    tailDatum += std::pow(2.0, level - k) * Fd[w.l[k - 1] - 1];
  // chi~ = g(chi~prev + Fprev) - Fhere - tailDatum - sum c_k chi~_k
  Poly gShift = polyShift(gBase, fPrev);
  gShift[0] -= fHere + tailDatum;
  rel.g = gShift;

  if (level == m) {
    rel.qWeightPrev = 1.0;
    rel.qWeightNext = 0.0;
    // Same quadratic, argument is chi~prev alone.
    Poly qShift = polyShift(gBase, fPrev);
    qShift[0] -= fHere;
    rel.Q = qShift;
  } else {
    rel.qWeightPrev = std::sqrt(5.0);
    rel.qWeightNext = std::sqrt(3.0);
    const double s5 = std::sqrt(5.0), s3 = std::sqrt(3.0);
    const std::vector<double> nodes{0.0, s5, s5 / 2.0, s5 / 2.0 + s3, s5 / 2.0 + s3 / 2.0};
    const std::vector<double> values{0.0, 0.0, 1.0, 0.5, 0.5};
    Poly qBase = lagrangeInterpolate(nodes, values);
    Poly qShifted = polyShift(qBase, rel.qWeightPrev * fPrev + rel.qWeightNext * fNext);
    qShifted[0] -= fHere;
    rel.Q = qShifted;
  }
  return rel;
}

double polyRelationResidual(const WellFamily& w, const PolyRelation& rel) {
  const int m = w.m();
  const int i = rel.level;
  double worst = 0.0;
  for (const auto& well : w.wells) {
    const double here = chiAt(w, well, i) - rel.datum[w.l[i - 1] - 1];
    const double prev = chiAt(w, well, i - 1) - rel.datum[w.l[i - 2] - 1];
    double next = 0.0;
    if (i + 1 <= m) next = chiAt(w, well, i + 1) - rel.datum[w.l[i] - 1];

    const double qArg = rel.qWeightPrev * prev + rel.qWeightNext * next;
    worst = std::max(worst, std::abs(here - polyEval(rel.Q, qArg)));

    double tail = 0.0;
    for (int k = i + 1; k <= m; ++k)
      tail += rel.linearTail[k - i - 1] * (chiAt(w, well, k) - rel.datum[w.l[k - 1] - 1]);
    worst = std::max(worst, std::abs(here - (polyEval(rel.g, prev) - tail)));
  }
  return worst;
}

}  // namespace staircase::wells
