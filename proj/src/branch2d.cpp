#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "staircase/detail/branch2d_core.hpp"

namespace staircase::fields {

BranchPlan2D BranchPlan2D::make(double L, double H, int N, double p, BranchMode mode,
                                double theta) {
  if (N <= 4.0 * L / H)
    throw std::invalid_argument("branch2d: requires N > 4L/H");
  const double qstar = p + 1.0;
  const double thetaMin = std::pow(2.0, -2.0 * qstar / (2.0 * qstar - 1.0));
  if (theta <= thetaMin || theta >= 0.5)
    throw std::invalid_argument("branch2d: theta outside (2^{-2q*/(2q*-1)}, 1/2)");

  BranchPlan2D plan;
  plan.L = L;
  plan.H = H;
  plan.N = N;
  plan.theta = theta;
  plan.qstar = qstar;
  plan.mode = mode;

  // Deepest generation with ell_j < h_j; one extra row of data is kept for
  // the frozen profile of the blend strip.
  int j0 = 0;
  const int kMaxGen = 60;
  auto ellAt = [&](int j) { return L * std::ldexp(1.0, -j) / N; };
  auto hAt = [&](int j) { return 0.5 * H * (1.0 - theta) * std::pow(theta, j); };
  while (j0 + 1 < kMaxGen && ellAt(j0 + 1) < hAt(j0 + 1)) ++j0;
  plan.j0 = j0;

  for (int j = 0; j <= j0 + 1; ++j) {
    plan.ell.push_back(ellAt(j));
    plan.h.push_back(hAt(j));
  }
  for (int j = 0; j <= j0 + 2; ++j) plan.y.push_back(H - 0.5 * H * std::pow(theta, j));
  return plan;
}

namespace detail {

namespace {

// Quintic interface profile (one-direction case); vanishing first and second
// derivatives at both ends make the gradient continuous across generations.
inline double psi(double t) { return smoothstep(t); }
inline double psiD1(double t) { return smoothstepD1(t); }
inline double psiD2(double t) { return smoothstepD2(t); }
inline double psiD3(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  return 60.0 * (1.0 + t * (-6.0 + 6.0 * t));
}

struct CellTables {
  int interfaces = 0;                 // per block
  double ahat[4], dahat[4];           // start positions and spans (units of ell)
  double J[4];                        // jump of the oscillating gradient entry
  double sigma[5];                    // per-strip value of that entry
  double cumJda[5], cumJdada[5];      // cumulative sums entering u2 derivatives
};

const CellTables& oneDirTables() {
  static const CellTables t = [] {
    CellTables c;
    c.interfaces = 4;
    const double a[4] = {0.25, 0.5, 0.5, 0.75};
    const double b[4] = {0.125, 0.375, 0.625, 0.875};
    const double J[4] = {2.0, -2.0, 2.0, -2.0};
    for (int i = 0; i < 4; ++i) {
      c.ahat[i] = a[i];
      c.dahat[i] = b[i] - a[i];
      c.J[i] = J[i];
    }
    for (int s = 0; s < 5; ++s) c.sigma[s] = (s % 2 == 0) ? -1.0 : 1.0;
    c.cumJda[0] = c.cumJdada[0] = 0.0;
    for (int s = 1; s <= 4; ++s) {
      c.cumJda[s] = c.cumJda[s - 1] + c.J[s - 1] * c.dahat[s - 1];
      c.cumJdada[s] = c.cumJdada[s - 1] + c.J[s - 1] * c.dahat[s - 1] * c.dahat[s - 1];
    }
    return c;
  }();
  return t;
}

const CellTables& twoDirTables() {
  static const CellTables t = [] {
    CellTables c;
    c.interfaces = 3;
    const double a[3] = {0.25, 0.25, 0.5};
    const double b[3] = {0.25, 0.5, 0.75};
    const double J[3] = {4.0, -4.0, 4.0};
    for (int i = 0; i < 3; ++i) {
      c.ahat[i] = a[i];
      c.dahat[i] = b[i] - a[i];
      c.J[i] = J[i];
    }
    const double tau[4] = {-2.0, 2.0, -2.0, 2.0};
    for (int s = 0; s < 4; ++s) c.sigma[s] = tau[s];
    c.cumJda[0] = c.cumJdada[0] = 0.0;
    for (int s = 1; s <= 3; ++s) {
      c.cumJda[s] = c.cumJda[s - 1] + c.J[s - 1] * c.dahat[s - 1];
      c.cumJdada[s] = c.cumJdada[s - 1] + c.J[s - 1] * c.dahat[s - 1] * c.dahat[s - 1];
    }
    return c;
  }();
  return t;
}

}  // namespace

Branch2D::Branch2D(const BranchPlan2D& plan, double /*p*/) : plan_(plan) {
  oneDir_ = plan.mode == BranchMode::OneDirection;
  Y_ = plan_.y[plan_.j0 + 1];
}

void Branch2D::wellMatrices(Mat* a, Mat* b) const {
  *a = Mat::Zero(2, 2);
  *b = Mat::Zero(2, 2);
  if (oneDir_) {
    (*a)(0, 0) = 1.0;   // sigma = +1
    (*b)(0, 0) = -1.0;  // sigma = -1
  } else {
    // tau = -2 <-> offdiagonal -1; tau = +2 <-> +1
    (*a)(0, 1) = (*a)(1, 0) = -1.0;
    (*b)(0, 1) = (*b)(1, 0) = 1.0;
  }
}

Eval2 Branch2D::evalRow(int j, double xi, double t) const {
  const CellTables& c = oneDir_ ? oneDirTables() : twoDirTables();
  const double ell = plan_.ell[j];
  const double h = plan_.h[j];
  const double ps = oneDir_ ? psi(t) : t;
  const double ps1 = oneDir_ ? psiD1(t) : 1.0;
  const double ps2 = oneDir_ ? psiD2(t) : 0.0;

  double gamma[4];
  for (int i = 0; i < c.interfaces; ++i) gamma[i] = ell * (c.ahat[i] + c.dahat[i] * ps);
  int s = 0;
  while (s < c.interfaces && xi > gamma[s]) ++s;

  // Profile integral up to xi.
  double val = 0.0, prev = 0.0;
  for (int i = 0; i < s; ++i) {
    val += c.sigma[i] * (gamma[i] - prev);
    prev = gamma[i];
  }
  val += c.sigma[s] * (xi - prev);

  double P = 0.0;  // sum (J dahat)_i (xi - gamma_i), enters u2
  for (int i = 0; i < s; ++i) P += c.J[i] * c.dahat[i] * (xi - gamma[i]);

  Eval2 e;
  if (oneDir_) {
    e.u1 = val;
    e.g11 = c.sigma[s];
    e.g12 = -(ps1 / h) * ell * c.cumJda[s];
    e.u2 = (ps1 / h) * ell * P;
    e.g21 = -e.g12;
    e.g22 = (ps2 / (h * h)) * ell * P - (ps1 * ps1 / (h * h)) * ell * ell * c.cumJdada[s];
  } else {
    e.u2 = val;
    e.g21 = c.sigma[s];
    e.g22 = -(ps1 / h) * ell * c.cumJda[s];
  }
  return e;
}

double Branch2D::stripLambda(double y) const { return (plan_.H - y) / (plan_.H - Y_); }

Eval2 Branch2D::evalUpper(double x1, double y) const {
  const double H = plan_.H;
  if (y >= Y_) {
    const double lam = stripLambda(std::min(y, H));
    const double lamP = -1.0 / (H - Y_);
    const double ell = plan_.ell[plan_.j0 + 1];
    double k = std::floor(x1 / ell);
    k = std::clamp(k, 0.0, std::ldexp(static_cast<double>(plan_.N), plan_.j0 + 1) - 1.0);
    const Eval2 base = evalRow(plan_.j0 + 1, x1 - k * ell, 0.0);
    Eval2 e;
    if (oneDir_) {
      e.u1 = lam * base.u1;
      e.g11 = lam * base.g11;
      e.g12 = lamP * base.u1;
    } else {
      e.u2 = lam * base.u2;
      e.g21 = lam * base.g21;
      e.g22 = lamP * base.u2;
    }
    return e;
  }
  const auto it = std::upper_bound(plan_.y.begin(), plan_.y.end(), y);
  int j = std::max(0, static_cast<int>(it - plan_.y.begin()) - 1);
  j = std::min(j, plan_.j0);
  const double ell = plan_.ell[j];
  double k = std::floor(x1 / ell);
  k = std::clamp(k, 0.0, std::ldexp(static_cast<double>(plan_.N), j) - 1.0);
  const double t = std::clamp((y - plan_.y[j]) / plan_.h[j], 0.0, 1.0);
  return evalRow(j, x1 - k * ell, t);
}

Eval2 Branch2D::eval(double x1, double x2) const {
  if (x1 < 0 || x1 > plan_.L || x2 < 0 || x2 > plan_.H) return Eval2{};
  const double mid = 0.5 * plan_.H;
  if (x2 >= mid) return evalUpper(x1, x2);
  Eval2 e = evalUpper(x1, plan_.H - x2);
  if (oneDir_) {
    e.u2 = -e.u2;
    e.g12 = -e.g12;
    e.g21 = -e.g21;
  } else {
    e.g22 = -e.g22;
  }
  return e;
}

double Branch2D::hessNorm(double x1, double x2) const {
  if (x1 < 0 || x1 > plan_.L || x2 < 0 || x2 > plan_.H) return 0.0;
  const double y = 0.5 * plan_.H + std::abs(x2 - 0.5 * plan_.H);
  if (y >= Y_) {
    // Linear blend: only the mixed derivatives survive.
    const double lamP = 1.0 / (plan_.H - Y_);
    const double mag = oneDir_ ? 1.0 : 2.0;  // |sigma| or |tau|
    return std::sqrt(2.0) * lamP * mag;
  }
  if (!oneDir_) return 0.0;  // straight interfaces, piecewise linear field

  const auto it = std::upper_bound(plan_.y.begin(), plan_.y.end(), y);
  int j = std::max(0, static_cast<int>(it - plan_.y.begin()) - 1);
  j = std::min(j, plan_.j0);
  const double ell = plan_.ell[j];
  const double h = plan_.h[j];
  double k = std::floor(x1 / ell);
  k = std::clamp(k, 0.0, std::ldexp(static_cast<double>(plan_.N), j) - 1.0);
  const double xi = x1 - k * ell;
  const double t = std::clamp((y - plan_.y[j]) / plan_.h[j], 0.0, 1.0);

  const CellTables& c = oneDirTables();
  const double ps = psi(t), ps1 = psiD1(t), ps2 = psiD2(t), ps3 = psiD3(t);
  double gamma[4];
  for (int i = 0; i < 4; ++i) gamma[i] = ell * (c.ahat[i] + c.dahat[i] * ps);
  int s = 0;
  while (s < 4 && xi > gamma[s]) ++s;
  double P = 0.0;
  for (int i = 0; i < s; ++i) P += c.J[i] * c.dahat[i] * (xi - gamma[i]);

  const double d22u1 = -(ps2 / (h * h)) * ell * c.cumJda[s];
  const double d12u2 = (ps2 / (h * h)) * ell * c.cumJda[s];
  const double d22u2 =
      (ps3 / (h * h * h)) * ell * P - 3.0 * (ps1 * ps2 / (h * h * h)) * ell * ell * c.cumJdada[s];
  return std::sqrt(d22u1 * d22u1 + 2.0 * d12u2 * d12u2 + d22u2 * d22u2);
}

void Branch2D::collectLeaves(std::vector<Leaf2>* out) const {
  const CellTables& c = oneDir_ ? oneDirTables() : twoDirTables();
  const int strips = c.interfaces + 1;

  for (int j = 0; j <= plan_.j0; ++j) {
    const double ell = plan_.ell[j];
    const double h = plan_.h[j];
    const double y0 = plan_.y[j];
    const double blocks = std::ldexp(static_cast<double>(plan_.N), j);
    for (int s = 0; s < strips; ++s) {
      Leaf2 leaf;
      leaf.multiplicity = 2.0 * blocks;
      const bool one = oneDir_;
      const auto* plan = &plan_;
      auto gammaAt = [&c, ell, one](int i, double t) {
        if (i < 0) return 0.0;
        if (i >= c.interfaces) return ell;
        const double ps = one ? psi(t) : t;
        return ell * (c.ahat[i] + c.dahat[i] * ps);
      };
      leaf.position = [gammaAt, s, y0, h](double q0, double q1, double* x1, double* x2) {
        const double lo = gammaAt(s - 1, q1), hi = gammaAt(s, q1);
        *x1 = lo + q0 * (hi - lo);
        *x2 = y0 + q1 * h;
      };
      leaf.jacobian = [gammaAt, s, h](double q0, double q1) {
        (void)q0;
        return (gammaAt(s, q1) - gammaAt(s - 1, q1)) * h;
      };
      leaf.eval = [this, gammaAt, s, j](double q0, double q1) {
        const double lo = gammaAt(s - 1, q1), hi = gammaAt(s, q1);
        return evalRow(j, lo + q0 * (hi - lo), q1);
      };
      (void)plan;
      out->push_back(std::move(leaf));
    }
  }

  // Blend strip: frozen profile, linear taper; split at the profile kinks.
  const double ell = plan_.ell[plan_.j0 + 1];
  const double blocks = std::ldexp(static_cast<double>(plan_.N), plan_.j0 + 1);
  std::vector<double> cuts;
  if (oneDir_)
    cuts = {0.0, 0.25, 0.5, 0.75, 1.0};
  else
    cuts = {0.0, 0.25, 0.5, 0.75, 1.0};
  const double H = plan_.H;
  const double Y = Y_;
  for (std::size_t seg = 0; seg + 1 < cuts.size(); ++seg) {
    Leaf2 leaf;
    leaf.multiplicity = 2.0 * blocks;
    leaf.cutoff = true;
    const double lo = cuts[seg] * ell, hi = cuts[seg + 1] * ell;
    leaf.position = [lo, hi, Y, H](double q0, double q1, double* x1, double* x2) {
      *x1 = lo + q0 * (hi - lo);
      *x2 = Y + q1 * (H - Y);
    };
    leaf.jacobian = [lo, hi, Y, H](double, double) { return (hi - lo) * (H - Y); };
    leaf.eval = [this, lo, hi, Y, H](double q0, double q1) {
      const double xi = lo + q0 * (hi - lo);
      const double y = Y + q1 * (H - Y);
      const double lam = (H - y) / (H - Y);
      const double lamP = -1.0 / (H - Y);
      const Eval2 base = evalRow(plan_.j0 + 1, xi, 0.0);
      Eval2 e;
      if (oneDir_) {
        e.u1 = lam * base.u1;
        e.g11 = lam * base.g11;
        e.g12 = lamP * base.u1;
      } else {
        e.u2 = lam * base.u2;
        e.g21 = lam * base.g21;
        e.g22 = lamP * base.u2;
      }
      return e;
    };
    out->push_back(std::move(leaf));
  }
}

void Branch2D::collectJumps(std::vector<Jump2Class>* out) const {
  const CellTables& c = oneDir_ ? oneDirTables() : twoDirTables();
  const bool one = oneDir_;

  auto wellOf = [one](double stripValue) {
    if (one) return stripValue > 0 ? 0 : 1;  // sigma=+1 -> diag(1,0)
    return stripValue < 0 ? 0 : 1;           // tau=-2 -> offdiag -1
  };

  // Interface curves inside the rows.
  for (int j = 0; j <= plan_.j0; ++j) {
    const double ell = plan_.ell[j];
    const double h = plan_.h[j];
    const double y0 = plan_.y[j];
    const double blocks = std::ldexp(static_cast<double>(plan_.N), j);
    for (int i = 0; i < c.interfaces; ++i) {
      Jump2Class jc;
      jc.multiplicity = 2.0 * blocks;
      jc.sample = [this, &c, i, ell, h, y0, one, wellOf](double tpar) {
        const double t = tpar;
        const double ps = one ? psi(t) : t;
        const double ps1 = one ? psiD1(t) : 1.0;
        const double gp = ell * c.dahat[i] * ps1 / h;  // interface slope dx1/dy
        Jump2 s;
        if (one) {
          s.d11 = c.J[i];
          s.d12 = -c.J[i] * gp;
          s.d21 = c.J[i] * gp;
          s.d22 = -c.J[i] * gp * gp;
        } else {
          s.d21 = c.J[i];
          s.d22 = -c.J[i] * gp;
        }
        s.x1 = ell * (c.ahat[i] + c.dahat[i] * ps);
        s.x2 = y0 + t * h;
        s.ds = h * std::sqrt(1.0 + gp * gp);
        s.wellA = wellOf(c.sigma[i]);
        s.wellB = wellOf(c.sigma[i + 1]);
        return s;
      };
      out->push_back(std::move(jc));
    }
  }

  const double H = plan_.H;
  const double Y = Y_;
  const double ellS = plan_.ell[plan_.j0 + 1];
  const double blocksS = std::ldexp(static_cast<double>(plan_.N), plan_.j0 + 1);

  if (one) {
    // Vertical phase interfaces inside the blend strip (frozen pattern).
    for (double cut : {0.25, 0.75}) {
      Jump2Class jc;
      jc.multiplicity = 2.0 * blocksS;
      jc.sample = [H, Y, ellS, cut](double tpar) {
        const double y = Y + tpar * (H - Y);
        Jump2 s;
        s.d11 = 2.0 * (H - y) / (H - Y);
        s.x1 = cut * ellS;
        s.x2 = y;
        s.ds = H - Y;
        s.wellA = 0;
        s.wellB = 1;
        return s;
      };
      out->push_back(std::move(jc));
    }
    // Top edge of the deepest row against the blend strip: [d12] = -lam' u1Y.
    const double segs[5] = {0.0, 0.25, 0.5, 0.75, 1.0};
    for (int seg = 0; seg < 4; ++seg) {
      Jump2Class jc;
      jc.multiplicity = 2.0 * blocksS;
      const double lo = segs[seg] * ellS, hi = segs[seg + 1] * ellS;
      jc.sample = [this, lo, hi, H, Y](double tpar) {
        const double xi = lo + tpar * (hi - lo);
        const Eval2 base = evalRow(plan_.j0 + 1, xi, 0.0);
        Jump2 s;
        s.d12 = base.u1 / (H - Y);
        s.x1 = xi;
        s.x2 = Y;
        s.ds = hi - lo;
        s.wellA = s.wellB = 0;
        return s;
      };
      out->push_back(std::move(jc));
    }
    return;
  }

  // Two-direction extras: straight interfaces leave gradient jumps across
  // block edges, generation lines, the midline, and the blend strip edge.
  for (int j = 0; j <= plan_.j0; ++j) {
    const double h = plan_.h[j];
    const double y0 = plan_.y[j];
    const double blocks = std::ldexp(static_cast<double>(plan_.N), j);
    Jump2Class edge;
    edge.multiplicity = 2.0 * (blocks - 1.0);
    const double ell = plan_.ell[j];
    edge.sample = [h, y0, ell](double tpar) {
      Jump2 s;
      s.d21 = -4.0;  // tau: +2 -> -2 across a block edge
      s.x1 = ell;
      s.x2 = y0 + tpar * h;
      s.ds = h;
      s.wellA = 1;
      s.wellB = 0;
      return s;
    };
    out->push_back(std::move(edge));
  }

  for (int j = 0; j < plan_.j0; ++j) {
    const double ell = plan_.ell[j];
    const double blocks = std::ldexp(static_cast<double>(plan_.N), j);
    const double cj = plan_.ell[j] / plan_.h[j];
    const double cjn = plan_.ell[j + 1] / plan_.h[j + 1];
    const double yTop = plan_.y[j + 1];
    struct Segment {
      double lo, hi, jump;
    };
    const Segment segments[3] = {{0.125, 0.25, cjn}, {0.5, 0.625, cj}, {0.625, 0.75, std::abs(cj - cjn)}};
    for (const auto& segment : segments) {
      Jump2Class jc;
      jc.multiplicity = 2.0 * blocks;
      jc.sample = [segment, ell, yTop](double tpar) {
        Jump2 s;
        s.d22 = segment.jump;
        s.x1 = ell * (segment.lo + tpar * (segment.hi - segment.lo));
        s.x2 = yTop;
        s.ds = ell * (segment.hi - segment.lo);
        s.wellA = s.wellB = 0;
        return s;
      };
      out->push_back(std::move(jc));
    }
  }

  {  // Midline: d22 flips sign across the mirror on the sheared strip.
    const double ell = plan_.ell[0];
    const double c0 = plan_.ell[0] / plan_.h[0];
    Jump2Class jc;
    jc.multiplicity = static_cast<double>(plan_.N);
    jc.sample = [ell, c0, this](double tpar) {
      Jump2 s;
      s.d22 = 2.0 * c0;
      s.x1 = ell * (0.25 + 0.25 * tpar);
      s.x2 = 0.5 * plan_.H;
      s.ds = 0.25 * ell;
      s.wellA = s.wellB = 0;
      return s;
    };
    out->push_back(std::move(jc));
  }

  {  // Blend strip verticals: pattern breakpoint and block edges.
    Jump2Class interior;
    interior.multiplicity = 2.0 * blocksS;
    interior.sample = [H, Y, ellS](double tpar) {
      const double y = Y + tpar * (H - Y);
      Jump2 s;
      s.d21 = 4.0 * (H - y) / (H - Y);
      s.x1 = 0.5 * ellS;
      s.x2 = y;
      s.ds = H - Y;
      s.wellA = 0;
      s.wellB = 1;
      return s;
    };
    out->push_back(std::move(interior));
    Jump2Class edges;
    edges.multiplicity = 2.0 * (blocksS - 1.0);
    edges.sample = [H, Y, ellS](double tpar) {
      const double y = Y + tpar * (H - Y);
      Jump2 s;
      s.d21 = 4.0 * (H - y) / (H - Y);
      s.x1 = ellS;
      s.x2 = y;
      s.ds = H - Y;
      s.wellA = 1;
      s.wellB = 0;
      return s;
    };
    out->push_back(std::move(edges));
  }

  {  // Edge between the deepest row and the blend strip.
    const double ellP = plan_.ell[plan_.j0];  // parent block width
    const double blocksP = std::ldexp(static_cast<double>(plan_.N), plan_.j0);
    const double cj = plan_.ell[plan_.j0] / plan_.h[plan_.j0];
    const double lamP = 1.0 / (H - Y);
    // Four linear segments per parent block (two child blocks).
    struct Seg {
      double lo, hi;
      bool branchOn;  // parent-side d22 = cj present
    };
    const Seg segs[4] = {
        {0.0, 0.25, false}, {0.25, 0.5, false}, {0.5, 0.75, true}, {0.75, 1.0, false}};
    // Child sawtooth: u2Y over a child block of width ellS: 0 -> -ellS at
    // mid-child -> 0; expressed in parent coordinates below.
    for (const auto& sg : segs) {
      Jump2Class jc;
      jc.multiplicity = 2.0 * blocksP;
      jc.sample = [this, sg, ellP, cj, lamP](double tpar) {
        const double xi = ellP * (sg.lo + tpar * (sg.hi - sg.lo));
        const Eval2 base = evalRow(plan_.j0 + 1, std::fmod(xi, plan_.ell[plan_.j0 + 1]), 0.0);
        const double blendD22 = -lamP * base.u2;
        Jump2 s;
        s.d22 = (sg.branchOn ? cj : 0.0) - blendD22;
        s.x1 = xi;
        s.x2 = plan_.y[plan_.j0 + 1];
        s.ds = ellP * (sg.hi - sg.lo);
        s.wellA = s.wellB = 0;
        return s;
      };
      out->push_back(std::move(jc));
    }
  }
}

}  // namespace detail

namespace {

Field assembleBranch2D(const BranchPlan2D& plan, double p) {
  auto core = std::make_shared<detail::Branch2D>(plan, p);

  Field field;
  field.dim = 2;
  field.domain.kind = Domain::Kind::Box;
  field.domain.dim = 2;
  field.domain.lo = Vec3::Zero();
  field.domain.hi = Vec3(plan.L, plan.H, 0.0);
  field.datum = Mat::Zero(2, 2);
  field.name = plan.mode == BranchMode::OneDirection ? "branch2d_one_dir" : "branch2d_two_dir";

  Mat wa, wb;
  core->wellMatrices(&wa, &wb);
  field.wells = {SymTensor(wa), SymTensor(wb)};

  field.eval = [core](const Vec3& x) {
    const detail::Eval2 e = core->eval(x[0], x[1]);
    PointEval pe;
    pe.u = Vec3(e.u1, e.u2, 0.0);
    pe.grad.setZero();
    pe.grad(0, 0) = e.g11;
    pe.grad(0, 1) = e.g12;
    pe.grad(1, 0) = e.g21;
    pe.grad(1, 1) = e.g22;
    return pe;
  };
  field.hessNorm = [core](const Vec3& x) { return core->hessNorm(x[0], x[1]); };

  std::vector<detail::Leaf2> leaves;
  core->collectLeaves(&leaves);
  for (auto& l2 : leaves) {
    LeafClass leaf;
    leaf.lo = Vec3::Zero();
    leaf.hi = Vec3(1.0, 1.0, 0.0);
    leaf.multiplicity = l2.multiplicity;
    leaf.cutoff = l2.cutoff;
    auto position = l2.position;
    auto jacobian = l2.jacobian;
    auto evalLocal = l2.eval;
    leaf.chart.toDomain = [core, position](const Vec3& q) {
      double x1, x2;
      position(q[0], q[1], &x1, &x2);
      return Vec3(x1, x2, 0.0);
    };
    leaf.chart.jacobian = [core, jacobian](const Vec3& q) { return jacobian(q[0], q[1]); };
    leaf.localEval = [core, evalLocal](const Vec3& q) {
      const detail::Eval2 e = evalLocal(q[0], q[1]);
      PointEval pe;
      pe.u = Vec3(e.u1, e.u2, 0.0);
      pe.grad.setZero();
      pe.grad(0, 0) = e.g11;
      pe.grad(0, 1) = e.g12;
      pe.grad(1, 0) = e.g21;
      pe.grad(1, 1) = e.g22;
      return pe;
    };
    field.leaves.push_back(std::move(leaf));
  }

  std::vector<detail::Jump2Class> jumps;
  core->collectJumps(&jumps);
  for (auto& j2 : jumps) {
    JumpClass jump;
    jump.pdim = 1;
    jump.multiplicity = j2.multiplicity;
    jump.cutoff = j2.cutoff;
    auto sample2 = j2.sample;
    jump.sample = [sample2](double t, double) {
      const detail::Jump2 s2 = sample2(t);
      JumpSample s;
      s.jumpNorm = std::sqrt(s2.d11 * s2.d11 + s2.d12 * s2.d12 + s2.d21 * s2.d21 +
                             s2.d22 * s2.d22);
      s.weight = s2.ds;
      s.wellA = s2.wellA;
      s.wellB = s2.wellB;
      return s;
    };
    field.jumps.push_back(std::move(jump));
  }
  return field;
}

}  // namespace

Field branch2dTwoDir(const BranchPlan2D& plan, double p) {
  if (plan.mode != BranchMode::TwoDirections)
    throw std::invalid_argument("branch2dTwoDir: plan mode mismatch");
  return assembleBranch2D(plan, p);
}

Field branch2dOneDir(const BranchPlan2D& plan, double p) {
  if (plan.mode != BranchMode::OneDirection)
    throw std::invalid_argument("branch2dOneDir: plan mode mismatch");
  return assembleBranch2D(plan, p);
}

}  // namespace staircase::fields
