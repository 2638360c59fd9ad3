#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

namespace staircase {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Dense symmetric d x d tensor (dimensionless strain units).
class SymTensor {
 public:
  SymTensor() = default;

  explicit SymTensor(Mat m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw std::invalid_argument("SymTensor: non-square matrix");
    const double scale = std::max(1.0, m_.norm());
    if ((m_ - m_.transpose()).cwiseAbs().maxCoeff() > 1e-14 * scale)
      throw std::invalid_argument("SymTensor: matrix is not symmetric");
    m_ = 0.5 * (m_ + m_.transpose());
  }

  static SymTensor zero(int d) { return SymTensor(Mat::Zero(d, d)); }

  static SymTensor diag(const Vec& entries) {
    Mat m = Mat::Zero(entries.size(), entries.size());
    m.diagonal() = entries;
    return SymTensor(std::move(m));
  }

  static SymTensor diag(std::initializer_list<double> entries) {
    Vec v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (double e : entries) v[i++] = e;
    return diag(v);
  }

  /// a (.) b = (a b^T + b a^T)/2
  static SymTensor symOuter(const Vec& a, const Vec& b) {
    Mat m = 0.5 * (a * b.transpose() + b * a.transpose());
    return SymTensor(std::move(m));
  }

  int d() const { return static_cast<int>(m_.rows()); }
  const Mat& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }
  Vec diagonal() const { return m_.diagonal(); }
  double norm() const { return m_.norm(); }
  bool isDiagonal(double tol = 1e-13) const {
    Mat off = m_;
    off.diagonal().setZero();
    return off.cwiseAbs().maxCoeff() <= tol * std::max(1.0, m_.norm());
  }

  SymTensor operator+(const SymTensor& o) const { return SymTensor(m_ + o.m_); }
  SymTensor operator-(const SymTensor& o) const { return SymTensor(m_ - o.m_); }
  SymTensor operator*(double t) const { return SymTensor(m_ * t); }

 private:
  Mat m_;
};

inline SymTensor operator*(double t, const SymTensor& x) { return x * t; }

/// Frobenius distance of a symmetric matrix to a finite set of wells.
inline double distToWells(const Mat& strain, const std::vector<SymTensor>& wells) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& w : wells) best = std::min(best, (strain - w.matrix()).norm());
  return best;
}

/// Index of the nearest well; ties broken by lowest index.
inline int nearestWell(const Mat& strain, const std::vector<SymTensor>& wells) {
  double best = std::numeric_limits<double>::infinity();
  int arg = 0;
  for (int i = 0; i < static_cast<int>(wells.size()); ++i) {
    const double dist = (strain - wells[i].matrix()).norm();
    if (dist < best - 1e-15 * std::max(1.0, best)) {
      best = dist;
      arg = i;
    }
  }
  return arg;
}

}  // namespace staircase
