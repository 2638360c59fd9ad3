#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace staircase {

using Complex = std::complex<double>;

/// In-place iterative radix-2 FFT; sign = -1 forward, +1 inverse (unnormalized).
inline void fftRadix2(std::vector<Complex>& a, int sign) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft: size must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * M_PI / static_cast<double>(len);
    const Complex wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      Complex w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const Complex u = a[i + k];
        const Complex v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

/// d-dimensional forward DFT of a real grid (row-major, axis 0 slowest),
/// normalized as Fourier-series coefficients: X(k) = N^{-d} sum f(x) e^{-2pi i k.x/N}.
inline std::vector<Complex> dftGrid(const std::vector<double>& data, int dim, int n) {
  std::size_t total = 1;
  for (int k = 0; k < dim; ++k) total *= static_cast<std::size_t>(n);
  if (data.size() != total) throw std::invalid_argument("dftGrid: size mismatch");

  std::vector<Complex> a(total);
  for (std::size_t i = 0; i < total; ++i) a[i] = data[i];

  // Transform along each axis in turn.
  std::vector<Complex> line(n);
  for (int axis = dim - 1; axis >= 0; --axis) {
    std::size_t strideInner = 1;
    for (int k = axis + 1; k < dim; ++k) strideInner *= n;
    const std::size_t lineCount = total / static_cast<std::size_t>(n);
    for (std::size_t li = 0; li < lineCount; ++li) {
      // Decompose li into (outer, inner) around the transform axis.
      const std::size_t inner = li % strideInner;
      const std::size_t outer = li / strideInner;
      const std::size_t base = outer * strideInner * n + inner;
      for (int t = 0; t < n; ++t) line[t] = a[base + static_cast<std::size_t>(t) * strideInner];
      fftRadix2(line, -1);
      for (int t = 0; t < n; ++t) a[base + static_cast<std::size_t>(t) * strideInner] = line[t];
    }
  }
  const double norm = 1.0 / static_cast<double>(total);
  for (auto& c : a) c *= norm;
  return a;
}

}  // namespace staircase
