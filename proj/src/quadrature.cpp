#include "dirac8/quadrature.hpp"

#include <cmath>

namespace dirac8::quadrature {

namespace {

constexpr double kSeriesRadius = 4.0;

// Lagrange basis on s_n = 1 - n/3 (s measured backwards from the end of the substep),
// as polynomial coefficients in s: l_n(s) = sum_j out[n][j] s^j.
std::array<std::array<double, kNodes>, kNodes> lagrange_basis() {
  std::array<double, kNodes> s{};
  for (int n = 0; n < kNodes; ++n) s[n] = 1.0 - kNodeFractions[n];
  std::array<std::array<double, kNodes>, kNodes> out{};
  for (int n = 0; n < kNodes; ++n) {
    std::array<double, kNodes> poly{1.0, 0.0, 0.0, 0.0};
    double denom = 1.0;
    int degree = 0;
    for (int m = 0; m < kNodes; ++m) {
      if (m == n) continue;
      // poly *= (s - s_m)
      std::array<double, kNodes> next{};
      for (int j = 0; j <= degree; ++j) {
        next[j + 1] += poly[j];
        next[j] -= s[m] * poly[j];
      }
      poly = next;
      ++degree;
      denom *= s[n] - s[m];
    }
    for (int j = 0; j < kNodes; ++j) out[n][j] = poly[j] / denom;
  }
  return out;
}

const std::array<std::array<double, kNodes>, kNodes>& basis() {
  static const auto b = lagrange_basis();
  return b;
}

// sum_{n >= first} z^n / (n! (n + j + 1)).
cplx series(cplx z, int j, int first) {
  cplx term = 1.0;  // z^n / n!
  for (int n = 1; n <= first; ++n) term *= z / double(n);
  cplx acc{};
  for (int n = first; n < first + 80; ++n) {
    const cplx add = term / double(n + j + 1);
    acc += add;
    if (std::abs(add) <= 1e-18 * std::abs(acc)) break;
    term *= z / double(n + 1);
  }
  return acc;
}

std::array<cplx, kNodes> weights_from_moments(const std::array<cplx, kNodes>& m, double h) {
  const auto& b = basis();
  std::array<cplx, kNodes> w{};
  for (int n = 0; n < kNodes; ++n) {
    cplx acc{};
    for (int j = 0; j < kNodes; ++j) acc += b[n][j] * m[j];
    w[n] = h * acc;
  }
  return w;
}

}  // namespace

std::array<cplx, kNodes> moments(cplx z) {
  std::array<cplx, kNodes> m{};
  if (std::abs(z) < kSeriesRadius) {
    for (int j = 0; j < kNodes; ++j) m[j] = series(z, j, 0);
    return m;
  }
  const cplx ez = std::exp(z);
  m[0] = (ez - 1.0) / z;
  for (int j = 1; j < kNodes; ++j) m[j] = (ez - double(j) * m[j - 1]) / z;
  return m;
}

std::array<cplx, kNodes> moments_minus_static(cplx z) {
  std::array<cplx, kNodes> m{};
  if (std::abs(z) < kSeriesRadius) {
    for (int j = 0; j < kNodes; ++j) m[j] = series(z, j, 1);
    return m;
  }
  m = moments(z);
  for (int j = 0; j < kNodes; ++j) m[j] -= 1.0 / double(j + 1);
  return m;
}

std::array<cplx, kNodes> exponential_weights(cplx z, double h) { return weights_from_moments(moments(z), h); }

std::array<cplx, kNodes> exponential_weights_minus_static(cplx z, double h) {
  return weights_from_moments(moments_minus_static(z), h);
}

}  // namespace dirac8::quadrature
