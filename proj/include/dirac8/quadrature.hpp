#pragma once

#include <array>

#include "dirac8/matrix.hpp"

namespace dirac8::quadrature {

/// Number of equispaced interpolation nodes per substep.
inline constexpr int kNodes = 4;

/// Node offsets tau_n = t0 + n h / 3 as fractions of the substep.
inline constexpr std::array<double, kNodes> kNodeFractions{0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0};

/// m_j(z) = integral over s in [0, 1] of exp(z s) s^j, j = 0..3.
std::array<cplx, kNodes> moments(cplx z);

/// m_j(z) - m_j(0), accurate for small |z|.
std::array<cplx, kNodes> moments_minus_static(cplx z);

/// Weights w_n with  integral_{t0}^{t0+h} exp(z (t0 + h - tau)/h) f(tau) dtau ≈ sum_n w_n f(tau_n),
/// exact when f is a cubic. For the propagator exp(-i lambda (t1 - tau)) use z = -i lambda h.
std::array<cplx, kNodes> exponential_weights(cplx z, double h);

/// The same weights minus their z = 0 values (plain cubic quadrature), without cancellation.
std::array<cplx, kNodes> exponential_weights_minus_static(cplx z, double h);

}  // namespace dirac8::quadrature
