#pragma once

#include <numbers>

namespace dirac8 {

inline constexpr double kPi = std::numbers::pi;

/// Physical constants threaded through every formula. Gaussian units; the
/// default is the natural-unit choice c = hbar = 1.
///
/// Units note: for a photon-embedded state psi = [0, E, 0, iB] the density
/// psi^dag psi equals E^2 + B^2, so the normalisation integral of psi^dag psi
/// is 8 pi times the field energy.
struct Constants {
  double c = 1.0;
  double hbar = 1.0;
};

}  // namespace dirac8
