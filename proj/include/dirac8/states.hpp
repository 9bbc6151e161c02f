#pragma once

#include <array>

#include "dirac8/constants.hpp"
#include "dirac8/fields.hpp"

namespace dirac8::states {

using fields::Real3;
using fields::SpinorField8;

/// Integer mode numbers along x, y, z; the wave vector is 2 pi m / L per axis.
using ModeNumbers = std::array<long, 3>;

Real3 wave_vector(const GridSpec& grid, const ModeNumbers& m);

/// Real travelling wave E = A x cos(kz), B = A y cos(kz) with k = 2 pi m / Lz.
fields::EMField photon_plane_wave(const GridSpec& grid, long mode, double amplitude = 1.0);

/// psi(r) = exp(i k.r) (P+ a_plus + P- a_minus) at one mode. Throws DegenerateMode at k = 0, m = 0.
SpinorField8 mode_superposition(const GridSpec& grid, const ModeNumbers& m, double mass, const Vector<8>& a_plus,
                                const Vector<8>& a_minus, fields::SpinorKind kind, const Constants& c = {});

/// Keeps only the positive (sign > 0) or negative energy part of every nonzero mode.
SpinorField8 project_energy(const SpinorField8& psi, int sign, const Constants& c = {});

/// Positive-frequency circular wave (x + i helicity y) e^{i k z} / sqrt 2 under a Gaussian envelope in z
/// of the given width, centred in the box; B = z x E for each plane-wave component is restored by
/// projecting onto positive energy.
SpinorField8 circular_photon_packet(const GridSpec& grid, long mode, int helicity, double width,
                                    const Constants& c = {});

/// Gaussian electron packet (x + i y)^ell exp(-r^2 / 2 width^2) exp(i k0.r) in component 1, projected
/// onto positive energy.
SpinorField8 electron_vortex_packet(const GridSpec& grid, double mass, double width, const Real3& k0, int ell,
                                    const Constants& c = {});

}  // namespace dirac8::states
