#include "dirac8/states.hpp"

#include <cmath>

#include "dirac8/errors.hpp"
#include "dirac8/evolution.hpp"

namespace dirac8::states {

Real3 wave_vector(const GridSpec& grid, const ModeNumbers& m) {
  Real3 k{};
  for (int a = 0; a < 3; ++a) {
    if (grid.points()[a] == 1 && m[a] != 0) throw std::invalid_argument("wave_vector: mode along an inert axis");
    k[a] = 2.0 * kPi * double(m[a]) / grid.lengths()[a];
  }
  return k;
}

fields::EMField photon_plane_wave(const GridSpec& grid, long mode, double amplitude) {
  auto f = fields::EMField::zero(grid);
  const double k = wave_vector(grid, {0, 0, mode})[2];
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const double v = amplitude * std::cos(k * grid.position(p)[2]);
    f.E[p] = {v, 0.0, 0.0};
    f.B[p] = {0.0, v, 0.0};
  }
  return f;
}

SpinorField8 mode_superposition(const GridSpec& grid, const ModeNumbers& m, double mass, const Vector<8>& a_plus,
                                const Vector<8>& a_minus, fields::SpinorKind kind, const Constants& c) {
  const Real3 k = wave_vector(grid, m);
  const auto proj = evolution::energy_projectors(k, mass, c);
  const Vector<8> plus = proj.plus * a_plus;
  const Vector<8> minus = proj.minus * a_minus;
  auto psi = SpinorField8::zero(grid, kind, mass);
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const auto r = grid.position(p);
    const cplx ph = std::exp(kI * (k[0] * r[0] + k[1] * r[1] + k[2] * r[2]));
    for (std::size_t i = 0; i < 8; ++i) psi.psi[p][i] = ph * (plus[i] + minus[i]);
  }
  return psi;
}

SpinorField8 project_energy(const SpinorField8& psi, int sign, const Constants& c) {
  auto modes = evolution::decompose(psi, c);
  for (std::size_t p = 0; p < modes.plus.size(); ++p) {
    if (modes.omega[p] == 0.0) continue;
    if (sign > 0)
      modes.minus[p] = {};
    else
      modes.plus[p] = {};
  }
  return evolution::synthesize(modes, 0.0);
}

SpinorField8 circular_photon_packet(const GridSpec& grid, long mode, int helicity, double width, const Constants& c) {
  auto f = fields::EMField::zero(grid);
  const double k = wave_vector(grid, {0, 0, mode})[2];
  const double h = helicity >= 0 ? 1.0 : -1.0;
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const double z = grid.centred_position(p)[2];
    const cplx ph = std::exp(kI * (k * z)) * std::exp(-z * z / (2.0 * width * width)) / std::sqrt(2.0);
    f.E[p] = {ph, kI * h * ph, 0.0};
    f.B[p] = {-kI * h * ph, ph, 0.0};
  }
  auto psi = project_energy(fields::embed_em(f), +1, c);
  psi.kind = fields::SpinorKind::photon_embedded;
  return psi;
}

SpinorField8 electron_vortex_packet(const GridSpec& grid, double mass, double width, const Real3& k0, int ell,
                                    const Constants& c) {
  if (mass <= 0.0) throw DomainError("electron_vortex_packet: mass must be positive");
  auto psi = SpinorField8::zero(grid, fields::SpinorKind::electron, mass);
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const auto r = grid.centred_position(p);
    const double r2 = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
    cplx v = std::exp(-r2 / (2.0 * width * width)) * std::exp(kI * (k0[0] * r[0] + k0[1] * r[1] + k0[2] * r[2]));
    const cplx transverse(r[0], ell >= 0 ? r[1] : -r[1]);
    for (int l = 0; l < std::abs(ell); ++l) v *= transverse;
    psi.psi[p][1] = v;
  }
  auto out = project_energy(psi, +1, c);
  out.kind = fields::SpinorKind::electron;
  return out;
}

}  // namespace dirac8::states
