#include "dirac8/fields.hpp"

#include <cmath>
#include <sstream>

#include "dirac8/algebra.hpp"
#include "dirac8/errors.hpp"
#include "dirac8/fft.hpp"
#include "dirac8/numeric.hpp"

namespace dirac8::fields {

namespace {

std::span<cplx> as_span(VectorField& v) { return {reinterpret_cast<cplx*>(v.data()), v.size() * 3}; }

void require_grid(const GridSpec& grid, std::size_t n, const char* what) {
  if (grid.size() != n) throw GridMismatch(std::string(what) + ": field size does not match grid");
}

}  // namespace

EMField EMField::zero(const GridSpec& grid) { return EMField{grid, VectorField(grid.size()), VectorField(grid.size())}; }

const char* to_string(SpinorKind kind) {
  switch (kind) {
    case SpinorKind::photon_embedded:
      return "photon-embedded";
    case SpinorKind::electron:
      return "electron";
    case SpinorKind::generic:
      return "generic";
  }
  return "generic";
}

SpinorField8 SpinorField8::zero(const GridSpec& grid, SpinorKind kind, double mass) {
  return SpinorField8{grid, std::vector<Vector<8>>(grid.size()), mass, kind};
}

double TimeLaw::value(double t) const { return std::cos(frequency * t + phase); }

double TimeLaw::rate(double t) const { return -frequency * std::sin(frequency * t + phase); }

ScalarField FourCurrent::rho(double t) const {
  ScalarField out(grid.size());
  for (const auto& term : terms) {
    if (term.rho.empty()) continue;
    const double f = term.law.value(t);
    for (std::size_t p = 0; p < out.size(); ++p) out[p] += f * term.rho[p];
  }
  return out;
}

VectorField FourCurrent::J(double t) const {
  VectorField out(grid.size());
  for (const auto& term : terms) {
    if (term.J.empty()) continue;
    const double f = term.law.value(t);
    for (std::size_t p = 0; p < out.size(); ++p)
      for (int a = 0; a < 3; ++a) out[p][a] += f * term.J[p][a];
  }
  return out;
}

ScalarField FourCurrent::rho_rate(double t) const {
  ScalarField out(grid.size());
  for (const auto& term : terms) {
    if (term.rho.empty()) continue;
    const double f = term.law.rate(t);
    for (std::size_t p = 0; p < out.size(); ++p) out[p] += f * term.rho[p];
  }
  return out;
}

double continuity_residual(const FourCurrent& j, double t) {
  const auto rate = j.rho_rate(t);
  const auto div = divergence(j.grid, j.J(t));
  double worst = 0.0;
  for (std::size_t p = 0; p < rate.size(); ++p) worst = std::max(worst, std::abs(rate[p] + div[p]));
  return worst;
}

FourCurrent uniform_current(const GridSpec& grid, const Real3& amplitude, double frequency) {
  CurrentTerm term{{}, VectorField(grid.size(), Vec3{amplitude[0], amplitude[1], amplitude[2]}), {frequency, 0.0}};
  return FourCurrent{grid, {std::move(term)}};
}

FourCurrent dipole_current(const GridSpec& grid, const Real3& centre, double width, const Real3& amplitude,
                           double frequency) {
  if (!(frequency > 0.0)) throw std::invalid_argument("dipole_current: frequency must be positive");
  ScalarField profile(grid.size());
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const auto r = grid.position(p);
    double r2 = 0.0;
    for (int a = 0; a < 3; ++a) {
      if (grid.points()[a] == 1) continue;
      // Nearest periodic image keeps the profile smooth across the boundary.
      double d = r[a] - centre[a];
      const double len = grid.lengths()[a];
      d -= len * std::round(d / len);
      r2 += d * d;
    }
    profile[p] = std::exp(-0.5 * r2 / (width * width));
  }
  VectorField current(grid.size());
  for (std::size_t p = 0; p < grid.size(); ++p)
    for (int a = 0; a < 3; ++a) current[p][a] = amplitude[a] * profile[p];
  // rho = -(div J_profile) sin(w t) / w = -(div J_profile) cos(w t - pi/2) / w.
  auto div = divergence(grid, current);
  for (auto& v : div) v = -v / frequency;
  FourCurrent j{grid, {}};
  j.terms.push_back(CurrentTerm{{}, std::move(current), {frequency, 0.0}});
  j.terms.push_back(CurrentTerm{std::move(div), {}, {frequency, -0.5 * kPi}});
  return j;
}

FieldTensor field_tensor(const Real3& E, const Real3& B) {
  const auto g = algebra::generators();
  FieldTensor t;
  for (std::size_t i = 0; i < 3; ++i) {
    t.F -= g.kappa[i] * (kI * E[i]) + g.theta[i] * (kI * B[i]);
    t.G += g.theta[i] * (kI * E[i]) - g.kappa[i] * (kI * B[i]);
  }
  return t;
}

Vector<8> embed_em_point(const Vec3& E, const Vec3& B) {
  return {0.0, E[0], E[1], E[2], 0.0, kI * B[0], kI * B[1], kI * B[2]};
}

SpinorField8 embed_em(const EMField& fields) {
  require_grid(fields.grid, fields.E.size(), "embed_em");
  require_grid(fields.grid, fields.B.size(), "embed_em");
  auto psi = SpinorField8::zero(fields.grid, SpinorKind::photon_embedded, 0.0);
  for (std::size_t p = 0; p < psi.psi.size(); ++p) psi.psi[p] = embed_em_point(fields.E[p], fields.B[p]);
  return psi;
}

EMField extract_em(const SpinorField8& psi, const ExtractOptions& opts) {
  auto out = EMField::zero(psi.grid);
  double constraint = 0.0, imag = 0.0;
  for (std::size_t p = 0; p < psi.psi.size(); ++p) {
    const auto& v = psi.psi[p];
    constraint = std::max({constraint, std::abs(v[0]), std::abs(v[4])});
    for (int a = 0; a < 3; ++a) {
      out.E[p][a] = v[1 + a];
      out.B[p][a] = -kI * v[5 + a];
      imag = std::max({imag, std::abs(out.E[p][a].imag()), std::abs(out.B[p][a].imag())});
    }
  }
  if (constraint > opts.tolerance) {
    std::ostringstream msg;
    msg << "constraint-violation: |psi_0|/|psi_4| reached " << constraint << " (tolerance " << opts.tolerance << ")";
    throw ConstraintViolation(msg.str());
  }
  if (opts.require_real && imag > opts.tolerance) {
    std::ostringstream msg;
    msg << "constraint-violation: classical fields have imaginary residue " << imag;
    throw ConstraintViolation(msg.str());
  }
  return out;
}

SpinorField8 embed_electron(const GridSpec& grid, const ScalarField& g, const VectorField& phi, const ScalarField& f,
                            const VectorField& chi, double mass) {
  for (auto n : {g.size(), phi.size(), f.size(), chi.size()}) require_grid(grid, n, "embed_electron");
  auto psi = SpinorField8::zero(grid, SpinorKind::electron, mass);
  for (std::size_t p = 0; p < grid.size(); ++p) {
    psi.psi[p] = {kI * g[p], phi[p][0], phi[p][1], phi[p][2], f[p], kI * chi[p][0], kI * chi[p][1], kI * chi[p][2]};
  }
  return psi;
}

double constraint_residual(const SpinorField8& psi) {
  double worst = 0.0;
  for (const auto& v : psi.psi) worst = std::max({worst, std::abs(v[0]), std::abs(v[4])});
  return worst;
}

ScalarField divergence(const GridSpec& grid, const VectorField& v) {
  require_grid(grid, v.size(), "divergence");
  VectorField hat = v;
  fft::forward(grid, 3, as_span(hat));
  ScalarField out(grid.size());
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const auto k = grid.wave_vector(p);
    out[p] = kI * (k[0] * hat[p][0] + k[1] * hat[p][1] + k[2] * hat[p][2]);
  }
  fft::inverse(grid, 1, out);
  return out;
}

VectorField curl(const GridSpec& grid, const VectorField& v) {
  require_grid(grid, v.size(), "curl");
  VectorField hat = v;
  fft::forward(grid, 3, as_span(hat));
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const auto k = grid.wave_vector(p);
    const Vec3 ik{kI * k[0], kI * k[1], kI * k[2]};
    hat[p] = cross(ik, hat[p]);
  }
  fft::inverse(grid, 3, as_span(hat));
  return hat;
}

VectorField gradient(const GridSpec& grid, const ScalarField& s) {
  require_grid(grid, s.size(), "gradient");
  ScalarField hat = s;
  fft::forward(grid, 1, hat);
  VectorField out(grid.size());
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const auto k = grid.wave_vector(p);
    for (int a = 0; a < 3; ++a) out[p][a] = kI * k[a] * hat[p];
  }
  fft::inverse(grid, 3, as_span(out));
  return out;
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

EnergyPoynting energy_and_poynting(const EMField& fields, const Constants& constants) {
  require_grid(fields.grid, fields.E.size(), "energy_and_poynting");
  const auto alpha = algebra::dirac88_primed().alpha;
  const std::size_t n = fields.grid.size();
  EnergyPoynting out;
  out.poynting.resize(n);
  out.half_alpha_density.resize(n);
  std::vector<double> density(n);
  for (std::size_t p = 0; p < n; ++p) {
    const auto& e = fields.E[p];
    const auto& b = fields.B[p];
    density[p] = norm2(e) + norm2(b);
    const Vec3 exb = cross(Vec3{e[0].real(), e[1].real(), e[2].real()}, Vec3{b[0].real(), b[1].real(), b[2].real()});
    const auto psi = embed_em_point(e, b);
    for (int a = 0; a < 3; ++a) {
      out.poynting[p][a] = constants.c / (4.0 * kPi) * exb[a];
      out.half_alpha_density[p][a] = 0.5 * inner(psi, alpha[a] * psi);
      out.embedding_deviation = std::max(out.embedding_deviation, std::abs(out.half_alpha_density[p][a] - exb[a]));
    }
  }
  const double sum = pairwise_sum(density);
  out.energy = sum * fields.grid.cell_volume() / (8.0 * kPi);
  return out;
}

}  // namespace dirac8::fields
