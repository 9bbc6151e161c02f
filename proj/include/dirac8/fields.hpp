#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "dirac8/constants.hpp"
#include "dirac8/grid.hpp"
#include "dirac8/matrix.hpp"

namespace dirac8::fields {

using Vec3 = Vector<3>;
using Real3 = std::array<double, 3>;
using ScalarField = std::vector<cplx>;
using VectorField = std::vector<Vec3>;

inline constexpr double kConstraintTolerance = 1e-10;

/// Classical E and B on the grid (Gaussian units). Stored complex; reality is checked on extraction.
struct EMField {
  GridSpec grid;
  VectorField E;
  VectorField B;

  static EMField zero(const GridSpec& grid);
};

enum class SpinorKind { photon_embedded, electron, generic };

const char* to_string(SpinorKind kind);

/// Eight complex components per grid point, in the rotated (alpha', beta') basis.
struct SpinorField8 {
  GridSpec grid;
  std::vector<Vector<8>> psi;
  double mass = 0.0;
  SpinorKind kind = SpinorKind::generic;

  static SpinorField8 zero(const GridSpec& grid, SpinorKind kind, double mass = 0.0);
};

/// f(t) = cos(frequency * t + phase); frequency 0 gives a constant.
struct TimeLaw {
  double frequency = 0.0;
  double phase = 0.0;

  double value(double t) const;
  double rate(double t) const;
};

struct CurrentTerm {
  ScalarField rho;
  VectorField J;
  TimeLaw law;
};

/// rho(r, t) and J(r, t) as a finite sum of separable terms profile(r) * law(t).
struct FourCurrent {
  GridSpec grid;
  std::vector<CurrentTerm> terms;

  ScalarField rho(double t) const;
  VectorField J(double t) const;
  ScalarField rho_rate(double t) const;
  bool empty() const { return terms.empty(); }
};

/// max over the grid of |d rho/dt + div J| at time t.
double continuity_residual(const FourCurrent& j, double t);

/// Spatially uniform J = amplitude * cos(frequency t), rho = 0.
FourCurrent uniform_current(const GridSpec& grid, const Real3& amplitude, double frequency);

/// Oscillating Gaussian dipole: J = amplitude * g(r) cos(w t), rho = -(amplitude . grad g) sin(w t) / w,
/// which satisfies continuity exactly (spectrally).
FourCurrent dipole_current(const GridSpec& grid, const Real3& centre, double width, const Real3& amplitude,
                           double frequency);

struct FieldTensor {
  Matrix4 F;
  Matrix4 G;
};

/// F = -i kappa.E - i theta.B and its dual G = -i kappa.B + i theta.E.
FieldTensor field_tensor(const Real3& E, const Real3& B);

Vector<8> embed_em_point(const Vec3& E, const Vec3& B);
SpinorField8 embed_em(const EMField& fields);

struct ExtractOptions {
  double tolerance = kConstraintTolerance;
  bool require_real = true;
};

/// Inverse of embed_em. Throws ConstraintViolation if |psi_0| or |psi_4| exceeds the tolerance
/// anywhere, or (with require_real) if E or B carries an imaginary residue above it.
EMField extract_em(const SpinorField8& psi, const ExtractOptions& opts = {});

/// psi = [i g, phi, f, i chi].
SpinorField8 embed_electron(const GridSpec& grid, const ScalarField& g, const VectorField& phi, const ScalarField& f,
                            const VectorField& chi, double mass = 0.0);

/// Largest |psi_0|, |psi_4| over the grid.
double constraint_residual(const SpinorField8& psi);

ScalarField divergence(const GridSpec& grid, const VectorField& v);
VectorField curl(const GridSpec& grid, const VectorField& v);
VectorField gradient(const GridSpec& grid, const ScalarField& s);

struct EnergyPoynting {
  double energy = 0.0;                 // integral of (E^2 + B^2) / 8 pi
  VectorField poynting;                // (c / 4 pi) E x B
  VectorField half_alpha_density;      // psi^dag alpha psi / 2 through the 8×8 embedding
  double embedding_deviation = 0.0;    // max |psi^dag alpha psi / 2 - E x B|
};

EnergyPoynting energy_and_poynting(const EMField& fields, const Constants& constants = {});

Vec3 cross(const Vec3& a, const Vec3& b);

}  // namespace dirac8::fields
