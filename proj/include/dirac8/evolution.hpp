#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dirac8/constants.hpp"
#include "dirac8/fields.hpp"
#include "dirac8/matrix.hpp"
#include "dirac8/spin.hpp"

namespace dirac8::evolution {

using fields::Real3;
using fields::SpinorField8;

/// H(k) = c hbar alpha'.k + beta' m c^2.
Matrix8 hamiltonian_k(const Real3& k, double mass, const Constants& c = {});

/// omega(k) = c sqrt(k^2 + (m c / hbar)^2).
double angular_frequency(const Real3& k, double mass, const Constants& c = {});

struct Projectors {
  Matrix8 plus;
  Matrix8 minus;
  double omega = 0.0;
};

/// P± = (1 ± H/(hbar omega))/2. Throws DegenerateMode at k = 0, m = 0.
Projectors energy_projectors(const Real3& k, double mass, const Constants& c = {});

/// Per-mode amplitudes of the discrete Fourier transform (unnormalised forward FFT),
/// split by energy sign. The zero mode of a massless field has H = 0; its amplitude is kept
/// in `plus` with omega 0 and never evolves.
struct ModeDecomposition {
  GridSpec grid;
  double mass = 0.0;
  Constants constants;
  fields::SpinorKind kind = fields::SpinorKind::generic;
  std::vector<Vector<8>> plus;
  std::vector<Vector<8>> minus;
  std::vector<double> omega;
};

ModeDecomposition decompose(const SpinorField8& psi, const Constants& c = {});

/// Field at time t from the decomposition (exact phases).
SpinorField8 synthesize(const ModeDecomposition& modes, double t);

/// Exact free evolution by t.
SpinorField8 evolve_free(const SpinorField8& psi, double t, const Constants& c = {});

/// A sequence of snapshots.
struct Run {
  std::vector<double> times;
  std::vector<SpinorField8> samples;
  Constants constants;
};

/// Evenly spaced times t_i = duration * i / (samples - 1).
std::vector<double> sample_times(double duration, std::size_t samples);

Run run_free(const SpinorField8& psi, const std::vector<double>& times, const Constants& c = {});

struct SourcedOptions {
  /// Largest source phase change per quadrature substep; sets the substep length.
  double max_phase_per_substep = 0.01;
  double constraint_tolerance = fields::kConstraintTolerance;
  double continuity_tolerance = 1e-8;
  /// Initial |div E - 4 pi rho|, |div B| allowed before stepping.
  double gauss_tolerance = 1e-8;
};

/// Substep count used between two samples for the given source.
std::size_t substeps_for(const fields::FourCurrent& j, double interval, const SourcedOptions& opt);

/// Integrating-factor evolution with i hbar d psi/dt = H psi + 4 pi hbar [c rho, -iJ, 0, 0, 0, 0].
/// Checks continuity at each sample time and Gauss's law on the initial field; throws
/// ConstraintViolation if either fails or if components 0/4 exceed the tolerance at any sample.
Run evolve_sourced(const SpinorField8& psi, const fields::FourCurrent& j, const std::vector<double>& times,
                   const Constants& c = {}, const SourcedOptions& opt = {});

/// max |div E - 4 pi rho| and |div B| for a photon-embedded field.
double gauss_residual(const SpinorField8& psi, const fields::ScalarField& rho);

// ---- observables ----

/// integral of psi^dag psi over the box.
double norm(const SpinorField8& psi);

/// integral of psi^dag H psi (spectral).
double energy(const SpinorField8& psi, const Constants& c = {});

/// <alpha> = integral psi^dag alpha' psi / integral psi^dag psi.
Real3 alpha_expectation(const SpinorField8& psi);

spin::ExpectationSeries alpha_expectation_series(const Run& run);

/// integral of psi^dag alpha' psi / 2 (the integrated Poynting-type density).
Real3 half_alpha_integral(const SpinorField8& psi);

/// psi^dag alpha' psi / 2 at one grid point, over the run.
spin::ExpectationSeries local_half_alpha_series(const Run& run, std::size_t point);

/// c <p H^-1> evaluated in mode space (zero mode excluded), per unit norm.
Real3 velocity_prediction(const SpinorField8& psi, const Constants& c = {});

/// Twice the frequency of the mode with the largest positive/negative-energy overlap.
double dominant_zitter_frequency(const SpinorField8& psi, const Constants& c = {});

// ---- Zitterbewegung analysis ----

struct ZitterLine {
  double frequency = 0.0;
  double amplitude = 0.0;   // Euclidean norm of the per-component amplitudes
};

struct ZitterReport {
  Real3 dc{};
  Real3 amplitude{};             // per-component oscillation amplitude of the strongest line
  double fitted_frequency = 0.0;
  double expected_frequency = 0.0;
  double relative_error = 0.0;   // |fitted - expected| / expected, not clamped
  bool oscillating = false;      // false when the strongest line is below the round-off floor
  std::vector<ZitterLine> lines;
};

struct ZitterOptions {
  /// A line is significant when its amplitude exceeds this fraction of max(|dc|, strongest line).
  double line_threshold = 0.01;
  /// Amplitudes below this multiple of max(1, |dc|) count as no oscillation.
  double floor = 1e-12;
  std::size_t max_lines = 5;
  /// Return the line list instead of throwing FitFailure when several lines are significant.
  bool allow_multiline = false;
};

/// Splits a series into a constant plus cos/sin at one frequency, located by a zero-padded
/// periodogram and refined by least squares. Throws FitFailure for fewer than 16 samples, spans
/// shorter than two periods of the fitted line, or (unless allowed) several significant lines.
ZitterReport zitter_decompose(const spin::ExpectationSeries& series, double expected_frequency,
                              const ZitterOptions& opt = {});

struct PoyntingSplit {
  fields::VectorField dc;    // E* x B + E x B*
  fields::VectorField osc;   // E x B, carrier exp(-2 i omega t)
};

PoyntingSplit poynting_split(const fields::VectorField& E, const fields::VectorField& B);

/// dc + osc exp(-2 i omega t) + c.c. at one point.
fields::Vec3 poynting_reconstruct(const PoyntingSplit& s, std::size_t point, double omega, double t);

/// Real field pair E(r) e^{-i omega t} + c.c. embedded at time t.
SpinorField8 embed_monochromatic(const GridSpec& grid, const fields::VectorField& E, const fields::VectorField& B,
                                 double omega, double t);

struct ZitterPoyntingReport {
  double integrated_deviation = 0.0;  // max over samples of |osc part of <alpha> norm / 2 - integral of osc terms|
  double integrated_amplitude = 0.0;  // max over samples of |integral of osc terms|
  double pointwise_deviation = 0.0;   // max over samples and points of |psi^dag alpha psi / 2 - reconstruction|
  double pointwise_amplitude = 0.0;   // max |osc term| over points
  std::size_t samples = 0;
};

/// Evolves the real field built from single-frequency amplitudes with the Dirac form and compares
/// <alpha> norm / 2 and the pointwise density against the split, sample by sample.
ZitterPoyntingReport zitter_equals_poynting(const GridSpec& grid, const fields::VectorField& E,
                                            const fields::VectorField& B, double omega,
                                            const std::vector<double>& times, const Constants& c = {});

void to_json(nlohmann::json& j, const ZitterReport& r);
void to_json(nlohmann::json& j, const ZitterPoyntingReport& r);

}  // namespace dirac8::evolution
