#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "dirac8/constants.hpp"
#include "dirac8/fields.hpp"

namespace dirac8::evolution {
struct Run;
}

namespace dirac8::oracle {

/// Classical solve of dE/dt = c curl B - 4 pi J, dB/dt = -c curl E on (E, B) per mode.
/// Nothing here touches the 8-component form.
struct OracleRun {
  std::vector<double> times;
  std::vector<fields::EMField> samples;
};

struct OracleOptions {
  /// Same substep rule as the sourced Dirac-form stepper.
  double max_phase_per_substep = 0.01;
};

OracleRun maxwell_evolve(const fields::EMField& initial, const fields::FourCurrent& j, const std::vector<double>& times,
                         const Constants& c = {}, const OracleOptions& opt = {});

struct Comparison {
  double max_abs_E = 0.0;
  double max_abs_B = 0.0;
  double rms = 0.0;          // RMS of the oracle fields (E and B components) over all samples
  double max_abs = 0.0;      // max(max_abs_E, max_abs_B)
  double max_relative = 0.0; // max_abs / rms (0 when rms is 0)
  std::size_t samples = 0;
};

/// Throws GridMismatch when grids, sample counts, or times differ.
Comparison compare(const std::vector<fields::EMField>& a, const std::vector<double>& times_a, const OracleRun& b);

/// Extracts E, B from a Dirac-form run (constraint and reality checked) before comparing.
Comparison compare(const evolution::Run& run, const OracleRun& oracle);

/// max over samples of |div E - 4 pi rho(t)| and |div B|.
double constraint_residual(const OracleRun& run, const fields::FourCurrent& j);

/// Integral of (E^2 + B^2) / 8 pi for each sample.
std::vector<double> energies(const OracleRun& run);

void to_json(nlohmann::json& j, const Comparison& c);

}  // namespace dirac8::oracle
