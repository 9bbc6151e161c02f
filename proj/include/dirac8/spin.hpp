#pragma once

#include <array>
#include <string>
#include <vector>

#include "dirac8/algebra.hpp"
#include "dirac8/constants.hpp"
#include "dirac8/fields.hpp"

namespace dirac8::spin {

using fields::Real3;

struct SpinOperator {
  std::array<Matrix8, 3> S;
  std::string label;
};

/// (hbar/2) [[theta, kappa], [kappa, theta]].
SpinOperator spin_half(const Constants& k = {});

/// hbar diag(theta, theta).
SpinOperator spin_one(const Constants& k = {});

/// max over (i, k) of |(i/hbar)[alpha'_k, S_i] + eps_ijk alpha'_j|, combined with max |[beta', S_i]|.
algebra::AlgebraReport verify_spin_evolution(const SpinOperator& s, const Constants& k = {});

/// max |[S_i, S_j] - i hbar eps_ijk S_k|.
algebra::AlgebraReport verify_closure(const SpinOperator& s, const Constants& k = {});

/// Largest entry of S_i linking a constrained state (rows 0 and 4 zero) to rows 0 or 4.
double constraint_leakage(const SpinOperator& s);

struct SelectionReport {
  double spin_one_rows = 0.0;    // max |row 0|, |row 4| of S_i psi for the spin-1 operator
  double spin_half_rows = 0.0;   // same for spin-1/2
  std::size_t witness_point = 0; // grid point and component where spin-1/2 leaks most
  int witness_component = 0;
  Vector<8> witness_input{};
  Vector<8> witness_output{};
};

/// Applies both operators to a photon-embedded field and measures the constraint rows.
SelectionReport photon_spin_selection(const fields::SpinorField8& psi, const Constants& k = {});

struct ExpectationSeries {
  std::string label;
  std::vector<double> times;
  std::vector<Real3> values;
};

struct AngularMomentumSeries {
  ExpectationSeries orbital;
  ExpectationSeries spin;
  ExpectationSeries total;
  std::vector<double> norm;       // integral of psi^dag psi at each sample
  double boundary_weight = 0.0;   // largest fraction of the norm in the outer eighth of the box
  bool boundary_warning = false;  // set when boundary_weight exceeds kBoundaryWeightLimit
};

inline constexpr double kBoundaryWeightLimit = 1e-6;

struct Expectations {
  Real3 orbital{};
  Real3 spin{};
  double norm = 0.0;
  double boundary_weight = 0.0;
};

/// <r × (-i hbar grad)> and <S> per unit norm for one snapshot; the operator follows the kind.
Expectations angular_momentum(const fields::SpinorField8& psi, const Constants& k = {});

AngularMomentumSeries angular_momentum_series(const std::vector<double>& times,
                                              const std::vector<fields::SpinorField8>& samples,
                                              const Constants& k = {});

/// Largest |J(t) - J(0)| relative to max(|J(0)|, scale).
double max_relative_drift(const ExpectationSeries& s, double scale);

/// CSV with header t,Lx,Ly,Lz,Sx,Sy,Sz,Jx,Jy,Jz. Throws IoError.
void write_series_csv(const std::string& path, const AngularMomentumSeries& series);

}  // namespace dirac8::spin
