#pragma once

#include <array>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dirac8/matrix.hpp"

namespace dirac8::algebra {

struct DiracSet4 {
  std::array<Matrix4, 3> alpha;
  Matrix4 beta;
};

struct DiracSet8 {
  std::array<Matrix8, 3> alpha;
  Matrix8 beta;
};

/// Boost generators kappa, rotation generators theta, and the metric diagonal eta.
struct Generators {
  std::array<Matrix4, 3> kappa;
  std::array<Matrix4, 3> theta;
  Matrix4 eta;
};

std::array<Matrix2, 3> pauli_matrices();

/// Dirac's original 4×4 choice: alpha_i = [[0, sigma_i], [sigma_i, 0]], beta = diag(I2, -I2).
DiracSet4 dirac44();

/// I2 ⊗ (4×4 set): two uncoupled copies of the ordinary Dirac matrices.
DiracSet8 dirac88();

Generators generators();

/// Permutation exchanging basis vectors 0 and 4 (see the decision notes in README).
Matrix8 permutation_p14();

/// U = P14 · [[M1,0,M2,0],[M2,0,-M1,0],[0,M1,0,M2],[0,M2,0,-M1]] / sqrt(2), M1 = diag(1,i), M2 = M1 sigma_x.
Matrix8 unitary_u();

/// The rotated matrices alpha' = [[kappa, theta], [theta, kappa]], beta' = diag(-eta, eta),
/// built directly from the generators (exact entries). Every wave-function in this
/// library lives in this basis.
DiracSet8 dirac88_primed();

/// 8×8 chiral gamma matrices: gamma^0 off-diagonal I2⊗I2, gamma^i off-diagonal ±I2⊗sigma_i.
std::array<Matrix8, 4> gamma88();

/// Unitary K with psi_primed = K psi_chiral, satisfying
/// K gamma^0 gamma^i K^dag = alpha'_i and K (-gamma^0) K^dag = beta'.
/// The residual U(2) freedom on the doubled ("copy") index is fixed so that the
/// electromagnetic boost law reproduces the field-tensor transformation.
Matrix8 chiral_to_primed();

struct AlgebraReport {
  std::string identity;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

AlgebraReport make_report(std::string identity, double deviation, double tolerance);

void to_json(nlohmann::json& j, const AlgebraReport& r);

/// Everything verify_identities consumes; swapping an entry lets callers run negative controls.
struct MatrixCatalogue {
  std::array<Matrix2, 3> pauli;
  DiracSet4 dirac4;
  DiracSet8 dirac8;
  Generators gens;
  Matrix8 u;
  std::array<Matrix8, 4> gamma;
  Matrix8 chiral;

  static MatrixCatalogue standard();
};

/// Exact identities use tolerance 0; identities involving the 1/sqrt(2) of U use this.
inline constexpr double kUnitaryTolerance = 1e-15;

std::vector<AlgebraReport> verify_identities(const MatrixCatalogue& cat);
std::vector<AlgebraReport> verify_identities();

/// Levi-Civita symbol on {0,1,2}.
constexpr int levi_civita(int i, int j, int k) {
  return (i - j) * (j - k) * (k - i) / 2;
}

}  // namespace dirac8::algebra
