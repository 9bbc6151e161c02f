#pragma once

#include <array>

#include <nlohmann/json.hpp>

#include "dirac8/constants.hpp"
#include "dirac8/fields.hpp"
#include "dirac8/matrix.hpp"

namespace dirac8::lorentz {

using fields::Real3;

/// Frame velocity v (same units as c). Boosts are passive: primed quantities are what an
/// observer moving with velocity v measures.
class Boost {
 public:
  Boost() = default;
  /// Throws DomainError unless |v| < c.
  explicit Boost(const Real3& v, double c = 1.0);

  const Real3& velocity() const { return v_; }
  double c() const { return c_; }
  Real3 beta() const { return {v_[0] / c_, v_[1] / c_, v_[2] / c_}; }
  double beta_squared() const;
  double gamma() const;
  Boost inverse() const { return Boost({-v_[0], -v_[1], -v_[2]}, c_); }

 private:
  Real3 v_{0.0, 0.0, 0.0};
  double c_ = 1.0;
};

/// (x0, x) with x0 = c t, or (E/c, p), or (c rho, J).
struct FourVector {
  double t = 0.0;
  Real3 x{0.0, 0.0, 0.0};
};

/// x0^2 - |x|^2.
double minkowski_norm(const FourVector& x);

FourVector four_vector_boost(const FourVector& x, const Boost& b);

/// Real 4×4 passive boost matrix acting on (x0, x).
std::array<std::array<double, 4>, 4> boost_matrix_4(const Boost& b);

/// L = sqrt((gamma+1)/2) + sigma.(gamma v / c) / sqrt(2 (1 + gamma)).
Matrix2 boost_matrix_L(const Boost& b);

/// Real E and B amplitudes at one point or for one plane-wave mode.
struct FieldPair {
  Real3 E{0.0, 0.0, 0.0};
  Real3 B{0.0, 0.0, 0.0};
};

/// diag(L⁻¹⊗L, L⊗L⁻¹) in the chiral basis, the literal field law. It is the transformation
/// law of the four-current term (see source_term_chiral) and cannot map field states to field states.
Matrix8 printed_em_law(const Boost& b);

/// diag(L⊗L, L⁻¹⊗L⁻¹) in the chiral basis: the self-dual/anti-self-dual halves carry the
/// (1,0) and (0,1) representations, which is what the field components need.
Matrix8 em_law_chiral(const Boost& b);

/// em_law_chiral carried to the rotated basis with the chiral intertwiner.
Matrix8 em_law(const Boost& b);

/// diag(I2⊗L, I2⊗L⁻¹) in the chiral basis.
Matrix8 electron_law_chiral(const Boost& b);

/// electron_law_chiral carried to the rotated basis.
Matrix8 electron_law(const Boost& b);

/// Boosts a photon-embedded value; throws ConstraintViolation if components 0 or 4 of the
/// result exceed the tolerance.
Vector<8> em_wavefunction_transform(const Vector<8>& psi, const Boost& b,
                                    double tolerance = fields::kConstraintTolerance);
fields::SpinorField8 em_wavefunction_transform(const fields::SpinorField8& psi, const Boost& b,
                                               double tolerance = fields::kConstraintTolerance);

Vector<8> electron_wavefunction_transform(const Vector<8>& psi, const Boost& b);
fields::SpinorField8 electron_wavefunction_transform(const fields::SpinorField8& psi, const Boost& b);

/// The 4×4 T matrix of the four-current term, entries taken literally.
Matrix4 t_matrix();

/// Y = -(4 pi hbar / c) diag(T, T) [c rho, -iJ, -c rho, -iJ] (literal form).
Vector<8> nonmomentum_em(double rho, const Real3& J, const Constants& k = {});

/// Y = (4 pi hbar / c) gamma^0 K^dag [c rho, -iJ, 0, 0, 0, 0]: the chiral-basis image of the
/// source vector that drives the rotated-basis evolution.
Vector<8> source_term_chiral(double rho, const Real3& J, const Constants& k = {});

struct CompatibilityReport {
  double literal_residual = 0.0;   // |law Y(j) - Y(boosted j)| / |Y(j)| for the literal T form
  double derived_residual = 0.0;   // same for source_term_chiral
};

/// Measures whether the four-current term transforms like the field under printed_em_law.
CompatibilityReport nonmomentum_compatibility(double rho, const Real3& J, const Boost& b, const Constants& k = {});

/// F from field_tensor, boosted with the orthogonal complex-Minkowski matrix, read back.
FieldPair tensor_boost_oracle(const FieldPair& f, const Boost& b);

/// E' = gamma(E + beta×B) - gamma²/(gamma+1) beta(beta.E), B' = gamma(B - beta×E) - ...
FieldPair closed_form_field_boost(const FieldPair& f, const Boost& b);

/// Boost through the spinor law: embed, apply em_wavefunction_transform, extract.
FieldPair spinor_field_boost(const FieldPair& f, const Boost& b);

struct BoostComparison {
  FieldPair input;
  Real3 velocity{};
  FieldPair spinor;
  FieldPair tensor;
  FieldPair closed_form;
  double max_deviation = 0.0;      // largest pairwise difference between the three pathways
  double constraint_residual = 0.0;
};

BoostComparison compare_boost_pathways(const FieldPair& f, const Boost& b);

void to_json(nlohmann::json& j, const FieldPair& f);
void to_json(nlohmann::json& j, const BoostComparison& r);

}  // namespace dirac8::lorentz
