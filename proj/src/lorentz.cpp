#include "dirac8/lorentz.hpp"

#include <cmath>
#include <sstream>

#include "dirac8/algebra.hpp"
#include "dirac8/errors.hpp"

namespace dirac8::lorentz {

namespace {

double dot(const Real3& a, const Real3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Real3 cross(const Real3& a, const Real3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double max_diff(const Real3& a, const Real3& b) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_diff(const FieldPair& a, const FieldPair& b) { return std::max(max_diff(a.E, b.E), max_diff(a.B, b.B)); }

Matrix8 to_rotated(const Matrix8& chiral) {
  const Matrix8 k = algebra::chiral_to_primed();
  return k * chiral * k.dagger();
}

fields::Vec3 complexify(const Real3& v) { return {v[0], v[1], v[2]}; }

template <std::size_t N>
double vec_norm(const Vector<N>& v) {
  return std::sqrt(norm2(v));
}

}  // namespace

Boost::Boost(const Real3& v, double c) : v_(v), c_(c) {
  if (!(c > 0.0)) throw DomainError("Boost: c must be positive");
  if (!(beta_squared() < 1.0)) {
    std::ostringstream msg;
    msg << "Boost: |v| must be below c (|v|/c = " << std::sqrt(beta_squared()) << ")";
    throw DomainError(msg.str());
  }
}

double Boost::beta_squared() const {
  const auto b = beta();
  return dot(b, b);
}

double Boost::gamma() const { return 1.0 / std::sqrt(1.0 - beta_squared()); }

double minkowski_norm(const FourVector& x) { return x.t * x.t - dot(x.x, x.x); }

std::array<std::array<double, 4>, 4> boost_matrix_4(const Boost& b) {
  const auto beta = b.beta();
  const double g = b.gamma();
  // (gamma - 1)/beta^2 = gamma^2/(gamma + 1), finite at beta = 0.
  const double q = g * g / (g + 1.0);
  std::array<std::array<double, 4>, 4> m{};
  m[0][0] = g;
  for (int i = 0; i < 3; ++i) {
    m[0][i + 1] = -g * beta[i];
    m[i + 1][0] = -g * beta[i];
    for (int j = 0; j < 3; ++j) m[i + 1][j + 1] = (i == j ? 1.0 : 0.0) + q * beta[i] * beta[j];
  }
  return m;
}

FourVector four_vector_boost(const FourVector& x, const Boost& b) {
  const auto m = boost_matrix_4(b);
  const std::array<double, 4> in{x.t, x.x[0], x.x[1], x.x[2]};
  std::array<double, 4> out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out[r] += m[r][c] * in[c];
  return FourVector{out[0], {out[1], out[2], out[3]}};
}

Matrix2 boost_matrix_L(const Boost& b) {
  const double g = b.gamma();
  const auto beta = b.beta();
  const auto s = algebra::pauli_matrices();
  Matrix2 l = Matrix2::identity() * std::sqrt(0.5 * (g + 1.0));
  const double scale = g / std::sqrt(2.0 * (1.0 + g));
  for (std::size_t i = 0; i < 3; ++i) l += s[i] * (scale * beta[i]);
  return l;
}

Matrix8 printed_em_law(const Boost& b) {
  const Matrix2 l = boost_matrix_L(b);
  const Matrix2 li = inverse(l);
  return block_diag(kron(li, l), kron(l, li));
}

Matrix8 em_law_chiral(const Boost& b) {
  const Matrix2 l = boost_matrix_L(b);
  const Matrix2 li = inverse(l);
  return block_diag(kron(l, l), kron(li, li));
}

Matrix8 em_law(const Boost& b) { return to_rotated(em_law_chiral(b)); }

Matrix8 electron_law_chiral(const Boost& b) {
  const Matrix2 l = boost_matrix_L(b);
  const Matrix2 id = Matrix2::identity();
  return block_diag(kron(id, l), kron(id, inverse(l)));
}

Matrix8 electron_law(const Boost& b) { return to_rotated(electron_law_chiral(b)); }

Vector<8> em_wavefunction_transform(const Vector<8>& psi, const Boost& b, double tolerance) {
  const Vector<8> out = em_law(b) * psi;
  const double residual = std::max(std::abs(out[0]), std::abs(out[4]));
  if (residual > tolerance) {
    std::ostringstream msg;
    msg << "constraint-violation: boosted components 0/4 reached " << residual;
    throw ConstraintViolation(msg.str());
  }
  return out;
}

fields::SpinorField8 em_wavefunction_transform(const fields::SpinorField8& psi, const Boost& b, double tolerance) {
  if (psi.kind != fields::SpinorKind::photon_embedded)
    throw std::invalid_argument("em_wavefunction_transform: input must be photon-embedded");
  const Matrix8 law = em_law(b);
  auto out = psi;
  for (auto& v : out.psi) v = law * v;
  const double residual = fields::constraint_residual(out);
  if (residual > tolerance) {
    std::ostringstream msg;
    msg << "constraint-violation: boosted components 0/4 reached " << residual;
    throw ConstraintViolation(msg.str());
  }
  return out;
}

Vector<8> electron_wavefunction_transform(const Vector<8>& psi, const Boost& b) { return electron_law(b) * psi; }

fields::SpinorField8 electron_wavefunction_transform(const fields::SpinorField8& psi, const Boost& b) {
  if (psi.kind == fields::SpinorKind::photon_embedded)
    throw std::invalid_argument("electron_wavefunction_transform: input must be electron or generic");
  const Matrix8 law = electron_law(b);
  auto out = psi;
  for (auto& v : out.psi) v = law * v;
  return out;
}

Matrix4 t_matrix() {
  return Matrix4{{1.0, 0.0, 0.0, -kI}, {0.0, -kI, 1.0, 0.0}, {0.0, -kI, -1.0, 0.0}, {1.0, 0.0, 0.0, kI}};
}

Vector<8> nonmomentum_em(double rho, const Real3& J, const Constants& k) {
  const Matrix4 t = t_matrix();
  const Matrix8 tt = block_diag(t, t);
  const Vector<8> j{k.c * rho, -kI * J[0], -kI * J[1], -kI * J[2], -k.c * rho, -kI * J[0], -kI * J[1], -kI * J[2]};
  Vector<8> y = tt * j;
  for (auto& v : y) v *= -4.0 * kPi * k.hbar / k.c;
  return y;
}

Vector<8> source_term_chiral(double rho, const Real3& J, const Constants& k) {
  const Vector<8> s{k.c * rho, -kI * J[0], -kI * J[1], -kI * J[2], 0.0, 0.0, 0.0, 0.0};
  const Matrix8 g0 = algebra::gamma88()[0];
  Vector<8> y = g0 * (algebra::chiral_to_primed().dagger() * s);
  for (auto& v : y) v *= 4.0 * kPi * k.hbar / k.c;
  return y;
}

CompatibilityReport nonmomentum_compatibility(double rho, const Real3& J, const Boost& b, const Constants& k) {
  const Matrix8 law = printed_em_law(b);
  const FourVector j{k.c * rho, J};
  const FourVector jb = four_vector_boost(j, b);
  const double rho_b = jb.t / k.c;

  auto residual = [&](auto build) {
    const Vector<8> y = build(rho, J, k);
    const Vector<8> lhs = law * y;
    const Vector<8> rhs = build(rho_b, jb.x, k);
    Vector<8> d{};
    for (std::size_t i = 0; i < 8; ++i) d[i] = lhs[i] - rhs[i];
    const double scale = vec_norm(y);
    return scale > 0.0 ? vec_norm(d) / scale : vec_norm(d);
  };
  CompatibilityReport r;
  r.literal_residual = residual([](double p, const Real3& c, const Constants& kk) { return nonmomentum_em(p, c, kk); });
  r.derived_residual =
      residual([](double p, const Real3& c, const Constants& kk) { return source_term_chiral(p, c, kk); });
  return r;
}

FieldPair tensor_boost_oracle(const FieldPair& f, const Boost& b) {
  const Matrix4 F = fields::field_tensor(f.E, f.B).F;
  const auto lam = boost_matrix_4(b);
  // Complex-Minkowski coordinates (i x0, x): D = diag(i, 1, 1, 1), O = D Lambda D^-1 is complex orthogonal.
  const Matrix4 d = Matrix4::diagonal({kI, 1.0, 1.0, 1.0});
  const Matrix4 d_inv = Matrix4::diagonal({-kI, 1.0, 1.0, 1.0});
  Matrix4 l;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) l(r, c) = lam[r][c];
  const Matrix4 o = d * l * d_inv;
  const Matrix4 fc = d * F * d;
  const Matrix4 fc_boosted = o * fc * o.transpose();
  const Matrix4 fb = d_inv * fc_boosted * d_inv;
  FieldPair out;
  for (std::size_t i = 0; i < 3; ++i) out.E[i] = -fb(0, i + 1).real();
  out.B[0] = -fb(2, 3).real();
  out.B[1] = -fb(3, 1).real();
  out.B[2] = -fb(1, 2).real();
  return out;
}

FieldPair closed_form_field_boost(const FieldPair& f, const Boost& b) {
  const auto beta = b.beta();
  const double g = b.gamma();
  const double q = g * g / (g + 1.0);
  const Real3 bxB = cross(beta, f.B);
  const Real3 bxE = cross(beta, f.E);
  const double bE = dot(beta, f.E);
  const double bB = dot(beta, f.B);
  FieldPair out;
  for (int i = 0; i < 3; ++i) {
    out.E[i] = g * (f.E[i] + bxB[i]) - q * beta[i] * bE;
    out.B[i] = g * (f.B[i] - bxE[i]) - q * beta[i] * bB;
  }
  return out;
}

FieldPair spinor_field_boost(const FieldPair& f, const Boost& b) {
  const Vector<8> psi = fields::embed_em_point(complexify(f.E), complexify(f.B));
  const Vector<8> out = em_wavefunction_transform(psi, b);
  FieldPair r;
  for (int i = 0; i < 3; ++i) {
    r.E[i] = out[1 + i].real();
    r.B[i] = (-kI * out[5 + i]).real();
  }
  return r;
}

BoostComparison compare_boost_pathways(const FieldPair& f, const Boost& b) {
  BoostComparison r;
  r.input = f;
  r.velocity = b.velocity();
  const Vector<8> psi = em_law(b) * fields::embed_em_point(complexify(f.E), complexify(f.B));
  r.constraint_residual = std::max(std::abs(psi[0]), std::abs(psi[4]));
  double imag = 0.0;
  for (int i = 0; i < 3; ++i) {
    r.spinor.E[i] = psi[1 + i].real();
    r.spinor.B[i] = (-kI * psi[5 + i]).real();
    imag = std::max({imag, std::abs(psi[1 + i].imag()), std::abs((-kI * psi[5 + i]).imag())});
  }
  r.tensor = tensor_boost_oracle(f, b);
  r.closed_form = closed_form_field_boost(f, b);
  r.max_deviation = std::max({max_diff(r.spinor, r.tensor), max_diff(r.spinor, r.closed_form),
                              max_diff(r.tensor, r.closed_form), imag});
  return r;
}

void to_json(nlohmann::json& j, const FieldPair& f) { j = nlohmann::json{{"E", f.E}, {"B", f.B}}; }

void to_json(nlohmann::json& j, const BoostComparison& r) {
  j = nlohmann::json{{"input", r.input},
                     {"v", r.velocity},
                     {"outputs",
                      {{"spinor", r.spinor}, {"tensor", r.tensor}, {"closedform", r.closed_form}}},
                     {"max_deviation", r.max_deviation},
                     {"constraint_residual", r.constraint_residual}};
}

}  // namespace dirac8::lorentz
