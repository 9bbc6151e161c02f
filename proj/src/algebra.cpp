#include "dirac8/algebra.hpp"

#include <cmath>
#include <utility>

namespace dirac8::algebra {

namespace {

Matrix4 unit4(std::size_t r, std::size_t c, cplx v) {
  Matrix4 m;
  m(r, c) = v;
  return m;
}

// P14 · [[M1,0,M2,0],[M2,0,-M1,0],[0,M1,0,M2],[0,M2,0,-M1]] without the 1/sqrt(2).
Matrix8 unitary_u_unscaled() {
  const auto s = pauli_matrices();
  const Matrix2 m1 = Matrix2::diagonal({1.0, kI});
  const Matrix2 m2 = m1 * s[0];
  const Matrix2 zero;
  const std::array<std::array<Matrix2, 4>, 4> blocks{{
      {m1, zero, m2, zero},
      {m2, zero, -m1, zero},
      {zero, m1, zero, m2},
      {zero, m2, zero, -m1},
  }};
  Matrix8 b;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) b.set_block(2 * r, 2 * c, blocks[r][c]);
  return permutation_p14() * b;
}

}  // namespace

std::array<Matrix2, 3> pauli_matrices() {
  return {Matrix2{{0.0, 1.0}, {1.0, 0.0}}, Matrix2{{0.0, -kI}, {kI, 0.0}},
          Matrix2{{1.0, 0.0}, {0.0, -1.0}}};
}

DiracSet4 dirac44() {
  const auto s = pauli_matrices();
  const Matrix2 zero;
  const Matrix2 id = Matrix2::identity();
  DiracSet4 d;
  for (std::size_t i = 0; i < 3; ++i) d.alpha[i] = block2x2(zero, s[i], s[i], zero);
  d.beta = block_diag(id, Matrix2(-id));
  return d;
}

DiracSet8 dirac88() {
  const auto d4 = dirac44();
  const Matrix2 id = Matrix2::identity();
  DiracSet8 d;
  for (std::size_t i = 0; i < 3; ++i) d.alpha[i] = kron(id, d4.alpha[i]);
  d.beta = kron(id, d4.beta);
  return d;
}

Generators generators() {
  Generators g;
  for (std::size_t i = 0; i < 3; ++i) {
    // kappa_i couples the time slot 0 with spatial slot i.
    g.kappa[i] = unit4(0, i + 1, -kI) + unit4(i + 1, 0, kI);
  }
  g.theta[0] = unit4(2, 3, -kI) + unit4(3, 2, kI);
  g.theta[1] = unit4(1, 3, kI) + unit4(3, 1, -kI);
  g.theta[2] = unit4(1, 2, -kI) + unit4(2, 1, kI);
  g.eta = Matrix4::diagonal({1.0, -1.0, -1.0, -1.0});
  return g;
}

Matrix8 permutation_p14() {
  Matrix8 p = Matrix8::identity();
  p(0, 0) = 0.0;
  p(4, 4) = 0.0;
  p(0, 4) = 1.0;
  p(4, 0) = 1.0;
  return p;
}

Matrix8 unitary_u() { return unitary_u_unscaled() * (1.0 / std::sqrt(2.0)); }

DiracSet8 dirac88_primed() {
  const auto g = generators();
  DiracSet8 d;
  for (std::size_t i = 0; i < 3; ++i) d.alpha[i] = block2x2(g.kappa[i], g.theta[i], g.theta[i], g.kappa[i]);
  d.beta = block_diag(Matrix4(-g.eta), g.eta);
  return d;
}

std::array<Matrix8, 4> gamma88() {
  const auto s = pauli_matrices();
  const Matrix2 id = Matrix2::identity();
  const Matrix4 zero;
  const Matrix4 i4 = kron(id, id);
  std::array<Matrix8, 4> g;
  g[0] = block2x2(zero, i4, i4, zero);
  for (std::size_t i = 0; i < 3; ++i) {
    const Matrix4 b = kron(id, s[i]);
    g[i + 1] = block2x2(zero, b, Matrix4(-b), zero);
  }
  return g;
}

Matrix8 chiral_to_primed() {
  const Matrix2 id = Matrix2::identity();
  // Chiral -> Dirac on one 4-spinor, up to a factor 1/sqrt(2): [[I, -I], [-I, -I]].
  const Matrix4 w = block2x2(id, Matrix2(-id), Matrix2(-id), Matrix2(-id));
  // Chiral ordering (half h, copy c, spin s) -> Dirac-product ordering (copy c, half h, spin s).
  Matrix8 reorder;
  for (std::size_t h = 0; h < 2; ++h)
    for (std::size_t c = 0; c < 2; ++c)
      for (std::size_t s = 0; s < 2; ++s) reorder(4 * c + 2 * h + s, 4 * h + 2 * c + s) = 1.0;
  const Matrix2 copy_swap{{0.0, -1.0}, {1.0, 0.0}};
  const Matrix8 copy = kron(id, kron(copy_swap, id));
  // Both scale factors are 1/sqrt(2); their product 1/2 is exact.
  return unitary_u_unscaled() * kron(id, w) * reorder * copy * 0.5;
}

AlgebraReport make_report(std::string identity, double deviation, double tolerance) {
  return AlgebraReport{std::move(identity), deviation, tolerance, deviation <= tolerance};
}

void to_json(nlohmann::json& j, const AlgebraReport& r) {
  j = nlohmann::json{{"identity", r.identity}, {"deviation", r.deviation}, {"tolerance", r.tolerance},
                     {"pass", r.pass}};
}

MatrixCatalogue MatrixCatalogue::standard() {
  return MatrixCatalogue{pauli_matrices(), dirac44(), dirac88(), generators(), unitary_u(), gamma88(),
                         chiral_to_primed()};
}

namespace {

template <std::size_t N>
void dirac_conditions(const std::array<SquareMatrix<N>, 3>& alpha, const SquareMatrix<N>& beta,
                      const std::string& label, std::vector<AlgebraReport>& out) {
  const auto id = SquareMatrix<N>::identity();
  double aa = 0.0, ab = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const SquareMatrix<N> expect = i == j ? id * 2.0 : SquareMatrix<N>{};
      aa = std::max(aa, max_abs_diff(anticommutator(alpha[i], alpha[j]), expect));
    }
    ab = std::max(ab, anticommutator(alpha[i], beta).max_abs());
  }
  out.push_back(make_report(label + ": {alpha_i, alpha_j} = 2 delta_ij", aa, 0.0));
  out.push_back(make_report(label + ": {alpha_i, beta} = 0", ab, 0.0));
  out.push_back(make_report(label + ": beta^2 = 1", max_abs_diff(beta * beta, id), 0.0));
}

const char* kAxis[3] = {"1", "2", "3"};

}  // namespace

std::vector<AlgebraReport> verify_identities(const MatrixCatalogue& cat) {
  std::vector<AlgebraReport> out;
  const auto& s = cat.pauli;
  const Matrix2 i2 = Matrix2::identity();

  double invol = 0.0, prod = 0.0;
  for (int i = 0; i < 3; ++i) {
    invol = std::max(invol, max_abs_diff(s[i] * s[i], i2));
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    prod = std::max(prod, max_abs_diff(s[i] * s[j], s[k] * kI));
  }
  out.push_back(make_report("pauli: sigma_i^2 = 1", invol, 0.0));
  out.push_back(make_report("pauli: sigma_i sigma_j = i eps_ijk sigma_k", prod, 0.0));

  dirac_conditions(cat.dirac4.alpha, cat.dirac4.beta, "dirac 4x4", out);
  dirac_conditions(cat.dirac8.alpha, cat.dirac8.beta, "dirac 8x8", out);

  const Matrix8 u = cat.u;
  const Matrix8 ud = u.dagger();
  out.push_back(make_report("U U^dag = 1", max_abs_diff(u * ud, Matrix8::identity()), kUnitaryTolerance));

  const auto& g = cat.gens;
  for (std::size_t i = 0; i < 3; ++i) {
    const Matrix8 expect = block2x2(g.kappa[i], g.theta[i], g.theta[i], g.kappa[i]);
    out.push_back(make_report(std::string("U alpha_") + kAxis[i] + " U^dag = [[kappa, theta], [theta, kappa]]",
                              max_abs_diff(u * cat.dirac8.alpha[i] * ud, expect), kUnitaryTolerance));
  }
  out.push_back(make_report("U beta U^dag = diag(-eta, eta)",
                            max_abs_diff(u * cat.dirac8.beta * ud, block_diag(Matrix4(-g.eta), g.eta)),
                            kUnitaryTolerance));

  std::array<Matrix8, 3> alpha_p;
  for (std::size_t i = 0; i < 3; ++i) alpha_p[i] = block2x2(g.kappa[i], g.theta[i], g.theta[i], g.kappa[i]);
  const Matrix8 beta_p = block_diag(Matrix4(-g.eta), g.eta);
  dirac_conditions(alpha_p, beta_p, "dirac 8x8 rotated basis", out);

  struct Family {
    const char* name;
    const std::array<Matrix4, 3>* a;
    const std::array<Matrix4, 3>* b;
    const std::array<Matrix4, 3>* result;
    const char* rname;
  };
  const Family families[] = {
      {"kappa,kappa", &g.kappa, &g.kappa, &g.theta, "theta"},
      {"theta,theta", &g.theta, &g.theta, &g.theta, "theta"},
      {"kappa,theta", &g.kappa, &g.theta, &g.kappa, "kappa"},
  };
  for (const auto& f : families) {
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3, k = (i + 2) % 3;
      const Matrix4 lhs = commutator((*f.a)[i], (*f.b)[j]);
      const Matrix4 rhs = (*f.result)[k] * kI;
      const std::string fam(f.name);
      const auto comma = fam.find(',');
      out.push_back(make_report("[" + fam.substr(0, comma) + "_" + kAxis[i] + ", " + fam.substr(comma + 1) + "_" +
                                    kAxis[j] + "] = +i " + f.rname + "_" + kAxis[k],
                                max_abs_diff(lhs, rhs), 0.0));
    }
  }

  const std::array<double, 4> metric{1.0, -1.0, -1.0, -1.0};
  double gam = 0.0;
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) {
      const Matrix8 expect = mu == nu ? Matrix8::identity() * (2.0 * metric[mu]) : Matrix8{};
      gam = std::max(gam, max_abs_diff(anticommutator(cat.gamma[mu], cat.gamma[nu]), expect));
    }
  out.push_back(make_report("{gamma^mu, gamma^nu} = 2 g^munu", gam, 0.0));

  const Matrix8 k = cat.chiral;
  const Matrix8 kd = k.dagger();
  double link = max_abs_diff(k * kd, Matrix8::identity());
  for (std::size_t i = 0; i < 3; ++i)
    link = std::max(link, max_abs_diff(k * (cat.gamma[0] * cat.gamma[i + 1]) * kd, alpha_p[i]));
  link = std::max(link, max_abs_diff(k * Matrix8(-cat.gamma[0]) * kd, beta_p));
  out.push_back(make_report("chiral basis: K gamma^0 gamma^i K^dag = alpha', K(-gamma^0)K^dag = beta'", link,
                            kUnitaryTolerance));
  return out;
}

std::vector<AlgebraReport> verify_identities() { return verify_identities(MatrixCatalogue::standard()); }

}  // namespace dirac8::algebra
