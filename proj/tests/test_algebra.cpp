#include "doctest.h"

#include <string>

#include "dirac8/algebra.hpp"
#include "dirac8/spectrum.hpp"

using namespace dirac8;
using namespace dirac8::algebra;

TEST_CASE("pauli matrices") {
  const auto s = pauli_matrices();
  CHECK(s[0] * s[0] == Matrix2::identity());
  CHECK(s[0] * s[1] == s[2] * kI);
  CHECK(s[2](0, 0) == cplx(1.0));
  CHECK(s[2](1, 1) == cplx(-1.0));
}

TEST_CASE("dirac 4x4 set") {
  const auto d = dirac44();
  CHECK(d.alpha[0].block<2>(0, 2) == pauli_matrices()[0]);
  CHECK(d.beta * d.beta == Matrix4::identity());
  CHECK(anticommutator(d.alpha[0], d.beta) == Matrix4{});
}

TEST_CASE("dirac 8x8 set") {
  const auto d = dirac88();
  const auto d4 = dirac44();
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const Matrix8 expect = i == j ? Matrix8::identity() * 2.0 : Matrix8{};
      CHECK(anticommutator(d.alpha[i], d.alpha[j]) == expect);
    }
    CHECK(anticommutator(d.alpha[i], d.beta) == Matrix8{});
  }
  CHECK(d.alpha[0].block<4>(0, 0) == d4.alpha[0]);
  CHECK(d.alpha[0].block<4>(4, 4) == d4.alpha[0]);
  CHECK(d.alpha[0].block<4>(0, 4) == Matrix4{});
}

TEST_CASE("generator entries") {
  const auto g = generators();
  CHECK(g.kappa[0](0, 1) == -kI);
  CHECK(g.kappa[0](1, 0) == kI);
  CHECK(g.theta[2](1, 2) == -kI);
  CHECK(g.theta[2](2, 1) == kI);
  CHECK(g.eta == Matrix4::diagonal({1.0, -1.0, -1.0, -1.0}));
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(g.kappa[i] == g.kappa[i].dagger());
    CHECK(g.theta[i] == g.theta[i].dagger());
  }
}

TEST_CASE("generator commutators close with +i") {
  const auto g = generators();
  CHECK(commutator(g.kappa[0], g.kappa[1]) == g.theta[2] * kI);
  CHECK(commutator(g.theta[0], g.theta[1]) == g.theta[2] * kI);
  CHECK(commutator(g.kappa[0], g.theta[1]) == g.kappa[2] * kI);
  // Full antisymmetric structure, not only cyclic pairs.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Matrix4 tt, kk, kt;
      for (int k = 0; k < 3; ++k) {
        tt += g.theta[k] * (kI * double(levi_civita(i, j, k)));
        kt += g.kappa[k] * (kI * double(levi_civita(i, j, k)));
      }
      kk = tt;
      CHECK(commutator(g.theta[i], g.theta[j]) == tt);
      CHECK(commutator(g.kappa[i], g.kappa[j]) == kk);
      CHECK(commutator(g.kappa[i], g.theta[j]) == kt);
    }
}

TEST_CASE("unitary change of basis") {
  const Matrix8 u = unitary_u();
  CHECK(max_abs_diff(u * u.dagger(), Matrix8::identity()) <= 1e-15);
  const auto d = dirac88();
  const auto p = dirac88_primed();
  const auto g = generators();
  CHECK(max_abs_diff(u * d.alpha[2] * u.dagger(), block2x2(g.kappa[2], g.theta[2], g.theta[2], g.kappa[2])) <= 1e-15);
  for (std::size_t i = 0; i < 3; ++i) CHECK(max_abs_diff(u * d.alpha[i] * u.dagger(), p.alpha[i]) <= 1e-15);
  CHECK(max_abs_diff(u * d.beta * u.dagger(), block_diag(Matrix4(-g.eta), g.eta)) <= 1e-15);
}

TEST_CASE("entries of U are 0 or of modulus 1/sqrt2") {
  const Matrix8 u = unitary_u();
  for (const auto& v : u.entries()) {
    const double a = std::abs(v);
    CHECK((a == 0.0 || std::abs(a - 1.0 / std::sqrt(2.0)) < 1e-16));
  }
}

TEST_CASE("other swaps do not reproduce the rotated basis") {
  // Only the 0 <-> 4 exchange works; 0 <-> 3 is the naive reading and fails.
  Matrix8 p03 = Matrix8::identity();
  p03(0, 0) = p03(3, 3) = 0.0;
  p03(0, 3) = p03(3, 0) = 1.0;
  const Matrix8 u_alt = p03 * permutation_p14() * unitary_u();
  const auto d = dirac88();
  const auto p = dirac88_primed();
  CHECK(max_abs_diff(u_alt * d.beta * u_alt.dagger(), p.beta) > 0.5);
}

TEST_CASE("gamma matrices") {
  const auto g = gamma88();
  CHECK(g[0] * g[0] == Matrix8::identity());
  CHECK(g[1] * g[1] == -Matrix8::identity());
  CHECK(anticommutator(g[0], g[1]) == Matrix8{});
}

TEST_CASE("chiral intertwiner") {
  const Matrix8 k = chiral_to_primed();
  const auto g = gamma88();
  const auto p = dirac88_primed();
  CHECK(max_abs_diff(k * k.dagger(), Matrix8::identity()) <= 1e-15);
  for (std::size_t i = 0; i < 3; ++i) CHECK(max_abs_diff(k * g[0] * g[i + 1] * k.dagger(), p.alpha[i]) <= 1e-15);
  CHECK(max_abs_diff(k * Matrix8(-g[0]) * k.dagger(), p.beta) <= 1e-15);
}

TEST_CASE("verify_identities catalogue") {
  const auto reports = verify_identities();
  CHECK(reports.size() >= 20);
  for (const auto& r : reports) {
    INFO(r.identity);
    CHECK(r.pass);
    CHECK(r.deviation <= 1e-15);
  }
  std::size_t commutators = 0;
  for (const auto& r : reports)
    if (r.identity.front() == '[') {
      ++commutators;
      CHECK(r.deviation == 0.0);
    }
  CHECK(commutators == 9);
}

TEST_CASE("corrupted kappa is caught") {
  auto cat = MatrixCatalogue::standard();
  cat.gens.kappa[0](0, 1) = kI;
  const auto reports = verify_identities(cat);
  bool kk12_failed = false;
  for (const auto& r : reports)
    if (r.identity == "[kappa_1, kappa_2] = +i theta_3") kk12_failed = !r.pass;
  CHECK(kk12_failed);
}

TEST_CASE("report json shape") {
  nlohmann::json j = make_report("x", 0.5, 1.0);
  CHECK(j["identity"] == "x");
  CHECK(j["pass"] == true);
  CHECK(j["deviation"] == 0.5);
  CHECK(j["tolerance"] == 1.0);
  CHECK_FALSE(make_report("y", 2.0, 1.0).pass);
}

TEST_CASE("hermitian spectrum helper") {
  const auto s = pauli_matrices();
  const auto spec = hermitian_spectrum(s[1]);
  CHECK(spec.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(spec.eigenvalues[1] == doctest::Approx(1.0));
  CHECK(spec.residual < 1e-14);
  const auto groups = group_eigenvalues({-1.0, -1.0, 0.0, 1.0}, 1e-9);
  REQUIRE(groups.size() == 3);
  CHECK(groups[0].second == 2);
}
