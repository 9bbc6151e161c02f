#include "doctest.h"

#include <cmath>

#include "dirac8/spectrum.hpp"
#include "dirac8/spin.hpp"

using namespace dirac8;
using namespace dirac8::spin;

TEST_CASE("spin-1/2 spectrum and closure") {
  const auto s = spin_half();
  for (const auto& m : s.S) CHECK(m == m.dagger());
  const auto spec = hermitian_spectrum(s.S[2]);
  CHECK(spec.residual <= 1e-12);
  const auto groups = group_eigenvalues(spec.eigenvalues, 1e-9);
  REQUIRE(groups.size() == 2);
  CHECK(groups[0].first == doctest::Approx(-0.5));
  CHECK(groups[0].second == 4);
  CHECK(groups[1].first == doctest::Approx(0.5));
  CHECK(groups[1].second == 4);
  CHECK(verify_closure(s).deviation <= 1e-15);
  CHECK(commutator(s.S[0], s.S[1]) == s.S[2] * kI);
}

TEST_CASE("spin-1 spectrum and closure") {
  const auto s = spin_one();
  const auto spec = hermitian_spectrum(s.S[2]);
  CHECK(spec.residual <= 1e-12);
  const auto groups = group_eigenvalues(spec.eigenvalues, 1e-9);
  REQUIRE(groups.size() == 3);
  CHECK(groups[0].first == doctest::Approx(-1.0));
  CHECK(groups[0].second == 2);
  CHECK(std::abs(groups[1].first) < 1e-12);
  CHECK(groups[1].second == 4);
  CHECK(groups[2].second == 2);
  CHECK(commutator(s.S[0], s.S[1]) == s.S[2] * kI);

  const Matrix8 s2 = s.S[0] * s.S[0] + s.S[1] * s.S[1] + s.S[2] * s.S[2];
  const auto g2 = group_eigenvalues(hermitian_spectrum(s2).eigenvalues, 1e-9);
  REQUIRE(g2.size() == 2);
  CHECK(std::abs(g2[0].first) < 1e-12);
  CHECK(g2[0].second == 2);
  CHECK(g2[1].first == doctest::Approx(2.0));
  CHECK(g2[1].second == 6);
}

TEST_CASE("hbar scales the operators") {
  const Constants k{1.0, 0.25};
  const auto s = spin_one(k);
  CHECK(commutator(s.S[0], s.S[1]) == s.S[2] * (kI * k.hbar));
  CHECK(verify_spin_evolution(s, k).deviation == 0.0);
  CHECK(verify_spin_evolution(spin_half(k), k).deviation == 0.0);
}

TEST_CASE("spin evolution identity") {
  const auto half = verify_spin_evolution(spin_half());
  CHECK(half.pass);
  CHECK(half.deviation == 0.0);
  const auto one = verify_spin_evolution(spin_one());
  CHECK(one.pass);
  CHECK(one.deviation == 0.0);

  auto bad = spin_half();
  bad.S[2] = bad.S[2] * 2.0;
  CHECK_FALSE(verify_spin_evolution(bad).pass);
}

TEST_CASE("constraint subspace") {
  CHECK(constraint_leakage(spin_one()) == 0.0);
  CHECK(constraint_leakage(spin_half()) > 0.1);
}

TEST_CASE("photon spin selection") {
  const auto grid = GridSpec::line(4, 1.0);
  auto f = fields::EMField::zero(grid);
  f.E[0] = {1.0, 0.0, 0.0};
  const auto r = photon_spin_selection(fields::embed_em(f));
  CHECK(r.spin_one_rows == 0.0);
  CHECK(r.spin_half_rows > 0.1);
  CHECK(r.witness_input[1] == cplx(1.0));
  CHECK(std::max(std::abs(r.witness_output[0]), std::abs(r.witness_output[4])) == r.spin_half_rows);

  const auto z = photon_spin_selection(fields::embed_em(fields::EMField::zero(grid)));
  CHECK(z.spin_one_rows == 0.0);
  CHECK(z.spin_half_rows == 0.0);
}

TEST_CASE("spin of a circularly polarised field") {
  // Positive-frequency circular state E = (x + i y)/sqrt2 e^{ikz}, B = k^ x E.
  const auto grid = GridSpec::line(64, 2.0 * kPi);
  auto psi = fields::SpinorField8::zero(grid, fields::SpinorKind::photon_embedded);
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const cplx ph = std::exp(kI * 3.0 * grid.position(p)[2]) / std::sqrt(2.0);
    const fields::Vec3 e{ph, kI * ph, 0.0};
    const fields::Vec3 b{-kI * ph, ph, 0.0};
    psi.psi[p] = fields::embed_em_point(e, b);
  }
  const auto ex = angular_momentum(psi);
  CHECK(ex.spin[2] == doctest::Approx(1.0));
  CHECK(std::abs(ex.spin[0]) < 1e-14);
  CHECK(std::abs(ex.orbital[2]) < 1e-14);
}

TEST_CASE("orbital angular momentum of a vortex") {
  // psi ~ (x + i y) g(r) in component 1 carries L_z = hbar.
  const auto grid = GridSpec::cube(32, 20.0);
  auto psi = fields::SpinorField8::zero(grid, fields::SpinorKind::generic);
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const auto r = grid.centred_position(p);
    const double r2 = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
    psi.psi[p][1] = cplx(r[0], r[1]) * std::exp(-r2 / (2.0 * 1.5 * 1.5));
  }
  const auto ex = angular_momentum(psi);
  CHECK(ex.orbital[2] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(ex.orbital[0]) < 1e-10);
  CHECK(ex.boundary_weight < 1e-6);
}

TEST_CASE("boundary warning") {
  const auto grid = GridSpec::line(32, 4.0);
  auto psi = fields::SpinorField8::zero(grid, fields::SpinorKind::generic);
  for (auto& v : psi.psi) v[1] = 1.0;
  const auto s = angular_momentum_series({0.0}, {psi});
  CHECK(s.boundary_warning);
}
