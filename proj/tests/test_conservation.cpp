#include "doctest.h"

#include <cmath>

#include "dirac8/evolution.hpp"
#include "dirac8/spin.hpp"
#include "dirac8/states.hpp"

using namespace dirac8;

TEST_CASE("circular photon packet keeps its helicity") {
  const auto grid = GridSpec::line(256, 40.0);
  for (int helicity : {+1, -1}) {
    const auto psi = states::circular_photon_packet(grid, 20, helicity, 3.0);
    CHECK(fields::constraint_residual(psi) <= 1e-12);
    const auto run = evolution::run_free(psi, evolution::sample_times(5.0, 21));
    const auto s = spin::angular_momentum_series(run.times, run.samples);
    for (const auto& v : s.spin.values) CHECK(std::abs(v[2] - helicity) <= 1e-10);
    CHECK(spin::max_relative_drift(s.total, 1.0) <= 1e-10);
  }
}

TEST_CASE("linear photon packet carries no spin") {
  const auto grid = GridSpec::line(256, 40.0);
  auto f = fields::EMField::zero(grid);
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const double z = grid.centred_position(p)[2];
    const double v = std::cos(2.0 * kPi * 20.0 * z / 40.0) * std::exp(-z * z / 18.0);
    f.E[p] = {v, 0.0, 0.0};
  }
  const auto run = evolution::run_free(fields::embed_em(f), evolution::sample_times(5.0, 11));
  const auto s = spin::angular_momentum_series(run.times, run.samples);
  for (const auto& v : s.spin.values) CHECK(std::abs(v[2]) <= 1e-12);
}

TEST_CASE("3-D electron vortex packet conserves norm, energy and L + S") {
  const Constants c{1.0, 1.0};
  const auto grid = GridSpec::cube(32, 20.0);
  const double mass = 10.0;
  const auto psi = states::electron_vortex_packet(grid, mass, 1.5, {0.0, 0.0, 0.5}, 1, c);
  const double period = 2.0 * kPi / evolution::angular_frequency({0.0, 0.0, 0.5}, mass, c);
  const auto run = evolution::run_free(psi, evolution::sample_times(10.0 * period, 41), c);

  const double n0 = evolution::norm(run.samples.front());
  const double e0 = evolution::energy(run.samples.front(), c);
  double dn = 0.0, de = 0.0;
  for (const auto& s : run.samples) {
    dn = std::max(dn, std::abs(evolution::norm(s) - n0) / n0);
    de = std::max(de, std::abs(evolution::energy(s, c) - e0) / std::abs(e0));
  }
  CHECK(dn <= 1e-8);
  CHECK(de <= 1e-8);

  const auto am = spin::angular_momentum_series(run.times, run.samples, c);
  CHECK_FALSE(am.boundary_warning);
  CHECK(am.orbital.values.front()[2] > 0.5);
  CHECK(spin::max_relative_drift(am.total, c.hbar) <= 1e-8);
}
