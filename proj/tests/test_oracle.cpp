#include "doctest.h"

#include <cmath>
#include <random>

#include "dirac8/errors.hpp"
#include "dirac8/evolution.hpp"
#include "dirac8/oracle.hpp"
#include "dirac8/states.hpp"

using namespace dirac8;

namespace {

// Random band-limited divergence-free field on a 1-D line: transverse components only.
fields::EMField random_transverse(const GridSpec& grid, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  auto f = fields::EMField::zero(grid);
  for (int m = 1; m <= 6; ++m) {
    const double k = 2.0 * kPi * m / grid.lengths()[2];
    std::array<double, 8> a;
    for (auto& v : a) v = g(rng) / m;
    for (std::size_t p = 0; p < grid.size(); ++p) {
      const double z = grid.position(p)[2], c = std::cos(k * z), s = std::sin(k * z);
      f.E[p][0] += a[0] * c + a[1] * s;
      f.E[p][1] += a[2] * c + a[3] * s;
      f.B[p][0] += a[4] * c + a[5] * s;
      f.B[p][1] += a[6] * c + a[7] * s;
    }
  }
  return f;
}

}  // namespace

TEST_CASE("oracle plane wave travels at c") {
  const auto grid = GridSpec::line(256, 2.0 * kPi);
  const auto times = evolution::sample_times(2.0, 9);
  const auto run = oracle::maxwell_evolve(states::photon_plane_wave(grid, 5), fields::FourCurrent{grid, {}}, times);
  double worst = 0.0;
  for (std::size_t s = 0; s < times.size(); ++s)
    for (std::size_t p = 0; p < grid.size(); ++p) {
      const double v = std::cos(5.0 * (grid.position(p)[2] - times[s]));
      worst = std::max({worst, std::abs(run.samples[s].E[p][0] - v), std::abs(run.samples[s].B[p][1] - v),
                        std::abs(run.samples[s].E[p][1]), std::abs(run.samples[s].B[p][0])});
    }
  CHECK(worst <= 1e-12);
}

TEST_CASE("oracle conserves energy without sources") {
  const auto grid = GridSpec::line(256, 10.0);
  const auto run = oracle::maxwell_evolve(random_transverse(grid, 7), fields::FourCurrent{grid, {}},
                                          evolution::sample_times(30.0, 50));
  const auto e = oracle::energies(run);
  for (double v : e) CHECK(std::abs(v - e.front()) <= 1e-12 * e.front());
  CHECK(oracle::constraint_residual(run, fields::FourCurrent{grid, {}}) <= 1e-10);
}

TEST_CASE("oracle uniform current") {
  const auto grid = GridSpec::line(8, 1.0);
  const fields::Real3 j0{0.2, 0.0, -0.4};
  const auto times = evolution::sample_times(3.0, 13);
  const auto run = oracle::maxwell_evolve(fields::EMField::zero(grid), fields::uniform_current(grid, j0, 1.7), times);
  double worst = 0.0;
  for (std::size_t s = 0; s < times.size(); ++s)
    for (int a = 0; a < 3; ++a)
      worst = std::max(worst, std::abs(run.samples[s].E[0][a] + 4.0 * kPi * j0[a] * std::sin(1.7 * times[s]) / 1.7));
  CHECK(worst <= 1e-10);
}

TEST_CASE("free Dirac form agrees with the oracle") {
  const auto grid = GridSpec::line(256, 10.0);
  const auto f0 = random_transverse(grid, 11);
  const auto times = evolution::sample_times(5.0, 100);
  const auto dirac = evolution::run_free(fields::embed_em(f0), times);
  const auto classical = oracle::maxwell_evolve(f0, fields::FourCurrent{grid, {}}, times);
  const auto cmp = oracle::compare(dirac, classical);
  CHECK(cmp.samples == 100);
  CHECK(cmp.max_abs <= 1e-10);
  CHECK(cmp.rms > 0.1);
}

TEST_CASE("sourced dipole agrees with the oracle") {
  const auto grid = GridSpec::line(256, 16.0);
  const auto j = fields::dipole_current(grid, {0, 0, 8.0}, 0.6, {0.5, 0.0, 1.0}, 2.0);
  const auto times = evolution::sample_times(4.0, 100);
  const auto zero = fields::EMField::zero(grid);
  const auto dirac = evolution::evolve_sourced(fields::embed_em(zero), j, times);
  const auto classical = oracle::maxwell_evolve(zero, j, times);
  const auto cmp = oracle::compare(dirac, classical);
  CHECK(cmp.max_abs <= 1e-8);
  CHECK(cmp.rms > 1e-3);
  CHECK(oracle::constraint_residual(classical, j) <= 1e-10);
}

TEST_CASE("a sign error in B is caught") {
  const auto grid = GridSpec::line(64, 2.0 * kPi);
  const auto f0 = states::photon_plane_wave(grid, 2);
  auto wrong = f0;
  for (auto& b : wrong.B) b[1] = -b[1];
  const auto times = evolution::sample_times(1.0, 10);
  const auto dirac = evolution::run_free(fields::embed_em(f0), times);
  const auto classical = oracle::maxwell_evolve(wrong, fields::FourCurrent{grid, {}}, times);
  CHECK(oracle::compare(dirac, classical).max_relative > 0.5);
}

TEST_CASE("comparison rejects mismatched grids") {
  const auto a = GridSpec::line(16, 1.0), b = GridSpec::line(32, 1.0);
  const auto times = evolution::sample_times(1.0, 3);
  const auto ra = oracle::maxwell_evolve(fields::EMField::zero(a), fields::FourCurrent{a, {}}, times);
  const auto rb = oracle::maxwell_evolve(fields::EMField::zero(b), fields::FourCurrent{b, {}}, times);
  CHECK_THROWS_AS(oracle::compare(ra.samples, ra.times, rb), GridMismatch);
  const auto rc = oracle::maxwell_evolve(fields::EMField::zero(a), fields::FourCurrent{a, {}}, {0.0, 0.5});
  CHECK_THROWS_AS(oracle::compare(ra.samples, ra.times, rc), GridMismatch);
}
