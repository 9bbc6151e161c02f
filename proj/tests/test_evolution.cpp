#include "doctest.h"

#include <cmath>

#include "dirac8/errors.hpp"
#include "dirac8/evolution.hpp"
#include "dirac8/lorentz.hpp"
#include "dirac8/spectrum.hpp"
#include "dirac8/states.hpp"

using namespace dirac8;
using namespace dirac8::evolution;

namespace {

double max_diff(const SpinorField8& a, const SpinorField8& b) {
  double m = 0.0;
  for (std::size_t p = 0; p < a.psi.size(); ++p) m = std::max(m, max_abs_diff(a.psi[p], b.psi[p]));
  return m;
}

double norm3_of(const Real3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

Vector<8> unit(std::size_t i) {
  Vector<8> v{};
  v[i] = 1.0;
  return v;
}

}  // namespace

TEST_CASE("hamiltonian spectra") {
  CHECK(hamiltonian_k({0, 0, 0}, 0.0) == Matrix8{});

  const auto s1 = hermitian_spectrum(hamiltonian_k({0.6, 0.0, 0.8}, 0.0));
  CHECK(s1.residual <= 1e-12);
  const auto g1 = group_eigenvalues(s1.eigenvalues, 1e-9);
  REQUIRE(g1.size() == 2);
  CHECK(g1[0].first == doctest::Approx(-1.0));
  CHECK(g1[0].second == 4);
  CHECK(g1[1].first == doctest::Approx(1.0));
  CHECK(g1[1].second == 4);

  const auto g2 = group_eigenvalues(hermitian_spectrum(hamiltonian_k({0, 0, 0}, 1.0)).eigenvalues, 1e-9);
  REQUIRE(g2.size() == 2);
  CHECK(g2[0].first == doctest::Approx(-1.0));
  CHECK(g2[1].second == 4);

  const Constants k{2.0, 0.5};
  const Real3 kv{0.3, -1.1, 0.4};
  const double w = angular_frequency(kv, 0.7, k);
  const auto g3 = group_eigenvalues(hermitian_spectrum(hamiltonian_k(kv, 0.7, k)).eigenvalues, 1e-9);
  REQUIRE(g3.size() == 2);
  CHECK(g3[1].first == doctest::Approx(k.hbar * w));
}

TEST_CASE("energy projectors") {
  const auto p = energy_projectors({0.2, 0.5, -1.0}, 0.3);
  CHECK(max_abs_diff(p.plus + p.minus, Matrix8::identity()) <= 1e-15);
  CHECK(max_abs_diff(p.plus * p.minus, Matrix8{}) <= 1e-15);
  CHECK(max_abs_diff(p.plus * p.plus, p.plus) <= 1e-15);
  CHECK(p.plus.trace().real() == doctest::Approx(4.0));
  CHECK_THROWS_AS(energy_projectors({0, 0, 0}, 0.0), DegenerateMode);
  CHECK_NOTHROW(energy_projectors({0, 0, 0}, 1.0));
}

TEST_CASE("free photon plane wave travels at c") {
  const auto grid = GridSpec::line(256, 2.0 * kPi);
  const auto psi0 = fields::embed_em(states::photon_plane_wave(grid, 3));
  CHECK(max_diff(evolve_free(psi0, 0.0), psi0) <= 1e-14);
  const double t = 0.731;
  const auto psi = evolve_free(psi0, t);
  auto expected = fields::EMField::zero(grid);
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const double v = std::cos(3.0 * grid.position(p)[2] - 3.0 * t);
    expected.E[p] = {v, 0.0, 0.0};
    expected.B[p] = {0.0, v, 0.0};
  }
  CHECK(max_diff(psi, fields::embed_em(expected)) <= 1e-12);
  CHECK(max_diff(evolve_free(evolve_free(psi0, 0.3), 0.5), evolve_free(psi0, 0.8)) <= 1e-12);
}

TEST_CASE("decomposition amplitudes lie in the projector images") {
  const auto grid = GridSpec::line(32, 5.0);
  auto psi = states::electron_vortex_packet(grid, 1.0, 0.6, {0.0, 0.0, 2.0}, 0);
  psi.psi[3][6] += 0.2;  // add some negative energy content
  const auto m = decompose(psi);
  for (std::size_t p = 0; p < m.plus.size(); ++p) {
    const auto pr = energy_projectors(grid.wave_vector(p), 1.0);
    CHECK(max_abs_diff(pr.plus * m.plus[p], m.plus[p]) <= 1e-12);
    CHECK(max_abs_diff(pr.minus * m.minus[p], m.minus[p]) <= 1e-12);
  }
}

TEST_CASE("norm and energy conservation in free evolution") {
  const auto grid = GridSpec::line(64, 10.0);
  auto psi = states::electron_vortex_packet(grid, 2.0, 0.8, {0.0, 0.0, 1.5}, 0);
  psi.psi[10][7] += 0.1;
  const double n0 = norm(psi), e0 = energy(psi);
  const auto later = evolve_free(psi, 17.3);
  CHECK(std::abs(norm(later) - n0) <= 1e-12 * n0);
  CHECK(std::abs(energy(later) - e0) <= 1e-12 * std::abs(e0));
}

TEST_CASE("sourced evolution without source matches free evolution") {
  const auto grid = GridSpec::line(64, 2.0 * kPi);
  const auto psi0 = fields::embed_em(states::photon_plane_wave(grid, 2));
  const auto times = sample_times(1.5, 11);
  const auto run = evolve_sourced(psi0, fields::FourCurrent{grid, {}}, times);
  const auto free = run_free(psi0, times);
  for (std::size_t s = 0; s < times.size(); ++s) CHECK(max_diff(run.samples[s], free.samples[s]) <= 1e-12);
}

TEST_CASE("uniform oscillating current") {
  const auto grid = GridSpec::line(16, 3.0);
  const Real3 j0{0.3, -0.2, 0.1};
  const double big = 2.5;
  const auto j = fields::uniform_current(grid, j0, big);
  const auto times = sample_times(4.0, 21);
  const auto run = evolve_sourced(SpinorField8::zero(grid, fields::SpinorKind::photon_embedded), j, times);
  double worst = 0.0;
  for (std::size_t s = 0; s < times.size(); ++s) {
    const auto f = fields::extract_em(run.samples[s]);
    for (std::size_t p = 0; p < grid.size(); ++p)
      for (int a = 0; a < 3; ++a) {
        const double e = -4.0 * kPi * j0[a] * std::sin(big * times[s]) / big;
        worst = std::max({worst, std::abs(f.E[p][a] - e), std::abs(f.B[p][a])});
      }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("sourced evolution refuses a continuity-violating source") {
  const auto grid = GridSpec::line(32, 4.0);
  auto j = fields::dipole_current(grid, {0, 0, 2.0}, 0.4, {0.0, 0.0, 1.0}, 3.0);
  j.terms[1].law.phase = 0.0;  // rho no longer matches div J
  const auto psi0 = SpinorField8::zero(grid, fields::SpinorKind::photon_embedded);
  CHECK_THROWS_AS(evolve_sourced(psi0, j, sample_times(1.0, 5)), ConstraintViolation);
}

TEST_CASE("sourced evolution refuses an initial Gauss violation") {
  const auto grid = GridSpec::line(32, 4.0);
  auto f = fields::EMField::zero(grid);
  for (std::size_t p = 0; p < grid.size(); ++p) f.E[p][2] = std::sin(2.0 * kPi * grid.position(p)[2] / 4.0);
  CHECK_THROWS_AS(evolve_sourced(fields::embed_em(f), fields::FourCurrent{grid, {}}, sample_times(1.0, 3)),
                  ConstraintViolation);
}

TEST_CASE("dipole source keeps the constraint rows closed") {
  const auto grid = GridSpec::line(128, 8.0);
  const auto j = fields::dipole_current(grid, {0, 0, 4.0}, 0.5, {0.5, 0.0, 1.0}, 2.0);
  const auto times = sample_times(3.0, 31);
  const auto run = evolve_sourced(SpinorField8::zero(grid, fields::SpinorKind::photon_embedded), j, times);
  for (std::size_t s = 0; s < times.size(); ++s) {
    CHECK(fields::constraint_residual(run.samples[s]) <= 1e-10);
    CHECK(gauss_residual(run.samples[s], j.rho(times[s])) <= 1e-9);
    CHECK_NOTHROW(fields::extract_em(run.samples[s]));
  }
}

TEST_CASE("substep count follows the source phase") {
  const auto grid = GridSpec::line(8, 1.0);
  const auto j = fields::uniform_current(grid, {1, 0, 0}, 5.0);
  CHECK(substeps_for(j, 0.1, {}) == 50);
  CHECK(substeps_for(fields::FourCurrent{grid, {}}, 0.1, {}) == 1);
}

TEST_CASE("positive-energy photon shows no oscillation") {
  const auto grid = GridSpec::line(16, 2.0 * kPi);
  const auto psi = states::mode_superposition(grid, {0, 0, 2}, 0.0, fields::embed_em_point({1, 0, 0}, {0, 0, 0}),
                                              Vector<8>{}, fields::SpinorKind::photon_embedded);
  const auto run = run_free(psi, sample_times(10.0, 200));
  const auto series = alpha_expectation_series(run);
  double lo = 1e9, hi = -1e9;
  for (const auto& v : series.values) {
    lo = std::min(lo, v[2]);
    hi = std::max(hi, v[2]);
  }
  CHECK(hi - lo <= 1e-12);
  CHECK(series.values[0][2] == doctest::Approx(1.0));
  const auto rep = zitter_decompose(series, 4.0);
  CHECK_FALSE(rep.oscillating);
  CHECK(std::max({rep.amplitude[0], rep.amplitude[1], rep.amplitude[2]}) <= 1e-12);
}

TEST_CASE("massless zitterbewegung at twice the mode frequency") {
  // A transverse photon state at one k carries E x B along k only, so its cross terms cancel in
  // the integral; a generic massless spinor with weight in rows 0 and 4 shows the line.
  const auto grid = GridSpec::line(16, 2.0 * kPi);
  Vector<8> a{}, b{};
  a[0] = 1.0;
  a[1] = 0.4;
  a[6] = kI * 0.3;
  b[4] = 0.8;
  b[2] = -0.5;
  const auto psi = states::mode_superposition(grid, {0, 0, 2}, 0.0, a, b, fields::SpinorKind::generic);
  const double expected = dominant_zitter_frequency(psi);
  CHECK(expected == doctest::Approx(4.0));
  const auto run = run_free(psi, sample_times(10.0 * 2.0 * kPi / 4.0, 400));
  const auto rep = zitter_decompose(alpha_expectation_series(run), expected);
  CHECK(rep.oscillating);
  CHECK(rep.relative_error <= 1e-6);
  CHECK(norm3_of(rep.amplitude) > 1e-3);
  const auto v = velocity_prediction(psi);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(rep.dc[i] - v[i]) <= 1e-10);
}

TEST_CASE("transverse photon mixture has no integrated line") {
  const auto grid = GridSpec::line(16, 2.0 * kPi);
  const auto psi = states::mode_superposition(grid, {0, 0, 2}, 0.0, fields::embed_em_point({1, 0, 0}, {0, 0, 0}),
                                              fields::embed_em_point({0.3, kI * 0.5, 0}, {0, 0, 0}),
                                              fields::SpinorKind::photon_embedded);
  CHECK(fields::constraint_residual(psi) <= 1e-15);
  const auto run = run_free(psi, sample_times(10.0 * 2.0 * kPi / 4.0, 400));
  const auto rep = zitter_decompose(alpha_expectation_series(run), 4.0);
  CHECK_FALSE(rep.oscillating);
}

TEST_CASE("electron zitterbewegung at rest") {
  const Constants c{1.0, 1.0};
  const auto grid = GridSpec::line(8, 2.0 * kPi);
  const auto psi = states::mode_superposition(grid, {0, 0, 0}, 1.0, unit(1), unit(0), fields::SpinorKind::electron, c);
  CHECK(dominant_zitter_frequency(psi, c) == doctest::Approx(2.0));
  const auto run = run_free(psi, sample_times(20.0, 300), c);
  const auto rep = zitter_decompose(alpha_expectation_series(run), 2.0);
  CHECK(rep.oscillating);
  CHECK(rep.relative_error <= 1e-6);
  CHECK(rep.amplitude[0] > 0.1);
}

TEST_CASE("positive-energy electron velocity") {
  const auto grid = GridSpec::line(128, 20.0);
  const auto psi = states::electron_vortex_packet(grid, 1.0, 1.5, {0, 0, 0.8}, 0);
  const auto a = alpha_expectation(psi);
  const auto v = velocity_prediction(psi);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(a[i] - v[i]) <= 1e-10);
  CHECK(v[2] > 0.3);
  const auto run = run_free(psi, sample_times(20.0, 64));
  const auto rep = zitter_decompose(alpha_expectation_series(run), dominant_zitter_frequency(psi));
  CHECK(std::max({rep.amplitude[0], rep.amplitude[1], rep.amplitude[2]}) <= 1e-12);
}

TEST_CASE("zitter fit preconditions") {
  spin::ExpectationSeries s{"a", {}, {}};
  for (int i = 0; i < 10; ++i) {
    s.times.push_back(i * 0.1);
    s.values.push_back({std::cos(i * 0.1), 0.0, 0.0});
  }
  CHECK_THROWS_AS(zitter_decompose(s, 1.0), FitFailure);

  spin::ExpectationSeries two{"a", {}, {}};
  for (int i = 0; i < 400; ++i) {
    const double t = i * 0.05;
    two.times.push_back(t);
    two.values.push_back({0.5 + std::cos(3.0 * t) + 0.4 * std::sin(7.0 * t), 0.0, 0.0});
  }
  CHECK_THROWS_AS(zitter_decompose(two, 3.0), FitFailure);
  ZitterOptions multi;
  multi.allow_multiline = true;
  const auto rep = zitter_decompose(two, 3.0, multi);
  REQUIRE(rep.lines.size() == 2);
  CHECK(rep.lines[0].frequency == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(rep.lines[1].frequency == doctest::Approx(7.0).epsilon(1e-4));
  CHECK(rep.dc[0] == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("poynting split examples") {
  const auto grid = GridSpec::line(32, 2.0 * kPi);
  const double k = 2.0;
  fields::VectorField e(grid.size()), b(grid.size()), zero(grid.size());
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const cplx ph = std::exp(kI * (k * grid.position(p)[2]));
    e[p] = {0.5 * ph, 0.0, 0.0};
    b[p] = {0.0, 0.5 * ph, 0.0};
  }
  const auto s = poynting_split(e, b);
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const double z = grid.position(p)[2];
    CHECK(std::abs(s.dc[p][2] - 0.5) <= 1e-15);
    CHECK(std::abs(s.osc[p][2] - 0.25 * std::exp(kI * (2.0 * k * z))) <= 1e-15);
    const double t = 0.37;
    const auto r = poynting_reconstruct(s, p, k, t);
    CHECK(std::abs(r[2] - std::pow(std::cos(k * z - k * t), 2)) <= 1e-14);
  }
  const auto none = poynting_split(e, zero);
  for (std::size_t p = 0; p < grid.size(); ++p) {
    CHECK(std::abs(none.dc[p][2]) == 0.0);
    CHECK(std::abs(none.osc[p][2]) == 0.0);
  }
}

TEST_CASE("standing wave has no dc flux") {
  const auto grid = GridSpec::line(64, 2.0 * kPi);
  const double k = 3.0;
  fields::VectorField e(grid.size()), b(grid.size());
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const double z = grid.position(p)[2];
    e[p] = {0.5 * std::cos(k * z), 0.0, 0.0};
    b[p] = {0.0, 0.5 * kI * std::sin(k * z), 0.0};
  }
  const auto s = poynting_split(e, b);
  // time average of psi^dag alpha psi / 2 over one period
  const double period = 2.0 * kPi / k;
  const auto modes = decompose(embed_monochromatic(grid, e, b, k, 0.0));
  const int n = 64;
  std::vector<Real3> mean(grid.size());
  const auto alpha = algebra::dirac88_primed().alpha;
  for (int i = 0; i < n; ++i) {
    const auto psi = synthesize(modes, period * i / n);
    for (std::size_t p = 0; p < grid.size(); ++p)
      mean[p][2] += 0.5 * inner(psi.psi[p], alpha[2] * psi.psi[p]).real() / n;
  }
  for (std::size_t p = 0; p < grid.size(); ++p) {
    CHECK(std::abs(s.dc[p][2]) <= 1e-15);
    CHECK(std::abs(mean[p][2]) <= 1e-12);
  }
}

TEST_CASE("zitterbewegung equals the oscillating Poynting terms") {
  SUBCASE("single-k real plane wave") {
    const auto grid = GridSpec::line(64, 2.0 * kPi);
    const double k = 3.0;
    fields::VectorField e(grid.size()), b(grid.size());
    for (std::size_t p = 0; p < grid.size(); ++p) {
      const cplx ph = 0.5 * std::exp(kI * (k * grid.position(p)[2]));
      e[p] = {ph, 0.3 * ph, 0.0};
      b[p] = {-0.3 * ph, ph, 0.0};
    }
    const auto r = zitter_equals_poynting(grid, e, b, k, sample_times(2.0, 40));
    CHECK(r.integrated_deviation <= 1e-12);
    CHECK(r.pointwise_deviation <= 1e-12);
    CHECK(r.pointwise_amplitude > 0.1);
  }
  SUBCASE("two directions with the same wave number") {
    const auto grid = GridSpec::cube(16, 2.0 * kPi);
    const double k = 2.0;
    fields::VectorField e(grid.size()), b(grid.size());
    for (std::size_t p = 0; p < grid.size(); ++p) {
      const auto r = grid.position(p);
      const cplx pz = std::exp(kI * (k * r[2])), py = std::exp(kI * (k * r[1]));
      // along z: E x, B y; along y: E z, B x
      e[p] = {pz, 0.0, 0.7 * py};
      b[p] = {0.7 * py, pz, 0.0};
    }
    const auto r = zitter_equals_poynting(grid, e, b, k, sample_times(2.0, 20));
    CHECK(r.integrated_deviation <= 1e-10);
    CHECK(r.pointwise_deviation <= 1e-10);
  }
  SUBCASE("circular wave has no oscillating part") {
    const auto grid = GridSpec::line(32, 2.0 * kPi);
    const double k = 2.0;
    fields::VectorField e(grid.size()), b(grid.size());
    for (std::size_t p = 0; p < grid.size(); ++p) {
      const cplx ph = std::exp(kI * (k * grid.position(p)[2])) / 2.0;
      e[p] = {ph, kI * ph, 0.0};
      b[p] = {-kI * ph, ph, 0.0};
    }
    const auto s = poynting_split(e, b);
    for (const auto& v : s.osc)
      for (int a = 0; a < 3; ++a) CHECK(std::abs(v[a]) <= 1e-15);
    const auto r = zitter_equals_poynting(grid, e, b, k, sample_times(2.0, 20));
    CHECK(r.integrated_deviation <= 1e-12);
    CHECK(r.pointwise_deviation <= 1e-12);
  }
}

TEST_CASE("local density oscillates at twice the frequency for a real wave") {
  const auto grid = GridSpec::line(32, 2.0 * kPi);
  const auto psi = fields::embed_em(states::photon_plane_wave(grid, 2));
  const auto run = run_free(psi, sample_times(4.0 * kPi, 300));
  const auto rep = zitter_decompose(local_half_alpha_series(run, 5), 4.0);
  CHECK(rep.relative_error <= 1e-6);
  CHECK(rep.dc[2] == doctest::Approx(0.5));
  CHECK(rep.amplitude[2] == doctest::Approx(0.5));
}

TEST_CASE("boosted electron rest state solves the free equation") {
  const Constants c{1.0, 1.0};
  const double mass = 1.3;
  for (const Real3 v : {Real3{0, 0, 0.6}, Real3{0.3, -0.5, 0.2}, Real3{-0.85, 0.1, 0.3}}) {
    const lorentz::Boost b(v, c.c);
    const auto moved = lorentz::four_vector_boost({mass * c.c, {0, 0, 0}}, b);
    const Real3 kp{moved.x[0] / c.hbar, moved.x[1] / c.hbar, moved.x[2] / c.hbar};
    const double wp = moved.t * c.c / c.hbar;
    CHECK(wp == doctest::Approx(angular_frequency(kp, mass, c)));
    for (std::size_t i : {1, 2, 3, 4}) {
      const Vector<8> psi = lorentz::electron_law(b) * unit(i);
      Vector<8> r = hamiltonian_k(kp, mass, c) * psi;
      for (std::size_t a = 0; a < 8; ++a) r[a] = c.hbar * wp * psi[a] - r[a];
      CHECK(std::sqrt(norm2(r)) <= 1e-10);
    }
  }
}
