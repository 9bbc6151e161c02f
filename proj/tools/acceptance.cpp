// Runs acceptance criteria 1-9 and prints one PASS/FAIL line per criterion.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dirac8/algebra.hpp"
#include "dirac8/app.hpp"
#include "dirac8/evolution.hpp"
#include "dirac8/lorentz.hpp"
#include "dirac8/oracle.hpp"
#include "dirac8/spectrum.hpp"
#include "dirac8/spin.hpp"
#include "dirac8/states.hpp"

using namespace dirac8;
using nlohmann::json;

namespace {

struct Measure {
  std::string what;
  double value = 0.0;
  double tolerance = 0.0;
  bool lower_bound = false;  // pass when value > tolerance

  bool pass() const {
    if (!std::isfinite(value)) return false;
    return lower_bound ? value > tolerance : value <= tolerance;
  }
};

struct Outcome {
  std::vector<Measure> measures;
  std::vector<std::string> notes;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  std::string error;
  try {
    o = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  bool pass = error.empty() && !o.measures.empty();
  for (const auto& m : o.measures) pass = pass && m.pass();
  if (!pass) ++failures;
  std::printf("criterion %d %s  %s\n", id, pass ? "PASS" : "FAIL", title.c_str());
  for (const auto& m : o.measures)
    std::printf("    %-52s %s %.3e  (%s %.0e)\n", m.what.c_str(), m.pass() ? "ok " : "BAD", m.value,
                m.lower_bound ? ">" : "<=", m.tolerance);
  for (const auto& n : o.notes) std::printf("    note: %s\n", n.c_str());
  if (!error.empty()) std::printf("    error: %s\n", error.c_str());
  std::fflush(stdout);
}

double spectrum_deviation(const HermitianSpectrum& s, const std::vector<std::pair<double, int>>& expected, double tol) {
  const auto groups = group_eigenvalues(s.eigenvalues, tol);
  if (groups.size() != expected.size()) return INFINITY;
  double dev = s.residual;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].second != expected[i].second) return INFINITY;
    dev = std::max(dev, std::abs(groups[i].first - expected[i].first));
  }
  return dev;
}

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

double amplitude_of(const evolution::ZitterReport& r) {
  return std::max({r.amplitude[0], r.amplitude[1], r.amplitude[2]});
}


Outcome algebra_catalogue() {
  Outcome o;
  double worst = 0.0;
  int failed = 0;
  const auto reports = algebra::verify_identities();
  for (const auto& r : reports) {
    worst = std::max(worst, r.deviation);
    if (!r.pass) ++failed;
  }
  o.measures.push_back({"max deviation over " + std::to_string(reports.size()) + " identities", worst, 1e-15});
  o.measures.push_back({"identities failing their own tolerance", double(failed), 0.0});
  auto cat = algebra::MatrixCatalogue::standard();
  cat.gens.kappa[0](0, 1) = cplx(0.0, -0.5);
  int caught = 0;
  for (const auto& r : algebra::verify_identities(cat)) caught += r.pass ? 0 : 1;
  o.notes.push_back("negative control (one corrupted kappa entry) fails " + std::to_string(caught) + " identities");
  return o;
}

Outcome spin_identity() {
  Outcome o;
  const auto half = spin::spin_half(), one = spin::spin_one();
  o.measures.push_back({"spin-1/2 evolution identity", spin::verify_spin_evolution(half).deviation, 0.0});
  o.measures.push_back({"spin-1 evolution identity", spin::verify_spin_evolution(one).deviation, 0.0});
  o.measures.push_back({"spin-1 leakage into rows 0/4", spin::constraint_leakage(one), 0.0});
  o.measures.push_back({"spin-1/2 leakage witness", spin::constraint_leakage(half), 0.0, true});
  const auto grid = GridSpec::line(1, 1.0);
  auto f = fields::EMField::zero(grid);
  f.E[0] = {1.0, 0.0, 0.0};
  const auto sel = spin::photon_spin_selection(fields::embed_em(f));
  o.measures.push_back({"spin-1/2 applied to E = x: rows 0/4", sel.spin_half_rows, 0.0, true});
  o.notes.push_back("witness leaks into component " + std::to_string(sel.witness_component));
  return o;
}

Outcome spectra() {
  Outcome o;
  const auto half = spin::spin_half(), one = spin::spin_one();
  o.measures.push_back({"spin-1 S_z {-1:2, 0:4, +1:2}",
                        spectrum_deviation(hermitian_spectrum(one.S[2]), {{-1.0, 2}, {0.0, 4}, {1.0, 2}}, 1e-9), 1e-12});
  o.measures.push_back({"spin-1/2 S_z {-1/2:4, +1/2:4}",
                        spectrum_deviation(hermitian_spectrum(half.S[2]), {{-0.5, 4}, {0.5, 4}}, 1e-9), 1e-12});
  double worst = 0.0;
  for (const fields::Real3 k : {fields::Real3{0, 0, 1}, fields::Real3{0.3, -0.4, 1.2}, fields::Real3{2.0, 1.0, -0.5}})
    for (double mass : {0.0, 1.0, 2.5}) {
      const double e = evolution::angular_frequency(k, mass);
      worst = std::max(worst, spectrum_deviation(hermitian_spectrum(evolution::hamiltonian_k(k, mass)),
                                                 {{-e, 4}, {e, 4}}, 1e-9 * e) / std::max(1.0, e));
    }
  o.measures.push_back({"H(k) {-hw:4, +hw:4}, 9 (k, m) pairs", worst, 1e-12});
  return o;
}

Outcome oracle_agreement() {
  Outcome o;
  {
    const auto grid = GridSpec::line(256, 10.0);
    const auto f0 = random_transverse(grid, 11);
    const auto times = evolution::sample_times(5.0, 100);
    const auto dirac = evolution::run_free(fields::embed_em(f0), times);
    const auto classical = oracle::maxwell_evolve(f0, fields::FourCurrent{grid, {}}, times);
    o.measures.push_back({"free, 256 points, 100 samples (max-norm)", oracle::compare(dirac, classical).max_abs, 1e-10});
    double rows = 0.0;
    for (const auto& s : dirac.samples) rows = std::max(rows, fields::constraint_residual(s));
    o.measures.push_back({"free: constraint rows", rows, 1e-10});
  }
  {
    const auto grid = GridSpec::line(256, 16.0);
    const auto j = fields::dipole_current(grid, {0, 0, 8.0}, 0.6, {0.5, 0.0, 1.0}, 2.0);
    const auto times = evolution::sample_times(4.0, 100);
    const auto zero = fields::EMField::zero(grid);
    const auto dirac = evolution::evolve_sourced(fields::embed_em(zero), j, times);
    const auto classical = oracle::maxwell_evolve(zero, j, times);
    const auto cmp = oracle::compare(dirac, classical);
    o.measures.push_back({"sourced dipole, 100 samples (max-norm)", cmp.max_abs, 1e-8});
    double rows = 0.0, gauss = 0.0;
    for (std::size_t s = 0; s < times.size(); ++s) {
      rows = std::max(rows, fields::constraint_residual(dirac.samples[s]));
      gauss = std::max(gauss, evolution::gauss_residual(dirac.samples[s], j.rho(times[s])));
    }
    o.measures.push_back({"sourced: constraint rows", rows, 1e-10});
    o.measures.push_back({"sourced: Dirac-form Gauss residual", gauss, 1e-10});
    o.measures.push_back({"sourced: oracle Gauss residual", oracle::constraint_residual(classical, j), 1e-10});
    o.notes.push_back("dipole field rms " + std::to_string(cmp.rms));
  }
  return o;
}

Outcome zitter_frequency() {
  Outcome o;
  {
    const auto grid = GridSpec::line(16, 2.0 * kPi);
    Vector<8> a{}, b{};
    a[0] = 1.0;
    a[1] = 0.4;
    a[6] = kI * 0.3;
    b[4] = 0.8;
    b[2] = -0.5;
    const auto psi = states::mode_superposition(grid, {0, 0, 2}, 0.0, a, b, fields::SpinorKind::generic);
    const auto run = evolution::run_free(psi, evolution::sample_times(10.0 * 2.0 * kPi / 4.0, 400));
    const auto rep = evolution::zitter_decompose(evolution::alpha_expectation_series(run), 4.0);
    o.measures.push_back({"(a) m = 0, k = 2: |f - 2ck| / 2ck", rep.oscillating ? rep.relative_error : INFINITY, 1e-6});
  }
  {
    const auto grid = GridSpec::line(8, 2.0 * kPi);
    Vector<8> up{}, lo{};
    up[1] = 1.0;
    lo[0] = 1.0;
    const auto psi = states::mode_superposition(grid, {0, 0, 0}, 1.0, up, lo, fields::SpinorKind::electron);
    const auto run = evolution::run_free(psi, evolution::sample_times(20.0, 300));
    const auto rep = evolution::zitter_decompose(evolution::alpha_expectation_series(run), 2.0);
    o.measures.push_back({"(b) m = 1, k = 0: |f - 2mc^2/hbar| / 2", rep.oscillating ? rep.relative_error : INFINITY, 1e-6});
  }
  {
    const auto grid = GridSpec::line(128, 20.0);
    const auto psi = states::electron_vortex_packet(grid, 1.0, 1.5, {0, 0, 0.8}, 0);
    const auto run = evolution::run_free(psi, evolution::sample_times(20.0, 64));
    const auto rep = evolution::zitter_decompose(evolution::alpha_expectation_series(run), evolution::dominant_zitter_frequency(psi));
    o.measures.push_back({"positive-energy electron packet: amplitude", amplitude_of(rep), 1e-12});
  }
  {
    const auto grid = GridSpec::line(16, 2.0 * kPi);
    const auto psi = states::mode_superposition(grid, {0, 0, 2}, 0.0, fields::embed_em_point({1, 0, 0}, {0, 0, 0}),
                                                Vector<8>{}, fields::SpinorKind::photon_embedded);
    const auto run = evolution::run_free(psi, evolution::sample_times(10.0, 200));
    const auto rep = evolution::zitter_decompose(evolution::alpha_expectation_series(run), 4.0);
    o.measures.push_back({"positive-energy photon: amplitude", amplitude_of(rep), 1e-12});
  }
  {
    // a real plane wave is an equal +/- mixture, yet its volume-integrated line vanishes
    const auto grid = GridSpec::line(64, 2.0 * kPi);
    const auto run = evolution::run_free(fields::embed_em(states::photon_plane_wave(grid, 3)),
                                         evolution::sample_times(10.0, 400));
    const auto vol = evolution::zitter_decompose(evolution::alpha_expectation_series(run), 6.0);
    const auto local = evolution::zitter_decompose(evolution::local_half_alpha_series(run, 5), 6.0);
    o.measures.push_back({"real plane wave, local density: |f - 2ck| / 2ck", local.oscillating ? local.relative_error : INFINITY, 1e-6});
    o.notes.push_back("real plane wave volume-integrated amplitude " + std::to_string(amplitude_of(vol)) +
                      " (transverse cross terms cancel in the integral)");
  }
  return o;
}

Outcome zitter_poynting() {
  Outcome o;
  auto add = [&](const std::string& label, const evolution::ZitterPoyntingReport& r) {
    o.measures.push_back({label + ": integrated", r.integrated_deviation, 1e-10});
    o.measures.push_back({label + ": pointwise", r.pointwise_deviation, 1e-10});
    o.measures.push_back({label + ": pointwise osc amplitude", r.pointwise_amplitude, 1e-3, true});
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s integrated osc amplitude %.2e", label.c_str(), r.integrated_amplitude);
    o.notes.push_back(buf);
  };
  {
    const auto grid = GridSpec::line(64, 2.0 * kPi);
    fields::VectorField e(grid.size()), b(grid.size());
    for (std::size_t p = 0; p < grid.size(); ++p) {
      const cplx ph = 0.5 * std::exp(kI * (3.0 * grid.position(p)[2]));
      e[p] = {ph, 0.3 * ph, 0.0};
      b[p] = {-0.3 * ph, ph, 0.0};
    }
    add("1-D plane wave", evolution::zitter_equals_poynting(grid, e, b, 3.0, evolution::sample_times(2.0, 40)));
  }
  {
    const auto grid = GridSpec::cube(16, 2.0 * kPi);
    fields::VectorField e(grid.size()), b(grid.size());
    for (std::size_t p = 0; p < grid.size(); ++p) {
      const auto r = grid.position(p);
      const cplx pz = std::exp(kI * (2.0 * r[2])), py = std::exp(kI * (2.0 * r[1]));
      e[p] = {pz, 0.0, 0.7 * py};
      b[p] = {0.7 * py, pz, 0.0};
    }
    add("3-D two directions", evolution::zitter_equals_poynting(grid, e, b, 2.0, evolution::sample_times(2.0, 20)));
  }
  o.notes.push_back("for transverse fields the integrated 2w terms cancel identically; the pointwise rows carry the test");
  return o;
}

Outcome lorentz_pathways() {
  Outcome o;
  const lorentz::FieldPair wave{{1, 0, 0}, {0, 1, 0}};
  double worst = 0.0, rows = 0.0;
  auto run = [&](const lorentz::FieldPair& f, const fields::Real3& v) {
    const auto r = lorentz::compare_boost_pathways(f, lorentz::Boost(v));
    worst = std::max(worst, r.max_deviation);
    rows = std::max(rows, r.constraint_residual);
    return r;
  };
  const auto fwd = run(wave, {0, 0, 0.6});
  const auto back = run(wave, {0, 0, -0.6});
  o.measures.push_back({"Doppler v = +0.6c: |E'x - 0.5|", std::abs(fwd.spinor.E[0] - 0.5), 1e-10});
  o.measures.push_back({"Doppler v = -0.6c: |E'x - 2.0|", std::abs(back.spinor.E[0] - 2.0), 1e-10});
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    fields::Real3 dir{u(rng), u(rng), u(rng)};
    const double n = std::sqrt(dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2]);
    const double speed = 0.9 * std::abs(u(rng));
    for (auto& x : dir) x *= speed / n;
    run({{u(rng), u(rng), u(rng)}, {u(rng), u(rng), u(rng)}}, dir);
  }
  run({{0.2, -0.7, 0.4}, {0.9, 0.1, -0.3}}, {0.9, 0.0, 0.0});
  o.measures.push_back({"202 boosts, |v| <= 0.9c: pathway spread", worst, 1e-10});
  o.measures.push_back({"boosted constraint rows", rows, 1e-10});

  // the literal law does not map field states to field states
  const lorentz::Boost b({0.3, -0.2, 0.4});
  const lorentz::FieldPair f{{0.3, -1.2, 0.7}, {0.5, 0.1, -0.9}};
  const auto psi = fields::embed_em_point({f.E[0], f.E[1], f.E[2]}, {f.B[0], f.B[1], f.B[2]});
  const auto k = algebra::chiral_to_primed();
  const auto printed = k * lorentz::printed_em_law(b) * k.dagger();
  const auto out = printed * psi;
  const auto expect = lorentz::closed_form_field_boost(f, b);
  const auto good = lorentz::em_wavefunction_transform(psi, b);
  double printed_dev = std::max(std::abs(out[0]), std::abs(out[4])), good_dev = 0.0;
  for (int a = 0; a < 3; ++a) {
    printed_dev = std::max(printed_dev, std::abs(out[1 + a] - expect.E[a]));
    good_dev = std::max(good_dev, std::abs(good[1 + a] - expect.E[a]));
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "literal field law deviation %.2e, corrected law %.2e; literal law on the source term %.2e",
                printed_dev, good_dev, lorentz::nonmomentum_compatibility(0.4, {0.1, -0.3, 0.2}, b).derived_residual);
  o.notes.push_back(buf);
  return o;
}

Outcome conservation() {
  Outcome o;
  {
    const Constants c{1.0, 1.0};
    const auto grid = GridSpec::cube(32, 20.0);
    const double mass = 10.0;
    const auto psi = states::electron_vortex_packet(grid, mass, 1.5, {0.0, 0.0, 0.5}, 1, c);
    const double period = 2.0 * kPi / evolution::angular_frequency({0.0, 0.0, 0.5}, mass, c);
    const auto run = evolution::run_free(psi, evolution::sample_times(10.0 * period, 41), c);
    const double n0 = evolution::norm(run.samples.front()), e0 = evolution::energy(run.samples.front(), c);
    double dn = 0.0, de = 0.0;
    for (const auto& s : run.samples) {
      dn = std::max(dn, std::abs(evolution::norm(s) - n0) / n0);
      de = std::max(de, std::abs(evolution::energy(s, c) - e0) / std::abs(e0));
    }
    const auto am = spin::angular_momentum_series(run.times, run.samples, c);
    o.measures.push_back({"3-D vortex 32^3, 10 periods: norm", dn, 1e-8});
    o.measures.push_back({"3-D vortex: energy", de, 1e-8});
    o.measures.push_back({"3-D vortex: <L + S>", spin::max_relative_drift(am.total, c.hbar), 1e-8});
    o.measures.push_back({"3-D vortex: boundary weight", am.boundary_weight, spin::kBoundaryWeightLimit});
    o.notes.push_back("vortex <L_z> = " + std::to_string(am.orbital.values.front()[2]));
  }
  {
    const auto grid = GridSpec::line(256, 40.0);
    const auto psi = states::circular_photon_packet(grid, 20, 1, 2.0);
    const double period = 2.0 * kPi / evolution::angular_frequency(states::wave_vector(grid, {0, 0, 20}), 0.0);
    const auto run = evolution::run_free(psi, evolution::sample_times(10.0 * period, 41));
    const double n0 = evolution::norm(run.samples.front()), e0 = evolution::energy(run.samples.front());
    double dn = 0.0, de = 0.0;
    for (const auto& s : run.samples) {
      dn = std::max(dn, std::abs(evolution::norm(s) - n0) / n0);
      de = std::max(de, std::abs(evolution::energy(s) - e0) / std::abs(e0));
    }
    const auto am = spin::angular_momentum_series(run.times, run.samples);
    o.measures.push_back({"1-D circular photon: norm", dn, 1e-8});
    o.measures.push_back({"1-D circular photon: energy", de, 1e-8});
    o.measures.push_back({"1-D circular photon: <L + S>", spin::max_relative_drift(am.total, 1.0), 1e-8});
  }
  return o;
}

json without_time(const std::filesystem::path& summary) {
  std::ifstream in(summary);
  if (!in) throw std::runtime_error("missing " + summary.string());
  json j = json::parse(in);
  j.erase("wall_time_s");
  return j;
}

Outcome determinism() {
  Outcome o;
  const auto root = std::filesystem::temp_directory_path() / "dirac8_acceptance";
  std::filesystem::remove_all(root);
  std::filesystem::create_directories(root);
  const std::vector<std::pair<app::Command, json>> cases{
      {app::Command::verify_algebra, json::object()},
      {app::Command::spin_check, {{"mass", 1.0}}},
      {app::Command::evolve,
       {{"grid", {{"points", {1, 1, 256}}, {"lengths", {1, 1, 40}}}},
        {"mass", 1.0},
        {"duration", 5.0},
        {"samples", 32},
        {"initial", {{"type", "electron_packet"}, {"width", 1.5}, {"k0", {0, 0, 0.8}}}},
        {"snapshots", {31}}}},
      {app::Command::zitter,
       {{"grid", {{"points", {1, 1, 8}}, {"lengths", {1, 1, 6.283185307179586}}}},
        {"mass", 1.0},
        {"duration", 20.0},
        {"samples", 300},
        {"initial",
         {{"type", "mode_superposition"}, {"mode", {0, 0, 0}}, {"kind", "electron"},
          {"plus", {0, 1, 0, 0, 0, 0, 0, 0}}, {"minus", {1, 0, 0, 0, 0, 0, 0, 0}}}},
        {"analysis", {{"expected_frequency", 2.0}}}}},
      {app::Command::boost_demo,
       {{"fields", {{"E", {0.3, -1.2, 0.7}}, {"B", {0.5, 0.1, -0.9}}}}, {"random_cases", 10}, {"seed", 5}}},
      {app::Command::compare_oracle,
       {{"grid", {{"points", {1, 1, 256}}, {"lengths", {1, 1, 16}}}},
        {"duration", 4.0},
        {"samples", 100},
        {"initial", {{"type", "zero"}}},
        {"source",
         {{"type", "dipole"}, {"centre", {0, 0, 8}}, {"width", 0.6}, {"amplitude", {0.5, 0, 1.0}}, {"frequency", 2.0}}}}},
  };
  std::ostringstream sink;  // run logs; echoed on failure
  double mismatches = 0.0, bad_exit = 0.0;
  for (const auto& [cmd, cfg] : cases) {
    const auto path = root / (std::string(app::to_string(cmd)) + ".json");
    std::ofstream(path) << cfg.dump(2);
    std::vector<json> summaries;
    for (std::size_t threads : {1, 1, 4}) {
      const auto out = root / (std::string(app::to_string(cmd)) + "-" + std::to_string(summaries.size()));
      const int code = app::run({cmd, path, out, threads}, sink);
      if (code != app::kExitOk) {
        bad_exit += 1.0;
        o.notes.push_back(std::string(app::to_string(cmd)) + " exited " + std::to_string(code));
        sink.str("");
      }
      summaries.push_back(without_time(out / "summary.json"));
    }
    const bool same = summaries[0] == summaries[1];
    if (!same) mismatches += 1.0;
    if (summaries[0] != summaries[2])
      o.notes.push_back(std::string(app::to_string(cmd)) + ": 1 vs 4 threads differ");
  }
  o.measures.push_back({"six commands run twice: differing summaries", mismatches, 0.0});
  o.measures.push_back({"runs not exiting 0", bad_exit, 0.0});
  if (o.notes.empty()) o.notes.push_back("summaries also identical with 4 worker threads");
  std::filesystem::remove_all(root);
  return o;
}

}  // namespace

int main() {
  report(1, "algebra catalogue", algebra_catalogue);
  report(2, "spin identity and photon selection", spin_identity);
  report(3, "spectra", spectra);
  report(4, "Dirac-form Maxwell vs classical oracle", oracle_agreement);
  report(5, "Zitterbewegung frequency", zitter_frequency);
  report(6, "Zitterbewegung = oscillatory Poynting", zitter_poynting);
  report(7, "Lorentz pathways", lorentz_pathways);
  report(8, "conservation", conservation);
  report(9, "determinism", determinism);
  std::printf("%s: %d of 9 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
