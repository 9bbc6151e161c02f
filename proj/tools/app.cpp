#include "dirac8/app.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "dirac8/algebra.hpp"
#include "dirac8/errors.hpp"
#include "dirac8/evolution.hpp"
#include "dirac8/io.hpp"
#include "dirac8/lorentz.hpp"
#include "dirac8/numeric.hpp"
#include "dirac8/oracle.hpp"
#include "dirac8/spectrum.hpp"
#include "dirac8/spin.hpp"
#include "dirac8/states.hpp"

namespace dirac8::app {

using nlohmann::json;
using fields::Real3;

const char* to_string(Command c) {
  switch (c) {
    case Command::verify_algebra: return "verify-algebra";
    case Command::spin_check: return "spin-check";
    case Command::evolve: return "evolve";
    case Command::zitter: return "zitter";
    case Command::boost_demo: return "boost-demo";
    case Command::compare_oracle: return "compare-oracle";
  }
  return "?";
}

const std::vector<Command>& all_commands() {
  static const std::vector<Command> v{Command::verify_algebra, Command::spin_check, Command::evolve,
                                      Command::zitter,         Command::boost_demo, Command::compare_oracle};
  return v;
}

std::optional<Command> parse_command(std::string_view name) {
  for (auto c : all_commands())
    if (name == to_string(c)) return c;
  return std::nullopt;
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void to_json(json& j, const Check& c) {
  j = json{{"name", c.name},
           {"paper_anchor", c.anchor},
           {"deviation", c.deviation ? json(*c.deviation) : json(nullptr)},
           {"tolerance", c.tolerance},
           {"pass", c.pass}};
}

namespace {

// ---- config reading ----

// Object view that names the offending key in every error and rejects keys nobody asked for.
class Node {
 public:
  Node(const json& j, std::string path) : j_(&j), path_(std::move(path)) {
    if (!j.is_object()) fail(path_.empty() ? "config root" : path_, "must be an object");
  }

  [[noreturn]] static void fail(const std::string& key, const std::string& what) {
    throw ConfigError("config: key '" + key + "' " + what);
  }

  std::string key(const std::string& k) const { return path_.empty() ? k : path_ + "." + k; }
  bool has(const std::string& k) const { return j_->contains(k); }

  const json& raw(const std::string& k) const {
    seen_.insert(k);
    if (!has(k)) fail(key(k), "is required");
    return j_->at(k);
  }

  double number(const std::string& k) const {
    const auto& v = raw(k);
    if (!v.is_number()) fail(key(k), "must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) fail(key(k), "must be finite");
    return d;
  }
  double number(const std::string& k, double fallback) const { return has(k) ? number(k) : mark(k, fallback); }

  double positive(const std::string& k) const {
    const double d = number(k);
    if (!(d > 0.0)) fail(key(k), "must be positive");
    return d;
  }
  double positive(const std::string& k, double fallback) const { return has(k) ? positive(k) : mark(k, fallback); }

  long integer(const std::string& k) const {
    const auto& v = raw(k);
    if (!v.is_number_integer()) fail(key(k), "must be an integer");
    return v.get<long>();
  }
  long integer(const std::string& k, long fallback) const { return has(k) ? integer(k) : mark(k, fallback); }

  bool boolean(const std::string& k, bool fallback) const {
    if (!has(k)) return mark(k, fallback);
    const auto& v = raw(k);
    if (!v.is_boolean()) fail(key(k), "must be true or false");
    return v.get<bool>();
  }

  std::string text(const std::string& k) const {
    const auto& v = raw(k);
    if (!v.is_string()) fail(key(k), "must be a string");
    return v.get<std::string>();
  }
  std::string text(const std::string& k, const std::string& fallback) const {
    return has(k) ? text(k) : mark(k, fallback);
  }

  Real3 vec3(const std::string& k) const { return vec3_of(raw(k), key(k)); }
  Real3 vec3(const std::string& k, const Real3& fallback) const { return has(k) ? vec3(k) : mark(k, fallback); }

  static Real3 vec3_of(const json& v, const std::string& name) {
    if (!v.is_array() || v.size() != 3) fail(name, "must be an array of 3 numbers");
    Real3 out{};
    for (std::size_t i = 0; i < 3; ++i) {
      if (!v[i].is_number()) fail(name, "must be an array of 3 numbers");
      out[i] = v[i].get<double>();
    }
    return out;
  }

  Node child(const std::string& k) const {
    const auto& v = raw(k);
    if (!v.is_object()) fail(key(k), "must be an object");
    return Node(v, key(k));
  }

  void done() const {
    for (auto it = j_->begin(); it != j_->end(); ++it)
      if (!seen_.count(it.key())) fail(key(it.key()), "is not recognised here");
  }

 private:
  template <typename T>
  T mark(const std::string& k, T v) const {
    seen_.insert(k);
    return v;
  }

  const json* j_;
  std::string path_;
  mutable std::set<std::string> seen_;
};

Constants read_units(const Node& root) {
  Constants c;
  if (!root.has("units")) {
    root.boolean("units", false);
    return c;
  }
  const Node u = root.child("units");
  const std::string system = u.text("system", "gaussian");
  if (system != "gaussian") Node::fail(u.key("system"), "must be \"gaussian\"");
  c.c = u.positive("c", 1.0);
  c.hbar = u.positive("hbar", 1.0);
  u.done();
  return c;
}

GridSpec read_grid(const Node& root) {
  const Node g = root.child("grid");
  const auto& pts = g.raw("points");
  if (!pts.is_array() || pts.size() != 3) Node::fail(g.key("points"), "must be an array of 3 positive integers");
  std::array<std::size_t, 3> p{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!pts[i].is_number_integer() || pts[i].get<long>() < 1)
      Node::fail(g.key("points"), "must be an array of 3 positive integers");
    p[i] = pts[i].get<std::size_t>();
    if ((p[i] & (p[i] - 1)) != 0) Node::fail(g.key("points"), "entries must be powers of two");
  }
  const Real3 l = g.vec3("lengths");
  for (double v : l)
    if (!(v > 0.0)) Node::fail(g.key("lengths"), "entries must be positive");
  g.done();
  return GridSpec(p, l);
}

cplx read_complex(const json& v, const std::string& name) {
  if (v.is_number()) return v.get<double>();
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  Node::fail(name, "entries must be numbers or [re, im] pairs");
}

Vector<8> read_spinor(const Node& n, const std::string& k) {
  const auto& v = n.raw(k);
  if (!v.is_array() || v.size() != 8) Node::fail(n.key(k), "must list 8 components");
  Vector<8> out{};
  for (std::size_t i = 0; i < 8; ++i) out[i] = read_complex(v[i], n.key(k));
  return out;
}

fields::SpinorKind read_kind(const Node& n) {
  const std::string kind = n.text("kind", "generic");
  if (kind == "photon") return fields::SpinorKind::photon_embedded;
  if (kind == "electron") return fields::SpinorKind::electron;
  if (kind == "generic") return fields::SpinorKind::generic;
  Node::fail(n.key("kind"), "must be one of photon, electron, generic");
}

struct Setup {
  GridSpec grid;
  Constants constants;
  double duration = 0.0;
  std::size_t samples = 0;
  fields::SpinorField8 initial;
  std::optional<fields::FourCurrent> source;
  std::vector<std::size_t> snapshots;
};

fields::SpinorField8 read_initial(const Node& root, const GridSpec& grid, double mass, const Constants& c) {
  const Node n = root.child("initial");
  const std::string type = n.text("type");
  fields::SpinorField8 psi;
  auto massless = [&] {
    if (mass != 0.0) Node::fail(root.key("mass"), "must be 0 for a photon initial state");
  };
  try {
    if (type == "plane_wave") {
      massless();
      psi = fields::embed_em(states::photon_plane_wave(grid, n.integer("mode"), n.number("amplitude", 1.0)));
    } else if (type == "circular_packet") {
      massless();
      const long h = n.integer("helicity", 1);
      if (h != 1 && h != -1) Node::fail(n.key("helicity"), "must be +1 or -1");
      psi = states::circular_photon_packet(grid, n.integer("mode"), int(h), n.positive("width"), c);
    } else if (type == "linear_packet") {
      massless();
      // real x-polarised wave under a Gaussian envelope in z; B = z x E keeps it mostly right-moving
      const long mode = n.integer("mode");
      const double width = n.positive("width"), amp = n.number("amplitude", 1.0);
      const double k = states::wave_vector(grid, {0, 0, mode})[2];
      auto f = fields::EMField::zero(grid);
      for (std::size_t p = 0; p < grid.size(); ++p) {
        const double z = grid.centred_position(p)[2];
        const double v = amp * std::cos(k * z) * std::exp(-0.5 * z * z / (width * width));
        f.E[p] = {v, 0.0, 0.0};
        f.B[p] = {0.0, v, 0.0};
      }
      psi = fields::embed_em(f);
    } else if (type == "mode_superposition") {
      const Real3 m = n.vec3("mode");
      states::ModeNumbers mn{};
      for (int a = 0; a < 3; ++a) {
        if (m[a] != std::round(m[a])) Node::fail(n.key("mode"), "entries must be integers");
        mn[a] = long(m[a]);
      }
      const auto kind = read_kind(n);
      if (kind == fields::SpinorKind::photon_embedded) massless();
      psi = states::mode_superposition(grid, mn, mass, read_spinor(n, "plus"), read_spinor(n, "minus"), kind, c);
    } else if (type == "electron_packet") {
      if (!(mass > 0.0)) Node::fail(root.key("mass"), "must be positive for an electron packet");
      psi = states::electron_vortex_packet(grid, mass, n.positive("width"), n.vec3("k0", {0, 0, 0}),
                                           int(n.integer("ell", 0)), c);
    } else if (type == "zero") {
      massless();
      psi = fields::SpinorField8::zero(grid, fields::SpinorKind::photon_embedded);
    } else {
      Node::fail(n.key("type"),
                 "must be one of plane_wave, linear_packet, circular_packet, mode_superposition, electron_packet, zero");
    }
  } catch (const DegenerateMode& e) {
    Node::fail(n.key("mode"), std::string("selects a degenerate mode: ") + e.what());
  } catch (const std::invalid_argument& e) {
    Node::fail(n.key("type"), e.what());
  }
  n.done();
  return psi;
}

fields::FourCurrent read_source(const Node& root, const GridSpec& grid) {
  const Node n = root.child("source");
  const std::string type = n.text("type");
  fields::FourCurrent j;
  if (type == "dipole") {
    j = fields::dipole_current(grid, n.vec3("centre"), n.positive("width"), n.vec3("amplitude"), n.positive("frequency"));
    // negative controls: shifting the charge phase breaks continuity
    const double shift = n.number("rho_phase_shift", 0.0);
    for (auto& term : j.terms)
      if (!term.rho.empty()) term.law.phase += shift;
  } else if (type == "uniform") {
    j = fields::uniform_current(grid, n.vec3("amplitude"), n.positive("frequency"));
  } else {
    Node::fail(n.key("type"), "must be dipole or uniform");
  }
  n.done();
  return j;
}

Setup read_setup(const Node& root) {
  Setup s;
  s.constants = read_units(root);
  s.grid = read_grid(root);
  const double mass = root.number("mass", 0.0);
  if (mass < 0.0) Node::fail(root.key("mass"), "must be non-negative");
  s.duration = root.positive("duration");
  const long samples = root.integer("samples");
  if (samples < 2) Node::fail(root.key("samples"), "must be at least 2");
  s.samples = std::size_t(samples);
  s.initial = read_initial(root, s.grid, mass, s.constants);
  if (root.has("source")) {
    s.source = read_source(root, s.grid);
    if (s.initial.kind != fields::SpinorKind::photon_embedded)
      Node::fail(root.key("source"), "requires a photon initial state");
  }
  if (root.has("snapshots")) {
    const auto& v = root.raw("snapshots");
    if (!v.is_array()) Node::fail(root.key("snapshots"), "must be an array of sample indices");
    for (const auto& e : v) {
      if (!e.is_number_integer() || e.get<long>() < 0 || e.get<long>() >= samples)
        Node::fail(root.key("snapshots"), "entries must be sample indices below 'samples'");
      s.snapshots.push_back(e.get<std::size_t>());
    }
  }
  return s;
}

// ---- shared helpers ----

Check check(std::string name, std::string anchor, double deviation, double tolerance) {
  const bool pass = std::isfinite(deviation) && deviation <= tolerance;
  return {std::move(name), std::move(anchor), deviation, tolerance, pass};
}

Check lower_bound_check(std::string name, std::string anchor, double value, double bound) {
  // passes when the measured value exceeds the bound (witness checks)
  return {std::move(name), std::move(anchor), value, bound, std::isfinite(value) && value > bound};
}

Check aborted(std::string name, std::string anchor, double tolerance) {
  return {std::move(name), std::move(anchor), std::nullopt, tolerance, false};
}

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed for " + path.string());
}

std::string algebra_anchor(const std::string& identity) {
  if (identity.rfind("pauli", 0) == 0) return "algebra.pauli";
  if (identity.rfind("dirac", 0) == 0) return "algebra.dirac-conditions";
  if (identity.rfind("U U^dag", 0) == 0) return "algebra.unitarity";
  if (identity.rfind("U ", 0) == 0) return "algebra.rotated-basis";
  if (identity.rfind("[", 0) == 0) return "algebra.generator-commutators";
  if (identity.rfind("{gamma", 0) == 0) return "algebra.gamma-anticommutation";
  if (identity.rfind("chiral", 0) == 0) return "algebra.chiral-link";
  return "algebra.catalogue";
}

double spectrum_deviation(const HermitianSpectrum& s, const std::vector<std::pair<double, int>>& expected,
                          double tol) {
  const auto groups = group_eigenvalues(s.eigenvalues, tol);
  if (groups.size() != expected.size()) return std::numeric_limits<double>::infinity();
  double dev = s.residual;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].second != expected[i].second) return std::numeric_limits<double>::infinity();
    dev = std::max(dev, std::abs(groups[i].first - expected[i].first));
  }
  return dev;
}

// ---- commands ----

struct Context {
  const Node& root;
  const std::filesystem::path& out;
  std::ostream& log;
  std::vector<Check> checks;
};

void verify_algebra(Context& ctx) {
  const bool negative = ctx.root.boolean("negative_control", false);
  ctx.root.done();
  auto cat = algebra::MatrixCatalogue::standard();
  if (negative) cat.gens.kappa[0](0, 1) = cplx(0.0, -0.5);
  const auto reports = algebra::verify_identities(cat);
  for (const auto& r : reports) ctx.checks.push_back(check(r.identity, algebra_anchor(r.identity), r.deviation, r.tolerance));
  write_json(ctx.out / "algebra.json", reports);
}

void spin_check(Context& ctx) {
  const Constants c = read_units(ctx.root);
  std::vector<Real3> ks{{0.0, 0.0, 1.0}, {0.3, -0.4, 1.2}};
  if (ctx.root.has("k")) {
    ks.clear();
    const auto& v = ctx.root.raw("k");
    if (!v.is_array()) Node::fail(ctx.root.key("k"), "must be an array of 3-vectors");
    for (const auto& e : v) ks.push_back(Node::vec3_of(e, ctx.root.key("k")));
  }
  const double mass = ctx.root.number("mass", 1.0);
  if (mass < 0.0) Node::fail(ctx.root.key("mass"), "must be non-negative");
  ctx.root.done();

  const auto half = spin::spin_half(c), one = spin::spin_one(c);
  for (const auto* s : {&half, &one}) {
    const std::string tag = s == &half ? "spin-half" : "spin-one";
    const auto ev = spin::verify_spin_evolution(*s, c);
    ctx.checks.push_back(check(tag + " evolution identity", "spin.evolution-identity", ev.deviation, ev.tolerance));
    const auto cl = spin::verify_closure(*s, c);
    ctx.checks.push_back(check(tag + " closure", "spin.closure", cl.deviation, cl.tolerance));
  }
  ctx.checks.push_back(check("spin-one constraint leakage", "spin.photon-selection", spin::constraint_leakage(one), 0.0));
  ctx.checks.push_back(lower_bound_check("spin-half constraint leakage witness", "spin.photon-selection",
                                         spin::constraint_leakage(half), 0.0));

  const double h = c.hbar;
  ctx.checks.push_back(check("spin-one S_z spectrum", "spin.spectra",
                             spectrum_deviation(hermitian_spectrum(one.S[2]), {{-h, 2}, {0.0, 4}, {h, 2}}, 1e-9 * h),
                             1e-12));
  ctx.checks.push_back(check("spin-half S_z spectrum", "spin.spectra",
                             spectrum_deviation(hermitian_spectrum(half.S[2]), {{-h / 2, 4}, {h / 2, 4}}, 1e-9 * h),
                             1e-12));
  json hk = json::array();
  for (const auto& k : ks) {
    const double e = c.hbar * evolution::angular_frequency(k, mass, c);
    const double dev = e == 0.0 ? spectrum_deviation(hermitian_spectrum(evolution::hamiltonian_k(k, mass, c)), {{0.0, 8}}, 1e-9)
                                : spectrum_deviation(hermitian_spectrum(evolution::hamiltonian_k(k, mass, c)),
                                                     {{-e, 4}, {e, 4}}, 1e-9 * e);
    ctx.checks.push_back(check("H(k) spectrum", "evolution.hamiltonian-spectrum", dev, 1e-12 * std::max(1.0, e)));
    hk.push_back({{"k", k}, {"mass", mass}, {"hbar_omega", e}, {"deviation", dev}});
  }

  // witness: a constrained state that spin-1/2 pushes into rows 0/4
  const auto grid = GridSpec::line(1, 1.0);
  auto f = fields::EMField::zero(grid);
  f.E[0] = {1.0, 0.0, 0.0};
  const auto sel = spin::photon_spin_selection(fields::embed_em(f), c);
  auto vec = [](const Vector<8>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back({x.real(), x.imag()});
    return a;
  };
  write_json(ctx.out / "spin.json", {{"spin_one_rows", sel.spin_one_rows},
                                      {"spin_half_rows", sel.spin_half_rows},
                                      {"witness_component", sel.witness_component},
                                      {"witness_input", vec(sel.witness_input)},
                                      {"witness_output", vec(sel.witness_output)},
                                      {"hamiltonian_spectra", hk}});
}

struct RunResult {
  evolution::Run run;
  bool aborted = false;
};

RunResult execute(Context& ctx, const Setup& s) {
  const auto times = evolution::sample_times(s.duration, s.samples);
  RunResult r;
  if (!s.source) {
    r.run = evolution::run_free(s.initial, times, s.constants);
    return r;
  }
  try {
    r.run = evolution::evolve_sourced(s.initial, *s.source, times, s.constants);
  } catch (const ConstraintViolation& e) {
    ctx.log << e.what() << '\n';
    ctx.checks.push_back(aborted("constraint-violation", "evolution.constraint-rows", fields::kConstraintTolerance));
    r.aborted = true;
  }
  return r;
}

// Largest imaginary residue of E and B in a photon embedding [0, E, 0, iB].
double imaginary_residue(const fields::SpinorField8& psi) {
  double imag = 0.0;
  for (const auto& v : psi.psi) {
    for (int a = 1; a < 4; ++a) imag = std::max(imag, std::abs(v[a].imag()));
    for (int a = 5; a < 8; ++a) imag = std::max(imag, std::abs(v[a].real()));
  }
  return imag;
}

void photon_checks(Context& ctx, const evolution::Run& run) {
  double rows = 0.0, imag = 0.0;
  for (const auto& psi : run.samples) {
    rows = std::max(rows, fields::constraint_residual(psi));
    imag = std::max(imag, imaginary_residue(psi));
  }
  ctx.checks.push_back(check("constraint rows", "evolution.constraint-rows", rows, fields::kConstraintTolerance));
  // complex (single-sign) packets are legitimate states; reality is only promised for real fields
  if (imaginary_residue(run.samples.front()) <= fields::kConstraintTolerance)
    ctx.checks.push_back(check("field reality", "evolution.reality", imag, fields::kConstraintTolerance));
}

void write_samples(const std::filesystem::path& path, const evolution::Run& run,
                   const spin::AngularMomentumSeries& am) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << std::setprecision(17);
  out << "t,norm,energy,alpha_x,alpha_y,alpha_z,constraint,Lx,Ly,Lz,Sx,Sy,Sz,Jx,Jy,Jz\n";
  for (std::size_t s = 0; s < run.times.size(); ++s) {
    const auto& psi = run.samples[s];
    const auto a = evolution::alpha_expectation(psi);
    out << run.times[s] << ',' << evolution::norm(psi) << ',' << evolution::energy(psi, run.constants) << ',' << a[0]
        << ',' << a[1] << ',' << a[2] << ',' << fields::constraint_residual(psi);
    for (const auto* series : {&am.orbital, &am.spin, &am.total})
      for (int i = 0; i < 3; ++i) out << ',' << series->values[s][i];
    out << '\n';
  }
  if (!out) throw IoError("write failed for " + path.string());
}

json zitter_json(const evolution::Run& run, const fields::SpinorField8& initial) {
  const double expected = evolution::dominant_zitter_frequency(initial, run.constants);
  evolution::ZitterOptions opt;
  opt.allow_multiline = true;
  try {
    return evolution::zitter_decompose(evolution::alpha_expectation_series(run), expected, opt);
  } catch (const FitFailure& e) {
    return {{"error", e.what()}, {"expected_frequency", expected}};
  }
}

void evolve(Context& ctx) {
  const Setup s = read_setup(ctx.root);
  ctx.root.done();
  auto r = execute(ctx, s);
  if (r.aborted) return;
  const auto& run = r.run;
  const auto am = spin::angular_momentum_series(run.times, run.samples, s.constants);

  if (!s.source) {
    const double n0 = evolution::norm(run.samples.front());
    const double e0 = evolution::energy(run.samples.front(), s.constants);
    double dn = 0.0, de = 0.0;
    for (const auto& psi : run.samples) {
      dn = std::max(dn, std::abs(evolution::norm(psi) - n0) / std::max(n0, 1e-300));
      de = std::max(de, std::abs(evolution::energy(psi, s.constants) - e0) / std::max(std::abs(e0), 1e-300));
    }
    ctx.checks.push_back(check("norm drift", "evolution.norm-conservation", dn, 1e-8));
    ctx.checks.push_back(check("energy drift", "evolution.energy-conservation", de, 1e-8));
    ctx.checks.push_back(check("L + S drift", "spin.total-angular-momentum",
                               spin::max_relative_drift(am.total, s.constants.hbar), 1e-8));
    ctx.checks.push_back(check("boundary weight", "spin.boundary-weight", am.boundary_weight, spin::kBoundaryWeightLimit));
  }
  if (s.initial.kind == fields::SpinorKind::photon_embedded) photon_checks(ctx, run);

  write_samples(ctx.out / "samples.csv", run, am);
  write_json(ctx.out / "zitter.json", zitter_json(run, s.initial));
  for (std::size_t idx : s.snapshots) {
    const auto path = ctx.out / ("fields-" + std::to_string(idx) + ".csv");
    if (s.initial.kind == fields::SpinorKind::photon_embedded)
      io::write_em_csv(path, fields::extract_em(run.samples[idx], {fields::kConstraintTolerance, false}));
    else
      io::write_spinor_csv(path, run.samples[idx]);
  }
}

void zitter(Context& ctx) {
  const Setup s = read_setup(ctx.root);
  const Node a = ctx.root.child("analysis");
  const std::string series = a.text("series", "volume");
  if (series != "volume" && series != "probe") Node::fail(a.key("series"), "must be volume or probe");
  std::size_t probe = 0;
  if (series == "probe") {
    const long p = a.integer("probe_point");
    if (p < 0 || std::size_t(p) >= s.grid.size()) Node::fail(a.key("probe_point"), "must index a grid point");
    probe = std::size_t(p);
  }
  const bool expect = a.boolean("expect_oscillation", true);
  const double expected =
      a.has("expected_frequency") ? a.positive("expected_frequency")
                                  : evolution::dominant_zitter_frequency(s.initial, s.constants);
  evolution::ZitterOptions opt;
  opt.allow_multiline = a.boolean("allow_multiline", false);
  a.done();
  ctx.root.done();

  auto r = execute(ctx, s);
  if (r.aborted) return;
  const auto ser = series == "volume" ? evolution::alpha_expectation_series(r.run)
                                      : evolution::local_half_alpha_series(r.run, probe);
  json out;
  try {
    const auto rep = evolution::zitter_decompose(ser, expected, opt);
    out = rep;
    if (expect) {
      ctx.checks.push_back(check("zitter frequency", "evolution.zitter-frequency",
                                 rep.oscillating ? rep.relative_error : std::numeric_limits<double>::infinity(), 1e-6));
    } else {
      const double amp = std::max({rep.amplitude[0], rep.amplitude[1], rep.amplitude[2]});
      ctx.checks.push_back(check("zitter amplitude", "evolution.zitter-absent", amp, 1e-12));
    }
    if (series == "volume" && !s.source && !expect) {
      const auto v = evolution::velocity_prediction(s.initial, s.constants);
      double dev = 0.0;
      for (int i = 0; i < 3; ++i) dev = std::max(dev, std::abs(rep.dc[i] - v[i]));
      ctx.checks.push_back(check("zitter dc = c<p/H>", "evolution.velocity-dc", dev, 1e-10));
    }
  } catch (const FitFailure& e) {
    ctx.log << e.what() << '\n';
    out = {{"error", e.what()}, {"expected_frequency", expected}};
    ctx.checks.push_back(aborted("zitter fit", "evolution.zitter-frequency", 1e-6));
  }
  write_json(ctx.out / "zitter.json", out);
}

void boost_demo(Context& ctx) {
  const Constants c = read_units(ctx.root);
  const Node f = ctx.root.child("fields");
  lorentz::FieldPair input{f.vec3("E"), f.vec3("B")};
  f.done();
  std::vector<Real3> velocities;
  if (ctx.root.has("velocities")) {
    const auto& v = ctx.root.raw("velocities");
    if (!v.is_array()) Node::fail(ctx.root.key("velocities"), "must be an array of 3-vectors");
    for (const auto& e : v) velocities.push_back(Node::vec3_of(e, ctx.root.key("velocities")));
  }
  const long random_cases = ctx.root.integer("random_cases", 0);
  if (random_cases < 0) Node::fail(ctx.root.key("random_cases"), "must be non-negative");
  const long seed = ctx.root.integer("seed", 20240601);
  const double max_speed = ctx.root.positive("max_speed", 0.9);
  if (max_speed >= 1.0) Node::fail(ctx.root.key("max_speed"), "must be below 1 (units of c)");
  ctx.root.done();

  std::vector<lorentz::FieldPair> inputs(velocities.size(), input);
  std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (long i = 0; i < random_cases; ++i) {
    Real3 dir{u(rng), u(rng), u(rng)};
    const double n = std::sqrt(dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2]);
    const double speed = max_speed * std::abs(u(rng)) * c.c;
    for (auto& x : dir) x *= speed / std::max(n, 1e-12);
    velocities.push_back(dir);
    inputs.push_back({{u(rng), u(rng), u(rng)}, {u(rng), u(rng), u(rng)}});
  }

  json records = json::array();
  double worst = 0.0, rows = 0.0;
  for (std::size_t i = 0; i < velocities.size(); ++i) {
    const lorentz::Boost b(velocities[i], c.c);
    const auto cmp = lorentz::compare_boost_pathways(inputs[i], b);
    worst = std::max(worst, cmp.max_deviation);
    rows = std::max(rows, cmp.constraint_residual);
    records.push_back(cmp);
  }
  ctx.checks.push_back(check("spinor vs tensor vs closed-form", "lorentz.field-boost", worst, 1e-10));
  ctx.checks.push_back(check("boosted constraint rows", "lorentz.constraint", rows, 1e-10));
  write_json(ctx.out / "boost.json", records);
}

void compare_oracle(Context& ctx) {
  const Setup s = read_setup(ctx.root);
  ctx.root.done();
  if (s.initial.kind != fields::SpinorKind::photon_embedded || imaginary_residue(s.initial) > fields::kConstraintTolerance)
    throw ConfigError("config: key 'initial.type' must give a real photon field for compare-oracle");
  auto r = execute(ctx, s);
  if (r.aborted) return;
  const auto f0 = fields::extract_em(s.initial);
  const auto src = s.source ? *s.source : fields::FourCurrent{s.grid, {}};
  const auto classical = oracle::maxwell_evolve(f0, src, r.run.times, s.constants);
  const auto cmp = oracle::compare(r.run, classical);
  ctx.checks.push_back(check("Dirac form vs classical solve", "oracle.agreement", cmp.max_abs, s.source ? 1e-8 : 1e-10));
  ctx.checks.push_back(check("classical Gauss residual", "oracle.constraint", oracle::constraint_residual(classical, src), 1e-10));
  photon_checks(ctx, r.run);
  write_json(ctx.out / "oracle.json", cmp);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string hex(std::uint64_t v) {
  std::ostringstream ss;
  ss << std::hex << std::setw(16) << std::setfill('0') << v;
  return ss.str();
}

}  // namespace

int run(const Invocation& inv, std::ostream& log) {
  const auto start = std::chrono::steady_clock::now();
  worker_threads() = std::max<std::size_t>(1, inv.threads);
  std::string text;
  json config;
  try {
    text = read_file(inv.config);
  } catch (const IoError& e) {
    log << "error: " << e.what() << '\n';
    return kExitIo;
  }
  try {
    config = json::parse(text);
  } catch (const json::parse_error& e) {
    log << "config-parse error: " << e.what() << '\n';
    return kExitConfig;
  }

  std::vector<Check> checks;
  try {
    std::filesystem::create_directories(inv.out);
    const Node root(config, "");
    Context ctx{root, inv.out, log, {}};
    switch (inv.command) {
      case Command::verify_algebra: verify_algebra(ctx); break;
      case Command::spin_check: spin_check(ctx); break;
      case Command::evolve: evolve(ctx); break;
      case Command::zitter: zitter(ctx); break;
      case Command::boost_demo: boost_demo(ctx); break;
      case Command::compare_oracle: compare_oracle(ctx); break;
    }
    checks = std::move(ctx.checks);
  } catch (const ConfigError& e) {
    log << "config-parse error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    log << "config-parse error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    log << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    log << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    // anything else is a failed run, not a config problem
    log << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }

  const bool all_pass = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const json summary{{"command", to_string(inv.command)},
                     {"config_hash", hex(fnv1a(text))},
                     {"checks", checks},
                     {"wall_time_s", wall}};
  try {
    write_json(inv.out / "summary.json", summary);
  } catch (const IoError& e) {
    log << "error: " << e.what() << '\n';
    return kExitIo;
  }
  for (const auto& c : checks)
    if (!c.pass) log << "check failed: " << c.name << '\n';
  return all_pass ? kExitOk : kExitCheckFailed;
}

}  // namespace dirac8::app
