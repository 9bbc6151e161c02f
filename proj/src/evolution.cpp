#include "dirac8/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Dense>
#include <boost/math/tools/minima.hpp>

#include "dirac8/algebra.hpp"
#include "dirac8/errors.hpp"
#include "dirac8/fft.hpp"
#include "dirac8/numeric.hpp"
#include "dirac8/quadrature.hpp"

namespace dirac8::evolution {

namespace {

std::span<cplx> as_span(std::vector<Vector<8>>& v) { return {reinterpret_cast<cplx*>(v.data()), v.size() * 8}; }
std::span<cplx> as_span(fields::VectorField& v) { return {reinterpret_cast<cplx*>(v.data()), v.size() * 3}; }

const algebra::DiracSet8& primed() {
  static const auto d = algebra::dirac88_primed();
  return d;
}

bool is_static_mode(const Real3& k, double mass) { return mass == 0.0 && k[0] == 0.0 && k[1] == 0.0 && k[2] == 0.0; }

void require_photon(const SpinorField8& psi, const char* what) {
  if (psi.kind != fields::SpinorKind::photon_embedded)
    throw std::invalid_argument(std::string(what) + ": input must be photon-embedded");
}

std::vector<Vector<8>> forward(const SpinorField8& psi) {
  auto hat = psi.psi;
  fft::forward(psi.grid, 8, as_span(hat));
  return hat;
}

template <std::size_t N>
Vector<N> sub(const Vector<N>& a, const Vector<N>& b) {
  Vector<N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = a[i] - b[i];
  return out;
}

double real_dot3(const Real3& a, const Real3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

}  // namespace

Matrix8 hamiltonian_k(const Real3& k, double mass, const Constants& c) {
  const auto& d = primed();
  Matrix8 h = d.beta * (mass * c.c * c.c);
  for (std::size_t i = 0; i < 3; ++i) h += d.alpha[i] * (c.c * c.hbar * k[i]);
  return h;
}

double angular_frequency(const Real3& k, double mass, const Constants& c) {
  const double mk = mass * c.c / c.hbar;
  return c.c * std::sqrt(real_dot3(k, k) + mk * mk);
}

Projectors energy_projectors(const Real3& k, double mass, const Constants& c) {
  if (is_static_mode(k, mass)) throw DegenerateMode("energy_projectors: H vanishes at k = 0, m = 0");
  Projectors p;
  p.omega = angular_frequency(k, mass, c);
  const Matrix8 h = hamiltonian_k(k, mass, c) * (1.0 / (c.hbar * p.omega));
  p.plus = (Matrix8::identity() + h) * 0.5;
  p.minus = (Matrix8::identity() - h) * 0.5;
  return p;
}

ModeDecomposition decompose(const SpinorField8& psi, const Constants& c) {
  ModeDecomposition m;
  m.grid = psi.grid;
  m.mass = psi.mass;
  m.constants = c;
  m.kind = psi.kind;
  m.plus = forward(psi);
  const std::size_t n = m.plus.size();
  m.minus.assign(n, Vector<8>{});
  m.omega.assign(n, 0.0);
  parallel_for(n, [&](std::size_t p) {
    const auto k = m.grid.wave_vector(p);
    if (is_static_mode(k, m.mass)) return;
    const auto proj = energy_projectors(k, m.mass, c);
    const Vector<8> hat = m.plus[p];
    m.plus[p] = proj.plus * hat;
    m.minus[p] = proj.minus * hat;
    m.omega[p] = proj.omega;
  });
  return m;
}

SpinorField8 synthesize(const ModeDecomposition& modes, double t) {
  SpinorField8 out{modes.grid, std::vector<Vector<8>>(modes.plus.size()), modes.mass, modes.kind};
  parallel_for(out.psi.size(), [&](std::size_t p) {
    const cplx ep = std::exp(-kI * (modes.omega[p] * t));
    const cplx em = std::conj(ep);
    for (std::size_t i = 0; i < 8; ++i) out.psi[p][i] = ep * modes.plus[p][i] + em * modes.minus[p][i];
  });
  fft::inverse(out.grid, 8, as_span(out.psi));
  return out;
}

SpinorField8 evolve_free(const SpinorField8& psi, double t, const Constants& c) {
  return synthesize(decompose(psi, c), t);
}

std::vector<double> sample_times(double duration, std::size_t samples) {
  if (samples < 2) throw std::invalid_argument("sample_times: need at least two samples");
  std::vector<double> t(samples);
  for (std::size_t i = 0; i < samples; ++i) t[i] = duration * double(i) / double(samples - 1);
  return t;
}

Run run_free(const SpinorField8& psi, const std::vector<double>& times, const Constants& c) {
  const auto modes = decompose(psi, c);
  Run r{times, {}, c};
  r.samples.reserve(times.size());
  for (double t : times) r.samples.push_back(synthesize(modes, t));
  return r;
}

std::size_t substeps_for(const fields::FourCurrent& j, double interval, const SourcedOptions& opt) {
  double fastest = 0.0;
  for (const auto& term : j.terms) fastest = std::max(fastest, std::abs(term.law.frequency));
  const double phase = fastest * std::abs(interval);
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(phase / opt.max_phase_per_substep)));
}

double gauss_residual(const SpinorField8& psi, const fields::ScalarField& rho) {
  const auto f = fields::extract_em(psi, {std::numeric_limits<double>::infinity(), false});
  const auto div_e = fields::divergence(psi.grid, f.E);
  const auto div_b = fields::divergence(psi.grid, f.B);
  double worst = 0.0;
  for (std::size_t p = 0; p < div_e.size(); ++p) {
    const cplx r = rho.empty() ? cplx{} : rho[p];
    worst = std::max({worst, std::abs(div_e[p] - 4.0 * kPi * r), std::abs(div_b[p])});
  }
  return worst;
}

Run evolve_sourced(const SpinorField8& psi0, const fields::FourCurrent& j, const std::vector<double>& times,
                   const Constants& c, const SourcedOptions& opt) {
  require_photon(psi0, "evolve_sourced");
  if (times.empty()) throw std::invalid_argument("evolve_sourced: empty time grid");
  if (!(j.grid == psi0.grid)) throw GridMismatch("evolve_sourced: source grid differs from field grid");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1])) throw std::invalid_argument("evolve_sourced: times must increase");

  for (double t : times) {
    const double res = fields::continuity_residual(j, t);
    if (res > opt.continuity_tolerance) {
      std::ostringstream msg;
      msg << "constraint-violation: source violates continuity at t = " << t << " (residual " << res << ")";
      throw ConstraintViolation(msg.str());
    }
  }
  {
    const double res = gauss_residual(psi0, j.rho(times.front()));
    if (res > opt.gauss_tolerance) {
      std::ostringstream msg;
      msg << "constraint-violation: initial field violates Gauss's law (residual " << res << ")";
      throw ConstraintViolation(msg.str());
    }
  }

  const GridSpec& grid = psi0.grid;
  const std::size_t n = grid.size();

  // Spectral source vectors [c rho, -iJ, 0, 0, 0, 0] per term.
  std::vector<std::vector<Vector<8>>> src(j.terms.size(), std::vector<Vector<8>>(n));
  for (std::size_t q = 0; q < j.terms.size(); ++q) {
    const auto& term = j.terms[q];
    if (!term.rho.empty()) {
      auto rho_hat = term.rho;
      fft::forward(grid, 1, rho_hat);
      for (std::size_t p = 0; p < n; ++p) src[q][p][0] = c.c * rho_hat[p];
    }
    if (!term.J.empty()) {
      auto j_hat = term.J;
      fft::forward(grid, 3, as_span(j_hat));
      for (std::size_t p = 0; p < n; ++p)
        for (int a = 0; a < 3; ++a) src[q][p][1 + a] = -kI * j_hat[p][a];
    }
  }

  std::vector<Projectors> proj(n);
  std::vector<char> is_static(n, 0);
  parallel_for(n, [&](std::size_t p) {
    const auto k = grid.wave_vector(p);
    if (is_static_mode(k, psi0.mass)) {
      is_static[p] = 1;
      return;
    }
    proj[p] = energy_projectors(k, psi0.mass, c);
  });

  auto hat = forward(psi0);
  Run run{times, {}, c};
  run.samples.reserve(times.size());

  auto snapshot = [&](double t) {
    SpinorField8 out{grid, hat, psi0.mass, psi0.kind};
    fft::inverse(grid, 8, as_span(out.psi));
    const double res = fields::constraint_residual(out);
    if (res > opt.constraint_tolerance) {
      std::ostringstream msg;
      msg << "constraint-violation: components 0/4 reached " << res << " at t = " << t;
      throw ConstraintViolation(msg.str());
    }
    run.samples.push_back(std::move(out));
  };
  snapshot(times.front());

  using Weights = std::array<cplx, quadrature::kNodes>;
  std::vector<Weights> w_plus(n), w_minus(n);
  std::vector<cplx> phase(n);
  Weights w_static{};
  double cached_h = -1.0;

  for (std::size_t s = 1; s < times.size(); ++s) {
    const double interval = times[s] - times[s - 1];
    const std::size_t steps = substeps_for(j, interval, opt);
    const double h = interval / double(steps);
    if (h != cached_h) {
      w_static = quadrature::exponential_weights(0.0, h);
      parallel_for(n, [&](std::size_t p) {
        if (is_static[p]) return;
        const double wh = proj[p].omega * h;
        w_plus[p] = quadrature::exponential_weights(-kI * wh, h);
        w_minus[p] = quadrature::exponential_weights(kI * wh, h);
        phase[p] = std::exp(-kI * wh);
      });
      cached_h = h;
    }
    for (std::size_t step = 0; step < steps; ++step) {
      const double t0 = times[s - 1] + double(step) * h;
      std::vector<std::array<double, quadrature::kNodes>> law(j.terms.size());
      for (std::size_t q = 0; q < j.terms.size(); ++q)
        for (int m = 0; m < quadrature::kNodes; ++m) law[q][m] = j.terms[q].law.value(t0 + quadrature::kNodeFractions[m] * h);

      parallel_for(n, [&](std::size_t p) {
        std::array<Vector<8>, quadrature::kNodes> node{};
        for (std::size_t q = 0; q < src.size(); ++q)
          for (int m = 0; m < quadrature::kNodes; ++m)
            for (std::size_t i = 0; i < 5; ++i) node[m][i] += law[q][m] * src[q][p][i];
        Vector<8>& v = hat[p];
        if (is_static[p]) {
          for (int m = 0; m < quadrature::kNodes; ++m)
            for (std::size_t i = 0; i < 8; ++i) v[i] += -4.0 * kPi * kI * w_static[m] * node[m][i];
          return;
        }
        Vector<8> sp{}, sm{};
        for (int m = 0; m < quadrature::kNodes; ++m)
          for (std::size_t i = 0; i < 8; ++i) {
            sp[i] += w_plus[p][m] * node[m][i];
            sm[i] += w_minus[p][m] * node[m][i];
          }
        const Vector<8> vp = proj[p].plus * v;
        const Vector<8> vm = proj[p].minus * v;
        const Vector<8> srcp = proj[p].plus * sp;
        const Vector<8> srcm = proj[p].minus * sm;
        const cplx ep = phase[p], em = std::conj(phase[p]);
        for (std::size_t i = 0; i < 8; ++i) v[i] = ep * vp[i] + em * vm[i] - 4.0 * kPi * kI * (srcp[i] + srcm[i]);
      });
    }
    snapshot(times[s]);
  }
  return run;
}

double norm(const SpinorField8& psi) {
  std::vector<double> d(psi.psi.size());
  for (std::size_t p = 0; p < d.size(); ++p) d[p] = norm2(psi.psi[p]);
  return pairwise_sum(d) * psi.grid.cell_volume();
}

double energy(const SpinorField8& psi, const Constants& c) {
  const auto hat = forward(psi);
  std::vector<double> e(hat.size());
  parallel_for(hat.size(), [&](std::size_t p) {
    e[p] = inner(hat[p], hamiltonian_k(psi.grid.wave_vector(p), psi.mass, c) * hat[p]).real();
  });
  return pairwise_sum(e) * psi.grid.cell_volume() / double(hat.size());
}

Real3 half_alpha_integral(const SpinorField8& psi) {
  const auto& d = primed();
  const std::size_t n = psi.psi.size();
  std::array<std::vector<double>, 3> dens;
  for (auto& v : dens) v.resize(n);
  parallel_for(n, [&](std::size_t p) {
    for (int a = 0; a < 3; ++a) dens[a][p] = 0.5 * inner(psi.psi[p], d.alpha[a] * psi.psi[p]).real();
  });
  Real3 out{};
  for (int a = 0; a < 3; ++a) out[a] = pairwise_sum(dens[a]) * psi.grid.cell_volume();
  return out;
}

Real3 alpha_expectation(const SpinorField8& psi) {
  const double nrm = norm(psi);
  Real3 out = half_alpha_integral(psi);
  for (auto& v : out) v = nrm > 0.0 ? 2.0 * v / nrm : 0.0;
  return out;
}

spin::ExpectationSeries alpha_expectation_series(const Run& run) {
  spin::ExpectationSeries s{"alpha", run.times, {}};
  for (const auto& psi : run.samples) s.values.push_back(alpha_expectation(psi));
  return s;
}

spin::ExpectationSeries local_half_alpha_series(const Run& run, std::size_t point) {
  const auto& d = primed();
  spin::ExpectationSeries s{"half_alpha_density", run.times, {}};
  for (const auto& psi : run.samples) {
    if (point >= psi.psi.size()) throw std::out_of_range("local_half_alpha_series: point outside grid");
    Real3 v{};
    for (int a = 0; a < 3; ++a) v[a] = 0.5 * inner(psi.psi[point], d.alpha[a] * psi.psi[point]).real();
    s.values.push_back(v);
  }
  return s;
}

Real3 velocity_prediction(const SpinorField8& psi, const Constants& c) {
  const auto hat = forward(psi);
  const std::size_t n = hat.size();
  std::array<std::vector<double>, 3> num;
  for (auto& v : num) v.assign(n, 0.0);
  std::vector<double> den(n);
  parallel_for(n, [&](std::size_t p) {
    den[p] = norm2(hat[p]);
    const auto k = psi.grid.wave_vector(p);
    if (is_static_mode(k, psi.mass)) return;
    const auto proj = energy_projectors(k, psi.mass, c);
    const Vector<8> sign = sub(proj.plus * hat[p], proj.minus * hat[p]);
    const double q = inner(hat[p], sign).real() * c.c / proj.omega;
    for (int a = 0; a < 3; ++a) num[a][p] = q * k[a];
  });
  const double total = pairwise_sum(den);
  Real3 out{};
  if (total > 0.0)
    for (int a = 0; a < 3; ++a) out[a] = pairwise_sum(num[a]) / total;
  return out;
}

double dominant_zitter_frequency(const SpinorField8& psi, const Constants& c) {
  const auto modes = decompose(psi, c);
  double best = -1.0, freq = 0.0;
  for (std::size_t p = 0; p < modes.plus.size(); ++p) {
    const double w = std::sqrt(norm2(modes.plus[p]) * norm2(modes.minus[p]));
    if (w > best) {
      best = w;
      freq = 2.0 * modes.omega[p];
    }
  }
  return freq;
}

namespace {

// Least squares of y against [1, cos w_l t, sin w_l t for each line], all components at once.
struct JointFit {
  std::vector<double> omega;
  Real3 dc{};
  std::vector<Real3> cos_coef;
  std::vector<Real3> sin_coef;
  double residual = 0.0;
};

JointFit fit_lines(const std::vector<double>& t, const std::vector<Real3>& y, const std::vector<double>& omega) {
  const auto n = static_cast<Eigen::Index>(t.size());
  const auto cols = static_cast<Eigen::Index>(1 + 2 * omega.size());
  Eigen::MatrixXd x(n, cols), rhs(n, 3);
  for (Eigen::Index i = 0; i < n; ++i) {
    x(i, 0) = 1.0;
    for (std::size_t l = 0; l < omega.size(); ++l) {
      x(i, Eigen::Index(1 + 2 * l)) = std::cos(omega[l] * t[i]);
      x(i, Eigen::Index(2 + 2 * l)) = std::sin(omega[l] * t[i]);
    }
    for (int a = 0; a < 3; ++a) rhs(i, a) = y[i][a];
  }
  const Eigen::MatrixXd beta = x.colPivHouseholderQr().solve(rhs);
  JointFit f;
  f.omega = omega;
  f.cos_coef.resize(omega.size());
  f.sin_coef.resize(omega.size());
  for (int a = 0; a < 3; ++a) {
    f.dc[a] = beta(0, a);
    for (std::size_t l = 0; l < omega.size(); ++l) {
      f.cos_coef[l][a] = beta(Eigen::Index(1 + 2 * l), a);
      f.sin_coef[l][a] = beta(Eigen::Index(2 + 2 * l), a);
    }
  }
  f.residual = (rhs - x * beta).squaredNorm();
  return f;
}

double line_amplitude(const JointFit& f, std::size_t l) {
  double s = 0.0;
  for (int a = 0; a < 3; ++a) s += f.cos_coef[l][a] * f.cos_coef[l][a] + f.sin_coef[l][a] * f.sin_coef[l][a];
  return std::sqrt(s);
}

double norm3(const Real3& v) { return std::sqrt(real_dot3(v, v)); }

// Strongest periodogram peak of the mean-removed series on a 4x zero-padded frequency grid.
std::pair<double, double> periodogram_peak(const std::vector<double>& t, const std::vector<Real3>& y) {
  const std::size_t n = t.size();
  const double span = t.back() - t.front();
  Real3 mean{};
  for (const auto& v : y)
    for (int a = 0; a < 3; ++a) mean[a] += v[a] / double(n);
  const double dt = span / double(n - 1);
  const double step = 2.0 * kPi / (4.0 * span);
  const double nyquist = kPi / dt;
  double best_power = -1.0, best_omega = step;
  for (double w = step; w <= nyquist; w += step) {
    double power = 0.0;
    for (int a = 0; a < 3; ++a) {
      cplx acc{};
      for (std::size_t i = 0; i < n; ++i) acc += (y[i][a] - mean[a]) * std::exp(-kI * (w * t[i]));
      power += std::norm(acc);
    }
    if (power > best_power) {
      best_power = power;
      best_omega = w;
    }
  }
  return {best_omega, step};
}

// Minimises the joint residual over line l alone within +-1.5 steps of its current value.
void refine_line(const std::vector<double>& t, const std::vector<Real3>& y, std::vector<double>& omega,
                 std::size_t l, double step) {
  const double centre = omega[l];
  const double lo = std::max(centre - 1.5 * step, 0.25 * step);
  const double hi = centre + 1.5 * step;
  auto trial = omega;
  const auto best = boost::math::tools::brent_find_minima(
      [&](double w) {
        trial[l] = w;
        return fit_lines(t, y, trial).residual;
      },
      lo, hi, std::numeric_limits<double>::digits / 2 + 6);
  omega[l] = best.first;
}

std::vector<Real3> residual_series(const std::vector<double>& t, const std::vector<Real3>& y, const JointFit& f) {
  auto r = y;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t l = 0; l < f.omega.size(); ++l)
      for (int a = 0; a < 3; ++a)
        r[i][a] -= f.cos_coef[l][a] * std::cos(f.omega[l] * t[i]) + f.sin_coef[l][a] * std::sin(f.omega[l] * t[i]);
  return r;
}

}  // namespace

ZitterReport zitter_decompose(const spin::ExpectationSeries& series, double expected_frequency,
                              const ZitterOptions& opt) {
  const auto& t = series.times;
  const auto& y = series.values;
  if (t.size() != y.size()) throw FitFailure("zitter_decompose: times and values differ in length");
  if (t.size() < 16) throw FitFailure("zitter_decompose: need at least 16 samples");
  const double span = t.back() - t.front();
  if (!(span > 0.0)) throw FitFailure("zitter_decompose: samples span no time");

  ZitterReport r;
  r.expected_frequency = expected_frequency;
  r.relative_error = std::numeric_limits<double>::quiet_NaN();

  std::vector<double> omega;
  JointFit fit = fit_lines(t, y, omega);
  double step = 0.0;
  for (std::size_t line = 0; line < opt.max_lines; ++line) {
    const auto residual = residual_series(t, y, fit);
    const auto peak = periodogram_peak(t, residual);
    step = peak.second;
    std::vector<double> single{peak.first};
    refine_line(t, residual, single, 0, step);
    const JointFit probe = fit_lines(t, residual, single);
    const double amp = line_amplitude(probe, 0);
    const double floor = opt.floor * std::max(1.0, norm3(fit.dc));
    if (amp <= floor) {
      if (line == 0) {
        r.dc = probe.dc;
        for (int a = 0; a < 3; ++a) r.amplitude[a] = std::hypot(probe.cos_coef[0][a], probe.sin_coef[0][a]);
        return r;
      }
      break;
    }
    if (line > 0 && amp <= opt.line_threshold * std::max(norm3(fit.dc), line_amplitude(fit, 0))) break;
    omega.push_back(single[0]);
    for (int sweep = 0; sweep < (omega.size() > 1 ? 3 : 1); ++sweep)
      for (std::size_t l = 0; l < omega.size(); ++l) refine_line(t, y, omega, l, step);
    fit = fit_lines(t, y, omega);
  }

  // strongest line first
  std::vector<std::size_t> order(omega.size());
  for (std::size_t l = 0; l < order.size(); ++l) order[l] = l;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return line_amplitude(fit, a) > line_amplitude(fit, b); });
  const std::size_t main = order.front();

  r.dc = fit.dc;
  r.oscillating = true;
  r.fitted_frequency = fit.omega[main];
  for (int a = 0; a < 3; ++a) r.amplitude[a] = std::hypot(fit.cos_coef[main][a], fit.sin_coef[main][a]);
  for (std::size_t l : order) r.lines.push_back({fit.omega[l], line_amplitude(fit, l)});
  if (expected_frequency > 0.0) r.relative_error = std::abs(r.fitted_frequency - expected_frequency) / expected_frequency;
  if (span < 2.0 * (2.0 * kPi / r.fitted_frequency))
    throw FitFailure("zitter_decompose: series spans fewer than two periods of the fitted line");
  if (r.lines.size() > 1 && !opt.allow_multiline) {
    std::ostringstream msg;
    msg << "zitter_decompose: " << r.lines.size() << " significant lines, no single dominant mode";
    throw FitFailure(msg.str());
  }
  return r;
}

PoyntingSplit poynting_split(const fields::VectorField& E, const fields::VectorField& B) {
  if (E.size() != B.size()) throw GridMismatch("poynting_split: E and B differ in size");
  PoyntingSplit s;
  s.dc.resize(E.size());
  s.osc.resize(E.size());
  for (std::size_t p = 0; p < E.size(); ++p) {
    fields::Vec3 ec, bc;
    for (int a = 0; a < 3; ++a) {
      ec[a] = std::conj(E[p][a]);
      bc[a] = std::conj(B[p][a]);
    }
    const auto x1 = fields::cross(ec, B[p]);
    const auto x2 = fields::cross(E[p], bc);
    for (int a = 0; a < 3; ++a) s.dc[p][a] = x1[a] + x2[a];
    s.osc[p] = fields::cross(E[p], B[p]);
  }
  return s;
}

fields::Vec3 poynting_reconstruct(const PoyntingSplit& s, std::size_t point, double omega, double t) {
  const cplx carrier = std::exp(-2.0 * kI * omega * t);
  fields::Vec3 out;
  for (int a = 0; a < 3; ++a) out[a] = s.dc[point][a] + 2.0 * (s.osc[point][a] * carrier).real();
  return out;
}

SpinorField8 embed_monochromatic(const GridSpec& grid, const fields::VectorField& E, const fields::VectorField& B,
                                 double omega, double t) {
  auto f = fields::EMField::zero(grid);
  if (E.size() != grid.size() || B.size() != grid.size())
    throw GridMismatch("embed_monochromatic: amplitude size does not match grid");
  const cplx carrier = std::exp(-kI * omega * t);
  for (std::size_t p = 0; p < grid.size(); ++p)
    for (int a = 0; a < 3; ++a) {
      f.E[p][a] = 2.0 * (E[p][a] * carrier).real();
      f.B[p][a] = 2.0 * (B[p][a] * carrier).real();
    }
  return fields::embed_em(f);
}

ZitterPoyntingReport zitter_equals_poynting(const GridSpec& grid, const fields::VectorField& E,
                                            const fields::VectorField& B, double omega,
                                            const std::vector<double>& times, const Constants& c) {
  const auto modes = decompose(embed_monochromatic(grid, E, B, omega, 0.0), c);
  const auto split = poynting_split(E, B);
  const auto& d = primed();
  const std::size_t n = grid.size();
  const double dv = grid.cell_volume();

  Real3 dc_int{};
  for (int a = 0; a < 3; ++a) {
    std::vector<double> col(n);
    for (std::size_t p = 0; p < n; ++p) col[p] = split.dc[p][a].real();
    dc_int[a] = pairwise_sum(col) * dv;
  }

  ZitterPoyntingReport r;
  r.samples = times.size();
  for (std::size_t p = 0; p < n; ++p)
    for (int a = 0; a < 3; ++a) r.pointwise_amplitude = std::max(r.pointwise_amplitude, 2.0 * std::abs(split.osc[p][a]));

  for (double t : times) {
    const auto psi = synthesize(modes, t);
    const Real3 lhs_total = half_alpha_integral(psi);
    const cplx carrier = std::exp(-2.0 * kI * omega * t);
    std::array<std::vector<double>, 3> osc;
    for (auto& v : osc) v.resize(n);
    for (std::size_t p = 0; p < n; ++p) {
      const auto rec = poynting_reconstruct(split, p, omega, t);
      for (int a = 0; a < 3; ++a) {
        osc[a][p] = 2.0 * (split.osc[p][a] * carrier).real();
        const double local = 0.5 * inner(psi.psi[p], d.alpha[a] * psi.psi[p]).real();
        r.pointwise_deviation = std::max(r.pointwise_deviation, std::abs(local - rec[a].real()));
      }
    }
    for (int a = 0; a < 3; ++a) {
      const double rhs = pairwise_sum(osc[a]) * dv;
      const double lhs = lhs_total[a] - dc_int[a];
      r.integrated_deviation = std::max(r.integrated_deviation, std::abs(lhs - rhs));
      r.integrated_amplitude = std::max(r.integrated_amplitude, std::abs(rhs));
    }
  }
  return r;
}

void to_json(nlohmann::json& j, const ZitterReport& r) {
  nlohmann::json lines = nlohmann::json::array();
  for (const auto& l : r.lines) lines.push_back({{"frequency", l.frequency}, {"amplitude", l.amplitude}});
  j = nlohmann::json{{"dc", r.dc},
                     {"amplitude", r.amplitude},
                     {"fitted_frequency", r.fitted_frequency},
                     {"expected_frequency", r.expected_frequency},
                     {"relative_frequency_error", std::isnan(r.relative_error) ? nlohmann::json(nullptr)
                                                                               : nlohmann::json(r.relative_error)},
                     {"oscillating", r.oscillating},
                     {"lines", lines}};
}

void to_json(nlohmann::json& j, const ZitterPoyntingReport& r) {
  j = nlohmann::json{{"integrated_deviation", r.integrated_deviation},
                     {"integrated_amplitude", r.integrated_amplitude},
                     {"pointwise_deviation", r.pointwise_deviation},
                     {"pointwise_amplitude", r.pointwise_amplitude},
                     {"samples", r.samples}};
}

}  // namespace dirac8::evolution
