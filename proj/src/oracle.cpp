#include "dirac8/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dirac8/errors.hpp"
#include "dirac8/evolution.hpp"
#include "dirac8/fft.hpp"
#include "dirac8/numeric.hpp"
#include "dirac8/quadrature.hpp"

namespace dirac8::oracle {

namespace {

using fields::Real3;
using Six = std::array<cplx, 6>;

std::span<cplx> as_span(std::vector<Six>& v) { return {reinterpret_cast<cplx*>(v.data()), v.size() * 6}; }
std::span<cplx> as_span(fields::VectorField& v) { return {reinterpret_cast<cplx*>(v.data()), v.size() * 3}; }

// A u with A = [[0, c ik x], [-c ik x, 0]].
Six apply_a(const Real3& k, double c, const Six& u) {
  auto ikx = [&](cplx x, cplx y, cplx z) {
    return std::array<cplx, 3>{kI * (k[1] * z - k[2] * y), kI * (k[2] * x - k[0] * z), kI * (k[0] * y - k[1] * x)};
  };
  const auto cb = ikx(u[3], u[4], u[5]);
  const auto ce = ikx(u[0], u[1], u[2]);
  return {c * cb[0], c * cb[1], c * cb[2], -c * ce[0], -c * ce[1], -c * ce[2]};
}

Six add(const Six& a, const Six& b, cplx s = 1.0) {
  Six out;
  for (int i = 0; i < 6; ++i) out[i] = a[i] + s * b[i];
  return out;
}

std::vector<Six> pack(const fields::EMField& f) {
  std::vector<Six> u(f.grid.size());
  for (std::size_t p = 0; p < u.size(); ++p)
    for (int a = 0; a < 3; ++a) {
      u[p][a] = f.E[p][a];
      u[p][3 + a] = f.B[p][a];
    }
  return u;
}

fields::EMField unpack(const GridSpec& grid, std::vector<Six> hat) {
  fft::inverse(grid, 6, as_span(hat));
  auto f = fields::EMField::zero(grid);
  for (std::size_t p = 0; p < hat.size(); ++p)
    for (int a = 0; a < 3; ++a) {
      f.E[p][a] = hat[p][a];
      f.B[p][a] = hat[p][3 + a];
    }
  return f;
}

struct ModeWeights {
  double sin_over_w = 0.0, one_minus_cos_over_w2 = 0.0;
  std::array<double, quadrature::kNodes> w0{}, w1{}, w2{};
};

}  // namespace

OracleRun maxwell_evolve(const fields::EMField& initial, const fields::FourCurrent& j, const std::vector<double>& times,
                         const Constants& c, const OracleOptions& opt) {
  if (times.empty()) throw std::invalid_argument("maxwell_evolve: empty time grid");
  if (!j.empty() && !(j.grid == initial.grid)) throw GridMismatch("maxwell_evolve: source grid differs from field grid");
  const GridSpec& grid = initial.grid;
  const std::size_t n = grid.size();

  // Spectral source profiles [-4 pi J, 0] per term.
  std::vector<std::vector<Six>> src(j.terms.size(), std::vector<Six>(n));
  for (std::size_t q = 0; q < j.terms.size(); ++q) {
    if (j.terms[q].J.empty()) continue;
    auto jh = j.terms[q].J;
    fft::forward(grid, 3, as_span(jh));
    for (std::size_t p = 0; p < n; ++p)
      for (int a = 0; a < 3; ++a) src[q][p][a] = -4.0 * kPi * jh[p][a];
  }

  auto u = pack(initial);
  fft::forward(grid, 6, as_span(u));

  OracleRun run{times, {}};
  run.samples.push_back(unpack(grid, u));

  std::vector<ModeWeights> mw(n);
  double cached_h = -1.0;
  for (std::size_t s = 1; s < times.size(); ++s) {
    const double interval = times[s] - times[s - 1];
    double fastest = 0.0;
    for (const auto& term : j.terms) fastest = std::max(fastest, std::abs(term.law.frequency));
    const std::size_t steps = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(fastest * std::abs(interval) / opt.max_phase_per_substep)));
    const double h = interval / double(steps);
    if (h != cached_h) {
      parallel_for(n, [&](std::size_t p) {
        const auto k = grid.wave_vector(p);
        const double w = c.c * std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
        ModeWeights& m = mw[p];
        const auto stat = quadrature::exponential_weights(0.0, h);
        for (int i = 0; i < quadrature::kNodes; ++i) m.w0[i] = stat[i].real();
        if (w == 0.0) return;
        const double wh = w * h;
        m.sin_over_w = std::sin(wh) / w;
        m.one_minus_cos_over_w2 = 2.0 * std::pow(std::sin(0.5 * wh), 2) / (w * w);
        const auto full = quadrature::exponential_weights(kI * wh, h);
        const auto delta = quadrature::exponential_weights_minus_static(kI * wh, h);
        for (int i = 0; i < quadrature::kNodes; ++i) {
          m.w1[i] = full[i].imag() / w;
          m.w2[i] = -delta[i].real() / (w * w);
        }
      });
      cached_h = h;
    }
    for (std::size_t step = 0; step < steps; ++step) {
      const double t0 = times[s - 1] + double(step) * h;
      std::vector<std::array<double, quadrature::kNodes>> law(j.terms.size());
      for (std::size_t q = 0; q < j.terms.size(); ++q)
        for (int m = 0; m < quadrature::kNodes; ++m) law[q][m] = j.terms[q].law.value(t0 + quadrature::kNodeFractions[m] * h);
      parallel_for(n, [&](std::size_t p) {
        const auto k = grid.wave_vector(p);
        const ModeWeights& m = mw[p];
        // exp(hA) u = u + sin/w A u + (1 - cos)/w^2 A^2 u
        const Six au = apply_a(k, c.c, u[p]);
        const Six aau = apply_a(k, c.c, au);
        Six next = add(add(u[p], au, m.sin_over_w), aau, m.one_minus_cos_over_w2);
        Six s0{}, s1{}, s2{};
        for (std::size_t q = 0; q < src.size(); ++q)
          for (int i = 0; i < quadrature::kNodes; ++i) {
            s0 = add(s0, src[q][p], m.w0[i] * law[q][i]);
            s1 = add(s1, src[q][p], m.w1[i] * law[q][i]);
            s2 = add(s2, src[q][p], m.w2[i] * law[q][i]);
          }
        next = add(next, s0);
        next = add(next, apply_a(k, c.c, s1));
        next = add(next, apply_a(k, c.c, apply_a(k, c.c, s2)));
        u[p] = next;
      });
    }
    run.samples.push_back(unpack(grid, u));
  }
  return run;
}

Comparison compare(const std::vector<fields::EMField>& a, const std::vector<double>& times_a, const OracleRun& b) {
  if (a.size() != b.samples.size() || times_a.size() != b.times.size())
    throw GridMismatch("compare: sample counts differ");
  for (std::size_t s = 0; s < times_a.size(); ++s)
    if (times_a[s] != b.times[s]) throw GridMismatch("compare: time grids differ");
  Comparison r;
  r.samples = a.size();
  std::vector<double> squares;
  for (std::size_t s = 0; s < a.size(); ++s) {
    const auto& x = a[s];
    const auto& y = b.samples[s];
    if (!(x.grid == y.grid)) throw GridMismatch("compare: grids differ");
    for (std::size_t p = 0; p < x.grid.size(); ++p)
      for (int c = 0; c < 3; ++c) {
        r.max_abs_E = std::max(r.max_abs_E, std::abs(x.E[p][c] - y.E[p][c]));
        r.max_abs_B = std::max(r.max_abs_B, std::abs(x.B[p][c] - y.B[p][c]));
        squares.push_back(std::norm(y.E[p][c]));
        squares.push_back(std::norm(y.B[p][c]));
      }
  }
  r.rms = squares.empty() ? 0.0 : std::sqrt(pairwise_sum(squares) / double(squares.size()));
  r.max_abs = std::max(r.max_abs_E, r.max_abs_B);
  r.max_relative = r.rms > 0.0 ? r.max_abs / r.rms : 0.0;
  return r;
}

Comparison compare(const evolution::Run& run, const OracleRun& oracle) {
  std::vector<fields::EMField> extracted;
  extracted.reserve(run.samples.size());
  for (const auto& psi : run.samples) extracted.push_back(fields::extract_em(psi));
  return compare(extracted, run.times, oracle);
}

double constraint_residual(const OracleRun& run, const fields::FourCurrent& j) {
  double worst = 0.0;
  for (std::size_t s = 0; s < run.samples.size(); ++s) {
    const auto& f = run.samples[s];
    const auto de = fields::divergence(f.grid, f.E);
    const auto db = fields::divergence(f.grid, f.B);
    const auto rho = j.empty() ? fields::ScalarField{} : j.rho(run.times[s]);
    for (std::size_t p = 0; p < de.size(); ++p) {
      const cplx r = rho.empty() ? cplx{} : rho[p];
      worst = std::max({worst, std::abs(de[p] - 4.0 * kPi * r), std::abs(db[p])});
    }
  }
  return worst;
}

std::vector<double> energies(const OracleRun& run) {
  std::vector<double> out;
  for (const auto& f : run.samples) {
    std::vector<double> d(f.grid.size());
    for (std::size_t p = 0; p < d.size(); ++p) {
      double s = 0.0;
      for (int a = 0; a < 3; ++a) s += std::norm(f.E[p][a]) + std::norm(f.B[p][a]);
      d[p] = s;
    }
    out.push_back(pairwise_sum(d) * f.grid.cell_volume() / (8.0 * kPi));
  }
  return out;
}

void to_json(nlohmann::json& j, const Comparison& c) {
  j = nlohmann::json{{"max_abs_E", c.max_abs_E},       {"max_abs_B", c.max_abs_B}, {"rms", c.rms},
                     {"max_abs", c.max_abs},           {"max_relative", c.max_relative},
                     {"samples", c.samples}};
}

}  // namespace dirac8::oracle
