#include "dirac8/spin.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>

#include "dirac8/errors.hpp"
#include "dirac8/fft.hpp"
#include "dirac8/numeric.hpp"

namespace dirac8::spin {

namespace {

using algebra::levi_civita;

std::span<cplx> as_span(std::vector<Vector<8>>& v) { return {reinterpret_cast<cplx*>(v.data()), v.size() * 8}; }

}  // namespace

SpinOperator spin_half(const Constants& k) {
  const auto g = algebra::generators();
  SpinOperator s{{}, "spin-1/2"};
  for (std::size_t i = 0; i < 3; ++i) s.S[i] = block2x2(g.theta[i], g.kappa[i], g.kappa[i], g.theta[i]) * (0.5 * k.hbar);
  return s;
}

SpinOperator spin_one(const Constants& k) {
  const auto g = algebra::generators();
  SpinOperator s{{}, "spin-1"};
  for (std::size_t i = 0; i < 3; ++i) s.S[i] = block_diag(g.theta[i], g.theta[i]) * k.hbar;
  return s;
}

algebra::AlgebraReport verify_spin_evolution(const SpinOperator& s, const Constants& k) {
  const auto d = algebra::dirac88_primed();
  double dev = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int kk = 0; kk < 3; ++kk) {
      const Matrix8 lhs = commutator(d.alpha[kk], s.S[i]) * (kI / k.hbar);
      Matrix8 rhs;
      for (int j = 0; j < 3; ++j) rhs -= d.alpha[j] * double(levi_civita(i, j, kk));
      dev = std::max(dev, max_abs_diff(lhs, rhs));
    }
    dev = std::max(dev, commutator(d.beta, s.S[i]).max_abs());
  }
  return algebra::make_report(s.label + ": (i/hbar)[alpha_k, S_i] = -eps_ijk alpha_j, [beta, S_i] = 0", dev, 0.0);
}

algebra::AlgebraReport verify_closure(const SpinOperator& s, const Constants& k) {
  double dev = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Matrix8 rhs;
      for (int m = 0; m < 3; ++m) rhs += s.S[m] * (kI * k.hbar * double(levi_civita(i, j, m)));
      dev = std::max(dev, max_abs_diff(commutator(s.S[i], s.S[j]), rhs));
    }
  return algebra::make_report(s.label + ": [S_i, S_j] = i hbar eps_ijk S_k", dev, 1e-15);
}

double constraint_leakage(const SpinOperator& s) {
  double worst = 0.0;
  for (const auto& m : s.S)
    for (std::size_t r : {0u, 4u})
      for (std::size_t c = 0; c < 8; ++c)
        if (c != 0 && c != 4) worst = std::max(worst, std::abs(m(r, c)));
  return worst;
}

SelectionReport photon_spin_selection(const fields::SpinorField8& psi, const Constants& k) {
  if (psi.kind != fields::SpinorKind::photon_embedded)
    throw std::invalid_argument("photon_spin_selection: input must be photon-embedded");
  const auto one = spin_one(k);
  const auto half = spin_half(k);
  SelectionReport r;
  for (std::size_t p = 0; p < psi.psi.size(); ++p) {
    const auto& v = psi.psi[p];
    for (int i = 0; i < 3; ++i) {
      const auto a = one.S[i] * v;
      r.spin_one_rows = std::max({r.spin_one_rows, std::abs(a[0]), std::abs(a[4])});
      const auto b = half.S[i] * v;
      const double rows = std::max(std::abs(b[0]), std::abs(b[4]));
      if (rows > r.spin_half_rows) {
        r.spin_half_rows = rows;
        r.witness_point = p;
        r.witness_component = i;
        r.witness_input = v;
        r.witness_output = b;
      }
    }
  }
  return r;
}

Expectations angular_momentum(const fields::SpinorField8& psi, const Constants& k) {
  const auto& grid = psi.grid;
  const std::size_t n = grid.size();
  if (psi.psi.size() != n) throw GridMismatch("angular_momentum: field size does not match grid");
  const auto op = psi.kind == fields::SpinorKind::photon_embedded ? spin_one(k) : spin_half(k);

  auto hat = psi.psi;
  fft::forward(grid, 8, as_span(hat));
  std::array<std::vector<Vector<8>>, 3> grad;
  for (int a = 0; a < 3; ++a) {
    if (grid.points()[a] == 1) continue;
    grad[a].resize(n);
    for (std::size_t p = 0; p < n; ++p) {
      const double ka = grid.wave_vector(p)[a];
      for (std::size_t c = 0; c < 8; ++c) grad[a][p][c] = kI * ka * hat[p][c];
    }
    fft::inverse(grid, 8, as_span(grad[a]));
  }

  std::vector<double> dens(n), outer(n);
  std::array<std::vector<double>, 3> ldens, sdens;
  for (auto& v : ldens) v.assign(n, 0.0);
  for (auto& v : sdens) v.assign(n, 0.0);
  parallel_for(n, [&](std::size_t p) {
    const auto& v = psi.psi[p];
    dens[p] = norm2(v);
    const auto r = grid.centred_position(p);
    bool edge = false;
    for (int a = 0; a < 3; ++a)
      if (grid.points()[a] > 1 && std::abs(r[a]) > 0.375 * grid.lengths()[a]) edge = true;
    outer[p] = edge ? dens[p] : 0.0;
    for (int a = 0; a < 3; ++a) {
      cplx acc{};
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) {
          const int e = levi_civita(a, b, c);
          if (e == 0 || grad[c].empty() || r[b] == 0.0) continue;
          acc += double(e) * r[b] * inner(v, grad[c][p]);
        }
      ldens[a][p] = (-kI * k.hbar * acc).real();
      sdens[a][p] = inner(v, op.S[a] * v).real();
    }
  });
  Expectations out;
  out.norm = pairwise_sum(dens) * grid.cell_volume();
  const double total = pairwise_sum(dens);
  if (total > 0.0) {
    out.boundary_weight = pairwise_sum(outer) / total;
    for (int a = 0; a < 3; ++a) {
      out.orbital[a] = pairwise_sum(ldens[a]) / total;
      out.spin[a] = pairwise_sum(sdens[a]) / total;
    }
  }
  return out;
}

AngularMomentumSeries angular_momentum_series(const std::vector<double>& times,
                                              const std::vector<fields::SpinorField8>& samples, const Constants& k) {
  if (times.size() != samples.size()) throw std::invalid_argument("angular_momentum_series: length mismatch");
  AngularMomentumSeries s;
  s.orbital.label = "L";
  s.spin.label = "S";
  s.total.label = "J";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto e = angular_momentum(samples[i], k);
    Real3 j{};
    for (int a = 0; a < 3; ++a) j[a] = e.orbital[a] + e.spin[a];
    for (auto* ser : {&s.orbital, &s.spin, &s.total}) ser->times.push_back(times[i]);
    s.orbital.values.push_back(e.orbital);
    s.spin.values.push_back(e.spin);
    s.total.values.push_back(j);
    s.norm.push_back(e.norm);
    s.boundary_weight = std::max(s.boundary_weight, e.boundary_weight);
  }
  s.boundary_warning = s.boundary_weight > kBoundaryWeightLimit;
  return s;
}

double max_relative_drift(const ExpectationSeries& s, double scale) {
  if (s.values.empty()) return 0.0;
  const auto& v0 = s.values.front();
  const double ref = std::max(std::sqrt(v0[0] * v0[0] + v0[1] * v0[1] + v0[2] * v0[2]), scale);
  double worst = 0.0;
  for (const auto& v : s.values) {
    double d = 0.0;
    for (int a = 0; a < 3; ++a) d += (v[a] - v0[a]) * (v[a] - v0[a]);
    worst = std::max(worst, std::sqrt(d) / ref);
  }
  return worst;
}

void write_series_csv(const std::string& path, const AngularMomentumSeries& series) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << std::setprecision(17);
  out << "t,Lx,Ly,Lz,Sx,Sy,Sz,Jx,Jy,Jz\n";
  for (std::size_t i = 0; i < series.total.times.size(); ++i) {
    out << series.total.times[i];
    for (const auto* s : {&series.orbital, &series.spin, &series.total})
      for (double v : s->values[i]) out << ',' << v;
    out << '\n';
  }
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace dirac8::spin
