#include "doctest.h"

#include <cmath>

#include "dirac8/quadrature.hpp"

using namespace dirac8;
using namespace dirac8::quadrature;

namespace {

// Reference integral of exp(z (h - tau)/h) tau^p over [0, h] by composite Simpson with many panels.
cplx reference(cplx z, double h, int power) {
  const int n = 20000;
  cplx acc{};
  for (int i = 0; i <= n; ++i) {
    const double tau = h * i / n;
    const double wgt = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    acc += wgt * std::exp(z * (h - tau) / h) * std::pow(tau, power);
  }
  return acc * h / (3.0 * n);
}

}  // namespace

TEST_CASE("moments agree across the series and recurrence branches") {
  for (double r : {3.9, 4.1}) {
    const cplx z = kI * r;
    const auto m = moments(z);
    // m_0 = (e^z - 1)/z in closed form
    CHECK(std::abs(m[0] - (std::exp(z) - 1.0) / z) < 1e-14);
  }
  const auto m0 = moments(0.0);
  for (int j = 0; j < kNodes; ++j) CHECK(std::abs(m0[j] - 1.0 / (j + 1)) < 1e-15);
}

TEST_CASE("moments minus static avoids cancellation") {
  const cplx z = kI * 1e-7;
  const auto d = moments_minus_static(z);
  // leading term z / (j + 2); the next is O(z^2)
  for (int j = 0; j < kNodes; ++j) CHECK(std::abs(d[j] - z / double(j + 2)) < std::norm(z));
}

TEST_CASE("weights integrate cubics exactly") {
  const double h = 0.37;
  for (cplx z : {cplx(0.0), kI * 0.3, kI * -2.5, kI * 9.0, cplx(-0.5, 1.5)}) {
    const auto w = exponential_weights(z, h);
    for (int power = 0; power <= 3; ++power) {
      cplx q{};
      for (int n = 0; n < kNodes; ++n) q += w[n] * std::pow(kNodeFractions[n] * h, power);
      const cplx ref = reference(z, h, power);
      CHECK(std::abs(q - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST_CASE("static weights are Simpson three-eighths") {
  const auto w = exponential_weights(0.0, 1.0);
  CHECK(w[0].real() == doctest::Approx(1.0 / 8.0));
  CHECK(w[1].real() == doctest::Approx(3.0 / 8.0));
  CHECK(w[2].real() == doctest::Approx(3.0 / 8.0));
  CHECK(w[3].real() == doctest::Approx(1.0 / 8.0));
}

TEST_CASE("fourth-order convergence on a smooth source") {
  // integral of exp(-i w (1 - tau)) cos(3 tau) over [0, 1], split into m substeps
  const double w = 2.0, big = 3.0;
  auto approx = [&](int m) {
    const double h = 1.0 / m;
    cplx acc{};
    for (int s = 0; s < m; ++s) {
      const double t0 = s * h;
      const auto wt = exponential_weights(-kI * (w * h), h);
      cplx part{};
      for (int n = 0; n < kNodes; ++n) part += wt[n] * std::cos(big * (t0 + kNodeFractions[n] * h));
      acc += std::exp(-kI * (w * (1.0 - t0 - h))) * part;
    }
    return acc;
  };
  const cplx exact = [&] {
    const int n = 200000;
    cplx a{};
    for (int i = 0; i <= n; ++i) {
      const double tau = double(i) / n;
      const double wgt = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      a += wgt * std::exp(-kI * (w * (1.0 - tau))) * std::cos(big * tau);
    }
    return a / (3.0 * n);
  }();
  const double e1 = std::abs(approx(8) - exact);
  const double e2 = std::abs(approx(16) - exact);
  CHECK(e1 / e2 > 14.0);
}
