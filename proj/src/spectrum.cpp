#include "dirac8/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace dirac8 {

template <std::size_t N>
HermitianSpectrum hermitian_spectrum(const SquareMatrix<N>& a) {
  using Mat = Eigen::Matrix<cplx, static_cast<int>(N), static_cast<int>(N)>;
  Mat m;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = a(i, j);

  HermitianSpectrum out;
  out.hermiticity = (m - m.adjoint()).cwiseAbs().maxCoeff();

  const Eigen::SelfAdjointEigenSolver<Mat> solver(m);
  const auto& vals = solver.eigenvalues();
  const auto& vecs = solver.eigenvectors();
  for (std::size_t i = 0; i < N; ++i) {
    out.eigenvalues.push_back(vals(i));
    std::vector<cplx> v(N);
    for (std::size_t r = 0; r < N; ++r) v[r] = vecs(r, i);
    out.vectors.push_back(std::move(v));
    const double res = (m * vecs.col(i) - vals(i) * vecs.col(i)).cwiseAbs().maxCoeff();
    out.residual = std::max(out.residual, res);
  }
  return out;
}

template HermitianSpectrum hermitian_spectrum<2>(const SquareMatrix<2>&);
template HermitianSpectrum hermitian_spectrum<4>(const SquareMatrix<4>&);
template HermitianSpectrum hermitian_spectrum<8>(const SquareMatrix<8>&);

std::vector<std::pair<double, int>> group_eigenvalues(const std::vector<double>& sorted, double tol) {
  std::vector<std::pair<double, int>> groups;
  double sum = 0.0;
  int count = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (count > 0 && std::abs(sorted[i] - sorted[i - 1]) > tol) {
      groups.emplace_back(sum / count, count);
      sum = 0.0;
      count = 0;
    }
    sum += sorted[i];
    ++count;
  }
  if (count > 0) groups.emplace_back(sum / count, count);
  return groups;
}

}  // namespace dirac8
