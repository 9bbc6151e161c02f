#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dirac8/matrix.hpp"

namespace dirac8 {

struct HermitianSpectrum {
  std::vector<double> eigenvalues;       // ascending
  std::vector<std::vector<cplx>> vectors; // orthonormal, matching eigenvalues
  double residual = 0.0;                 // max_i |A v_i - lambda_i v_i|
  double hermiticity = 0.0;              // max |A - A^dag|
};

template <std::size_t N>
HermitianSpectrum hermitian_spectrum(const SquareMatrix<N>& a);

extern template HermitianSpectrum hermitian_spectrum<2>(const SquareMatrix<2>&);
extern template HermitianSpectrum hermitian_spectrum<4>(const SquareMatrix<4>&);
extern template HermitianSpectrum hermitian_spectrum<8>(const SquareMatrix<8>&);

/// Groups sorted eigenvalues whose neighbours differ by at most tol; returns (mean value, multiplicity).
std::vector<std::pair<double, int>> group_eigenvalues(const std::vector<double>& sorted, double tol);

}  // namespace dirac8
