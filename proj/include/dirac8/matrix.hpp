#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>

namespace dirac8 {

using cplx = std::complex<double>;

inline constexpr cplx kI{0.0, 1.0};

template <std::size_t N>
using Vector = std::array<cplx, N>;

/// Dense, row-major, fixed-size complex square matrix.
template <std::size_t N>
class SquareMatrix {
 public:
  static constexpr std::size_t dim = N;

  constexpr SquareMatrix() : data_{} {}

  SquareMatrix(std::initializer_list<std::initializer_list<cplx>> rows) : data_{} {
    if (rows.size() != N) throw std::invalid_argument("SquareMatrix: wrong row count");
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != N) throw std::invalid_argument("SquareMatrix: wrong column count");
      std::size_t c = 0;
      for (const auto& v : row) (*this)(r, c++) = v;
      ++r;
    }
  }

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static SquareMatrix diagonal(const Vector<N>& d) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * N + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * N + c]; }

  const std::array<cplx, N * N>& entries() const { return data_; }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data_[i] += o.data_[i];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data_[i] -= o.data_[i];
    return *this;
  }
  SquareMatrix& operator*=(cplx s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator-(SquareMatrix a) { return a *= -1.0; }
  friend SquareMatrix operator*(SquareMatrix a, cplx s) { return a *= s; }
  friend SquareMatrix operator*(cplx s, SquareMatrix a) { return a *= s; }
  friend SquareMatrix operator*(SquareMatrix a, double s) { return a *= cplx(s); }
  friend SquareMatrix operator*(double s, SquareMatrix a) { return a *= cplx(s); }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t k = 0; k < N; ++k) {
        const cplx aik = a(i, k);
        if (aik == cplx{}) continue;
        for (std::size_t j = 0; j < N; ++j) m(i, j) += aik * b(k, j);
      }
    }
    return m;
  }

  friend Vector<N> operator*(const SquareMatrix& a, const Vector<N>& v) {
    Vector<N> out{};
    for (std::size_t i = 0; i < N; ++i) {
      cplx acc{};
      for (std::size_t j = 0; j < N; ++j) acc += a(i, j) * v[j];
      out[i] = acc;
    }
    return out;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) { return a.data_ == b.data_; }

  SquareMatrix dagger() const {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = std::conj((*this)(j, i));
    return m;
  }

  SquareMatrix transpose() const {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = (*this)(j, i);
    return m;
  }

  SquareMatrix conjugate() const {
    SquareMatrix m;
    for (std::size_t i = 0; i < N * N; ++i) m.data_[i] = std::conj(data_[i]);
    return m;
  }

  cplx trace() const {
    cplx t{};
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  /// Largest entry modulus.
  double max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  /// Copies the M×M block whose top-left corner is (r0, c0).
  template <std::size_t M>
  SquareMatrix<M> block(std::size_t r0, std::size_t c0) const {
    static_assert(M <= N);
    SquareMatrix<M> b;
    for (std::size_t i = 0; i < M; ++i)
      for (std::size_t j = 0; j < M; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  template <std::size_t M>
  void set_block(std::size_t r0, std::size_t c0, const SquareMatrix<M>& b) {
    static_assert(M <= N);
    for (std::size_t i = 0; i < M; ++i)
      for (std::size_t j = 0; j < M; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

 private:
  std::array<cplx, N * N> data_;
};

using Matrix2 = SquareMatrix<2>;
using Matrix4 = SquareMatrix<4>;
using Matrix8 = SquareMatrix<8>;

template <std::size_t N>
double max_abs_diff(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  return (a - b).max_abs();
}

template <std::size_t N>
SquareMatrix<N> commutator(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  return a * b - b * a;
}

template <std::size_t N>
SquareMatrix<N> anticommutator(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  return a * b + b * a;
}

template <std::size_t N, std::size_t M>
SquareMatrix<N * M> kron(const SquareMatrix<N>& a, const SquareMatrix<M>& b) {
  SquareMatrix<N * M> k;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      const cplx aij = a(i, j);
      for (std::size_t p = 0; p < M; ++p)
        for (std::size_t q = 0; q < M; ++q) k(i * M + p, j * M + q) = aij * b(p, q);
    }
  return k;
}

/// Assembles [[a, b], [c, d]] from four equal blocks.
template <std::size_t M>
SquareMatrix<2 * M> block2x2(const SquareMatrix<M>& a, const SquareMatrix<M>& b,
                             const SquareMatrix<M>& c, const SquareMatrix<M>& d) {
  SquareMatrix<2 * M> m;
  m.set_block(0, 0, a);
  m.set_block(0, M, b);
  m.set_block(M, 0, c);
  m.set_block(M, M, d);
  return m;
}

template <std::size_t M>
SquareMatrix<2 * M> block_diag(const SquareMatrix<M>& a, const SquareMatrix<M>& d) {
  return block2x2(a, SquareMatrix<M>{}, SquareMatrix<M>{}, d);
}

/// Inverse of a 2×2 matrix; throws on a singular input.
inline Matrix2 inverse(const Matrix2& m) {
  const cplx det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (std::abs(det) == 0.0) throw std::domain_error("inverse: singular 2x2 matrix");
  Matrix2 inv{{m(1, 1), -m(0, 1)}, {-m(1, 0), m(0, 0)}};
  return inv * (1.0 / det);
}

inline cplx determinant(const Matrix2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

template <std::size_t N>
double max_abs_diff(const Vector<N>& a, const Vector<N>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < N; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

template <std::size_t N>
cplx inner(const Vector<N>& a, const Vector<N>& b) {
  cplx acc{};
  for (std::size_t i = 0; i < N; ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

template <std::size_t N>
double norm2(const Vector<N>& a) {
  return inner(a, a).real();
}

}  // namespace dirac8
