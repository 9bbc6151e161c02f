#pragma once

#include <array>
#include <cstddef>

#include <nlohmann/json.hpp>

namespace dirac8 {

/// Periodic box. Axes with a single point are inert (wave number 0, centred coordinate 0);
/// a 1-D grid varies along z only.
class GridSpec {
 public:
  GridSpec() = default;
  GridSpec(std::array<std::size_t, 3> points, std::array<double, 3> lengths);

  /// Fields varying along z; transverse extent is one length unit so integrals are per unit area.
  static GridSpec line(std::size_t n, double length);
  static GridSpec cube(std::size_t n, double length);

  const std::array<std::size_t, 3>& points() const { return points_; }
  const std::array<double, 3>& lengths() const { return lengths_; }
  std::size_t size() const { return points_[0] * points_[1] * points_[2]; }
  int dimensionality() const;

  double spacing(int axis) const { return lengths_[axis] / static_cast<double>(points_[axis]); }
  double cell_volume() const { return spacing(0) * spacing(1) * spacing(2); }
  double volume() const { return lengths_[0] * lengths_[1] * lengths_[2]; }

  std::size_t index(std::size_t ix, std::size_t iy, std::size_t iz) const {
    return (ix * points_[1] + iy) * points_[2] + iz;
  }
  std::array<std::size_t, 3> unflatten(std::size_t flat) const;

  /// Grid coordinate i * spacing along an axis.
  double coordinate(int axis, std::size_t i) const { return static_cast<double>(i) * spacing(axis); }
  std::array<double, 3> position(std::size_t flat) const;
  /// Box-centred coordinate in [-L/2, L/2); 0 on inert axes.
  std::array<double, 3> centred_position(std::size_t flat) const;

  /// Signed integer mode number along an axis for FFT index i (range [-n/2, n/2)).
  long mode_number(int axis, std::size_t i) const;
  /// Wave number used for spectral derivatives: 2 pi m / L, with 0 at the Nyquist index.
  double wave_number(int axis, std::size_t i) const;
  std::array<double, 3> wave_vector(std::size_t flat) const;

  friend bool operator==(const GridSpec& a, const GridSpec& b) {
    return a.points_ == b.points_ && a.lengths_ == b.lengths_;
  }

 private:
  std::array<std::size_t, 3> points_{1, 1, 1};
  std::array<double, 3> lengths_{1.0, 1.0, 1.0};
};

void to_json(nlohmann::json& j, const GridSpec& g);
void from_json(const nlohmann::json& j, GridSpec& g);

}  // namespace dirac8
