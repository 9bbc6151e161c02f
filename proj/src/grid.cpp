#include "dirac8/grid.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace dirac8 {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

GridSpec::GridSpec(std::array<std::size_t, 3> points, std::array<double, 3> lengths)
    : points_(points), lengths_(lengths) {
  for (int a = 0; a < 3; ++a) {
    if (!is_power_of_two(points_[a]))
      throw std::invalid_argument("GridSpec: points per axis must be a power of two, axis " + std::to_string(a));
    if (!(lengths_[a] > 0.0)) throw std::invalid_argument("GridSpec: box length must be positive");
  }
}

GridSpec GridSpec::line(std::size_t n, double length) { return GridSpec({1, 1, n}, {1.0, 1.0, length}); }

GridSpec GridSpec::cube(std::size_t n, double length) { return GridSpec({n, n, n}, {length, length, length}); }

int GridSpec::dimensionality() const {
  int d = 0;
  for (auto n : points_) d += n > 1 ? 1 : 0;
  return d;
}

std::array<std::size_t, 3> GridSpec::unflatten(std::size_t flat) const {
  const std::size_t iz = flat % points_[2];
  const std::size_t rest = flat / points_[2];
  return {rest / points_[1], rest % points_[1], iz};
}

std::array<double, 3> GridSpec::position(std::size_t flat) const {
  const auto idx = unflatten(flat);
  return {coordinate(0, idx[0]), coordinate(1, idx[1]), coordinate(2, idx[2])};
}

std::array<double, 3> GridSpec::centred_position(std::size_t flat) const {
  const auto idx = unflatten(flat);
  std::array<double, 3> r{};
  for (int a = 0; a < 3; ++a) r[a] = points_[a] == 1 ? 0.0 : coordinate(a, idx[a]) - 0.5 * lengths_[a];
  return r;
}

long GridSpec::mode_number(int axis, std::size_t i) const {
  const auto n = static_cast<long>(points_[axis]);
  const auto m = static_cast<long>(i);
  return m < (n + 1) / 2 ? m : m - n;
}

double GridSpec::wave_number(int axis, std::size_t i) const {
  const std::size_t n = points_[axis];
  if (n > 1 && i == n / 2) return 0.0;
  return 2.0 * std::numbers::pi * static_cast<double>(mode_number(axis, i)) / lengths_[axis];
}

std::array<double, 3> GridSpec::wave_vector(std::size_t flat) const {
  const auto idx = unflatten(flat);
  return {wave_number(0, idx[0]), wave_number(1, idx[1]), wave_number(2, idx[2])};
}

void to_json(nlohmann::json& j, const GridSpec& g) {
  j = nlohmann::json{{"points", g.points()}, {"length", g.lengths()}};
}

void from_json(const nlohmann::json& j, GridSpec& g) {
  g = GridSpec(j.at("points").get<std::array<std::size_t, 3>>(), j.at("length").get<std::array<double, 3>>());
}

}  // namespace dirac8
