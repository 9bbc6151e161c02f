#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "dirac8/errors.hpp"
#include "dirac8/io.hpp"
#include "dirac8/states.hpp"

using namespace dirac8;

namespace {

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "dirac8_io_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("EM field round trip at 17 digits") {
  const auto grid = GridSpec({2, 1, 8}, {1.5, 1.0, 3.0});
  auto f = fields::EMField::zero(grid);
  for (std::size_t p = 0; p < grid.size(); ++p)
    for (int a = 0; a < 3; ++a) {
      f.E[p][a] = std::sin(0.1 + p * 0.37 + a) / 3.0;
      f.B[p][a] = std::exp(-double(p) * 0.11 * (a + 1));
    }
  const auto path = scratch("em.csv");
  io::write_em_csv(path, f);
  const auto back = io::read_em_csv(path);
  CHECK(back.grid == grid);
  for (std::size_t p = 0; p < grid.size(); ++p)
    for (int a = 0; a < 3; ++a) {
      CHECK(back.E[p][a] == f.E[p][a]);
      CHECK(back.B[p][a] == f.B[p][a]);
    }
}

TEST_CASE("spinor round trip keeps kind and mass") {
  const auto grid = GridSpec::line(16, 4.0);
  const auto psi = states::electron_vortex_packet(grid, 1.25, 0.5, {0, 0, 1.0}, 0);
  const auto path = scratch("psi.csv");
  io::write_spinor_csv(path, psi);
  const auto back = io::read_spinor_csv(path);
  CHECK(back.kind == fields::SpinorKind::electron);
  CHECK(back.mass == 1.25);
  for (std::size_t p = 0; p < grid.size(); ++p)
    for (int a = 0; a < 8; ++a) CHECK(back.psi[p][a] == psi.psi[p][a]);
}

TEST_CASE("read errors are IoError") {
  CHECK_THROWS_AS(io::read_em_csv(scratch("missing.csv")), IoError);
  const auto path = scratch("bad.csv");
  io::write_em_csv(path, fields::EMField::zero(GridSpec::line(2, 1.0)));
  {
    std::ofstream out(path, std::ios::app);
    out << "0,0,9,Ex,1,0\n";
  }
  CHECK_THROWS_AS(io::read_em_csv(path), IoError);
}
