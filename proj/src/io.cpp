#include "dirac8/io.hpp"

#include <array>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "dirac8/errors.hpp"

namespace dirac8::io {

namespace {

constexpr std::array<const char*, 6> kEmNames{"Ex", "Ey", "Ez", "Bx", "By", "Bz"};

std::filesystem::path sidecar(const std::filesystem::path& path) {
  auto s = path;
  s += ".json";
  return s;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << std::setprecision(17);
  return out;
}

nlohmann::json read_sidecar(const std::filesystem::path& path) {
  std::ifstream in(sidecar(path));
  if (!in) throw IoError("cannot open " + sidecar(path).string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed sidecar " + sidecar(path).string() + ": " + e.what());
  }
}

struct Row {
  std::size_t index;
  std::string component;
  cplx value;
};

template <typename Fn>
void read_rows(const std::filesystem::path& path, const GridSpec& grid, Fn&& fn) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  std::getline(in, line);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::array<std::string, 6> cells;
    std::stringstream ss(line);
    for (auto& cell : cells)
      if (!std::getline(ss, cell, ',')) throw IoError(path.string() + ":" + std::to_string(lineno) + ": short row");
    try {
      const auto ix = std::stoul(cells[0]), iy = std::stoul(cells[1]), iz = std::stoul(cells[2]);
      const auto& pts = grid.points();
      if (ix >= pts[0] || iy >= pts[1] || iz >= pts[2]) throw IoError("index outside grid");
      fn(Row{grid.index(ix, iy, iz), cells[3], cplx(std::stod(cells[4]), std::stod(cells[5]))});
    } catch (const std::logic_error& e) {
      throw IoError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    } catch (const IoError& e) {
      throw IoError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

void write_header(std::ofstream& out) { out << "ix,iy,iz,component,re,im\n"; }

void write_row(std::ofstream& out, const GridSpec& g, std::size_t p, const char* name, cplx v) {
  const auto i = g.unflatten(p);
  out << i[0] << ',' << i[1] << ',' << i[2] << ',' << name << ',' << v.real() << ',' << v.imag() << '\n';
}

void write_sidecar(const std::filesystem::path& path, const GridSpec& grid, const nlohmann::json& extra) {
  std::ofstream out(sidecar(path));
  if (!out) throw IoError("cannot open " + sidecar(path).string() + " for writing");
  nlohmann::json j = extra;
  j["grid"] = grid;
  out << j.dump(2) << '\n';
}

}  // namespace

void write_em_csv(const std::filesystem::path& path, const fields::EMField& f) {
  auto out = open_out(path);
  write_header(out);
  for (std::size_t p = 0; p < f.grid.size(); ++p)
    for (int a = 0; a < 6; ++a) write_row(out, f.grid, p, kEmNames[a], a < 3 ? f.E[p][a] : f.B[p][a - 3]);
  if (!out) throw IoError("write failed for " + path.string());
  write_sidecar(path, f.grid, {{"kind", "em"}});
}

fields::EMField read_em_csv(const std::filesystem::path& path) {
  const auto meta = read_sidecar(path);
  auto f = fields::EMField::zero(meta.at("grid").get<GridSpec>());
  read_rows(path, f.grid, [&](const Row& r) {
    for (int a = 0; a < 6; ++a)
      if (r.component == kEmNames[a]) {
        (a < 3 ? f.E[r.index][a] : f.B[r.index][a - 3]) = r.value;
        return;
      }
    throw IoError("unknown component " + r.component);
  });
  return f;
}

void write_spinor_csv(const std::filesystem::path& path, const fields::SpinorField8& psi) {
  auto out = open_out(path);
  write_header(out);
  for (std::size_t p = 0; p < psi.grid.size(); ++p)
    for (int a = 0; a < 8; ++a) {
      const std::string name = "psi" + std::to_string(a);
      write_row(out, psi.grid, p, name.c_str(), psi.psi[p][a]);
    }
  if (!out) throw IoError("write failed for " + path.string());
  write_sidecar(path, psi.grid, {{"kind", fields::to_string(psi.kind)}, {"mass", psi.mass}});
}

fields::SpinorField8 read_spinor_csv(const std::filesystem::path& path) {
  const auto meta = read_sidecar(path);
  const std::string kind = meta.at("kind").get<std::string>();
  fields::SpinorKind k = fields::SpinorKind::generic;
  for (auto cand : {fields::SpinorKind::photon_embedded, fields::SpinorKind::electron, fields::SpinorKind::generic})
    if (kind == fields::to_string(cand)) k = cand;
  auto psi = fields::SpinorField8::zero(meta.at("grid").get<GridSpec>(), k, meta.value("mass", 0.0));
  read_rows(path, psi.grid, [&](const Row& r) {
    if (r.component.size() == 4 && r.component.rfind("psi", 0) == 0 && r.component[3] >= '0' && r.component[3] <= '7') {
      psi.psi[r.index][r.component[3] - '0'] = r.value;
      return;
    }
    throw IoError("unknown component " + r.component);
  });
  return psi;
}

}  // namespace dirac8::io
