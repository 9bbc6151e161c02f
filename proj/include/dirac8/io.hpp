#pragma once

#include <filesystem>

#include "dirac8/fields.hpp"

namespace dirac8::io {

/// CSV rows "ix,iy,iz,component,re,im" at 17 significant digits, plus a JSON sidecar
/// (<path>.json) carrying the grid and the field kind. EM components are Ex..Ez, Bx..Bz;
/// spinor components are psi0..psi7.
void write_em_csv(const std::filesystem::path& path, const fields::EMField& f);
fields::EMField read_em_csv(const std::filesystem::path& path);

void write_spinor_csv(const std::filesystem::path& path, const fields::SpinorField8& psi);
fields::SpinorField8 read_spinor_csv(const std::filesystem::path& path);

}  // namespace dirac8::io
