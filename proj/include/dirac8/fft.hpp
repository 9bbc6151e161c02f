#pragma once

#include <cstddef>
#include <span>

#include "dirac8/grid.hpp"
#include "dirac8/matrix.hpp"

namespace dirac8::fft {

/// In-place multi-dimensional DFT of `components` interleaved complex fields laid out
/// point-major (all components of point 0, then point 1, ...). Forward is unnormalised,
/// inverse divides by the number of grid points, so inverse(forward(x)) == x.
void forward(const GridSpec& grid, std::size_t components, std::span<cplx> data);
void inverse(const GridSpec& grid, std::size_t components, std::span<cplx> data);

}  // namespace dirac8::fft
