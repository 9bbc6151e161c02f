#include "dirac8/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace dirac8::fft {

namespace {

using PlanKey = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, int>;

// The FFTW planner is not thread-safe; execution of an existing plan on new arrays is.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(const GridSpec& grid, std::size_t components, int sign) {
    const auto& n = grid.points();
    const PlanKey key{n[0], n[1], n[2], components, sign};
    std::lock_guard lock(mutex_);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    const int dims[3] = {static_cast<int>(n[0]), static_cast<int>(n[1]), static_cast<int>(n[2])};
    const auto howmany = static_cast<int>(components);
    fftw_complex* scratch = fftw_alloc_complex(grid.size() * components);
    fftw_plan plan = fftw_plan_many_dft(3, dims, howmany, scratch, nullptr, howmany, 1, scratch, nullptr, howmany,
                                        1, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(scratch);
    if (plan == nullptr) throw std::runtime_error("fft: FFTW failed to create a plan");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<PlanKey, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

void execute(const GridSpec& grid, std::size_t components, std::span<cplx> data, int sign) {
  if (data.size() != grid.size() * components) throw std::invalid_argument("fft: data size does not match grid");
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(cache().get(grid, components, sign), ptr, ptr);
}

}  // namespace

void forward(const GridSpec& grid, std::size_t components, std::span<cplx> data) {
  execute(grid, components, data, FFTW_FORWARD);
}

void inverse(const GridSpec& grid, std::size_t components, std::span<cplx> data) {
  execute(grid, components, data, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(grid.size());
  for (auto& v : data) v *= scale;
}

}  // namespace dirac8::fft
