#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

#include "dhl/spectral.hpp"

namespace dhl::detail {

namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

// One plan pair per grid size, planned once with FFTW_ESTIMATE (deterministic)
// and FFTW_UNALIGNED so they execute on arbitrary buffers. Planning is
// serialized; execution via fftw_execute_dft is thread-safe.
PlanPair& plans_for(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, PlanPair> cache;
  std::scoped_lock lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  fftw_complex* scratch = fftw_alloc_complex(n * n);
  if (scratch == nullptr) throw std::bad_alloc();
  PlanPair pair;
  const int ni = static_cast<int>(n);
  pair.forward = fftw_plan_dft_2d(ni, ni, scratch, scratch, FFTW_FORWARD,
                                  FFTW_ESTIMATE | FFTW_UNALIGNED);
  pair.backward = fftw_plan_dft_2d(ni, ni, scratch, scratch, FFTW_BACKWARD,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(scratch);
  if (pair.forward == nullptr || pair.backward == nullptr)
    throw std::runtime_error("fftw planning failed for n=" + std::to_string(n));
  return cache.emplace(n, pair).first->second;
}

}  // namespace

void fft2(std::size_t n, Complex* data, int sign) {
  PlanPair& pair = plans_for(n);
  auto* raw = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(sign < 0 ? pair.forward : pair.backward, raw, raw);
}

}  // namespace dhl::detail
