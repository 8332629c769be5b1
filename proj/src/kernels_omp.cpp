#include <exception>
#include <mutex>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kernels_detail.hpp"

namespace exclt::kernels {

namespace {

int resolve_threads(int threads) {
#ifdef _OPENMP
  return threads > 0 ? threads : omp_get_max_threads();
#else
  (void)threads;
  return 1;
#endif
}

// Collects the first exception raised inside a parallel region.
class ErrorSlot {
 public:
  template <class F>
  void guard(F&& f) noexcept {
    try {
      f();
    } catch (...) {
      std::lock_guard lock(mu_);
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mu_;
  std::exception_ptr error_;
};

}  // namespace

bool openmp_enabled() noexcept {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

namespace omp {

std::vector<double> array_sums(const DirectingLaw& law, const NormingSequence& norming,
                               std::int64_t n, std::size_t rows, std::size_t replicates,
                               std::uint64_t seed, int threads) {
  const auto laws = detail::draw_laws(law, replicates, seed);
  std::vector<double> out(rows * replicates);
  const auto total = static_cast<std::int64_t>(out.size());
  ErrorSlot err;
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_threads(threads))
  for (std::int64_t k = 0; k < total; ++k) {
    err.guard([&] {
      out[static_cast<std::size_t>(k)] =
          detail::array_cell(laws, norming, n, rows, seed, static_cast<std::size_t>(k));
    });
  }
  err.rethrow();
  return out;
}

std::vector<cplx> empirical_cf(std::span<const double> xs, std::span<const double> ts,
                               int threads) {
  if (xs.empty()) throw std::invalid_argument("empirical_cf: empty sample");
  const std::size_t chunks = detail::chunk_count(xs.size());
  std::vector<double> partials(chunks * 2 * ts.size());
  const auto total = static_cast<std::int64_t>(chunks);
#pragma omp parallel for schedule(static) num_threads(resolve_threads(threads))
  for (std::int64_t c = 0; c < total; ++c)
    detail::cf_chunk(xs, ts, static_cast<std::size_t>(c),
                     partials.data() + static_cast<std::size_t>(c) * 2 * ts.size());
  return detail::cf_reduce(partials, chunks, ts, xs.size());
}

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& fn, int threads) {
  ErrorSlot err;
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_threads(threads))
  for (std::int64_t k = 0; k < total; ++k) err.guard([&] { fn(static_cast<std::size_t>(k)); });
  err.rethrow();
}

}  // namespace omp

std::vector<double> array_sums(const DirectingLaw& law, const NormingSequence& norming,
                               std::int64_t n, std::size_t rows, std::size_t replicates,
                               std::uint64_t seed, int threads, Backend backend) {
  if (backend == Backend::serial || threads == 1)
    return serial::array_sums(law, norming, n, rows, replicates, seed);
  return omp::array_sums(law, norming, n, rows, replicates, seed, threads);
}

std::vector<cplx> empirical_cf(std::span<const double> xs, std::span<const double> ts, int threads,
                               Backend backend) {
  if (backend == Backend::serial || threads == 1) return serial::empirical_cf(xs, ts);
  return omp::empirical_cf(xs, ts, threads);
}

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& fn, int threads,
                    Backend backend) {
  if (backend == Backend::serial || threads == 1) return serial::for_each_index(count, fn);
  omp::for_each_index(count, fn, threads);
}

}  // namespace exclt::kernels
