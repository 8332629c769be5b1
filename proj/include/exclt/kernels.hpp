#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "exclt/stable.hpp"

namespace exclt {

struct DirectingLaw;

namespace kernels {

/// Block size for the empirical characteristic function. Partial sums are
/// formed per block and added in block order, so the result does not depend
/// on how blocks are assigned to threads.
inline constexpr std::size_t kChunk = 4096;

enum class Backend { serial, openmp };

/// True when the library was compiled with OpenMP.
bool openmp_enabled() noexcept;

/// Row-major normed row sums, values[r * rows + i]. Replicate r uses the
/// directing draw from split_seed(seed, r, 0) and row i the stream
/// split_seed(seed, r, i + 1).
std::vector<double> array_sums(const DirectingLaw& law, const NormingSequence& norming,
                               std::int64_t n, std::size_t rows, std::size_t replicates,
                               std::uint64_t seed, int threads, Backend backend = Backend::openmp);

/// (1/N) sum_j exp(i t x_j) for each t.
std::vector<cplx> empirical_cf(std::span<const double> xs, std::span<const double> ts, int threads,
                               Backend backend = Backend::openmp);

/// Calls fn(k) for k in [0, count). fn must write only to slot k of its
/// output. The first exception thrown is rethrown after the loop.
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& fn, int threads,
                    Backend backend = Backend::openmp);

namespace serial {
std::vector<double> array_sums(const DirectingLaw& law, const NormingSequence& norming,
                               std::int64_t n, std::size_t rows, std::size_t replicates,
                               std::uint64_t seed);
std::vector<cplx> empirical_cf(std::span<const double> xs, std::span<const double> ts);
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& fn);
}  // namespace serial

namespace omp {
std::vector<double> array_sums(const DirectingLaw& law, const NormingSequence& norming,
                               std::int64_t n, std::size_t rows, std::size_t replicates,
                               std::uint64_t seed, int threads);
std::vector<cplx> empirical_cf(std::span<const double> xs, std::span<const double> ts,
                               int threads);
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& fn, int threads);
}  // namespace omp

}  // namespace kernels
}  // namespace exclt
