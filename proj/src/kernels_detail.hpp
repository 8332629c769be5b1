#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "exclt/directing.hpp"
#include "exclt/kernels.hpp"

namespace exclt::kernels::detail {

inline std::vector<Law> draw_laws(const DirectingLaw& law, std::size_t replicates,
                                  std::uint64_t seed) {
  std::vector<Law> laws;
  laws.reserve(replicates);
  for (std::size_t r = 0; r < replicates; ++r) laws.push_back(draw_directing(law, seed, r));
  return laws;
}

inline double array_cell(const std::vector<Law>& laws, const NormingSequence& norming,
                         std::int64_t n, std::size_t rows, std::uint64_t seed, std::size_t k) {
  const std::size_t r = k / rows, i = k % rows;
  Rng rng(split_seed(seed, r, i + 1));
  return normed_row_sum(laws[r], norming, n, rng);
}

inline std::size_t chunk_count(std::size_t n) { return (n + kChunk - 1) / kChunk; }

// Partial sums of cos and sin over one chunk, laid out [re_0, im_0, re_1, ...].
inline void cf_chunk(std::span<const double> xs, std::span<const double> ts, std::size_t chunk,
                     double* out) {
  const std::size_t lo = chunk * kChunk;
  const std::size_t hi = std::min(xs.size(), lo + kChunk);
  for (std::size_t j = 0; j < ts.size(); ++j) {
    const double t = std::abs(ts[j]);
    double re = 0.0, im = 0.0;
    for (std::size_t q = lo; q < hi; ++q) {
      re += std::cos(t * xs[q]);
      im += std::sin(t * xs[q]);
    }
    out[2 * j] = re;
    out[2 * j + 1] = im;
  }
}

inline std::vector<cplx> cf_reduce(const std::vector<double>& partials, std::size_t chunks,
                                   std::span<const double> ts, std::size_t count) {
  std::vector<cplx> out(ts.size());
  for (std::size_t j = 0; j < ts.size(); ++j) {
    double re = 0.0, im = 0.0;
    for (std::size_t c = 0; c < chunks; ++c) {
      re += partials[c * 2 * ts.size() + 2 * j];
      im += partials[c * 2 * ts.size() + 2 * j + 1];
    }
    re /= static_cast<double>(count);
    im /= static_cast<double>(count);
    out[j] = ts[j] < 0 ? cplx(re, -im) : cplx(re, im);
  }
  return out;
}

}  // namespace exclt::kernels::detail
