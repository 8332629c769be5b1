#include <stdexcept>

#include "kernels_detail.hpp"

namespace exclt::kernels::serial {

std::vector<double> array_sums(const DirectingLaw& law, const NormingSequence& norming,
                               std::int64_t n, std::size_t rows, std::size_t replicates,
                               std::uint64_t seed) {
  const auto laws = detail::draw_laws(law, replicates, seed);
  std::vector<double> out(rows * replicates);
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = detail::array_cell(laws, norming, n, rows, seed, k);
  return out;
}

std::vector<cplx> empirical_cf(std::span<const double> xs, std::span<const double> ts) {
  if (xs.empty()) throw std::invalid_argument("empirical_cf: empty sample");
  const std::size_t chunks = detail::chunk_count(xs.size());
  std::vector<double> partials(chunks * 2 * ts.size());
  for (std::size_t c = 0; c < chunks; ++c)
    detail::cf_chunk(xs, ts, c, partials.data() + c * 2 * ts.size());
  return detail::cf_reduce(partials, chunks, ts, xs.size());
}

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& fn) {
  for (std::size_t k = 0; k < count; ++k) fn(k);
}

}  // namespace exclt::kernels::serial
