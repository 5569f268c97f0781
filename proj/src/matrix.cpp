#include "twisted/matrix.hpp"

#include <limits>

namespace twisted {

std::size_t rank(const Matrix<LaurentPoly>& m) {
  std::size_t variables = 0;
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) variables = std::max(variables, m(i, j).rank());
  }
  std::int64_t range = 0;
  for (std::size_t v = 0; v < variables; ++v) {
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
    for (Index j = 0; j < m.cols(); ++j) {
      for (Index i = 0; i < m.rows(); ++i) {
        for (const auto& [exponent, coefficient] : m(i, j).terms()) {
          const std::int64_t e = exponent.empty() ? 0 : exponent[v];
          lo = std::min(lo, e);
          hi = std::max(hi, e);
        }
      }
    }
    if (lo <= hi) range = std::max(range, hi - lo);
  }
  // A k x k minor has exponent differences of at most k * range per variable.
  const std::int64_t size = std::max<std::int64_t>(1, std::min(m.rows(), m.cols()));
  const std::int64_t spread = size * (range + 1) + 1;
  return rank(map_entries<NovikovSeries>(
      m, [spread](const LaurentPoly& x) { return kronecker_image(x, spread); }));
}

}  // namespace twisted
