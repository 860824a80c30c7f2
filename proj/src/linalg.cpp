#include "hecke/linalg.hpp"

#include <utility>

namespace hecke {

int rank(RationalMatrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t below = r + 1; below < rows.size(); ++below) {
      if (rows[below][c] == 0) continue;
      const Rational factor = rows[below][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[below][j] -= factor * rows[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace hecke
