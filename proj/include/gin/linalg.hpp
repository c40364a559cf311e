// Exact rank of coefficient matrices by row reduction.
#pragma once

#include <cstddef>
#include <vector>

namespace gin {

/// Row rank of a dense matrix over an exact field. Rows may be ragged;
/// missing entries count as zero. The argument is consumed.
template <class F>
std::size_t row_rank(std::vector<std::vector<F>> rows, std::size_t ncols) {
  for (auto& r : rows) r.resize(ncols, F(0));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    F inv = rows[rank][col].inverse();
    for (std::size_t c = col; c < ncols; ++c) rows[rank][c] *= inv;
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      F factor = rows[r][col];
      for (std::size_t c = col; c < ncols; ++c)
        if (!rows[rank][c].is_zero()) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace gin
