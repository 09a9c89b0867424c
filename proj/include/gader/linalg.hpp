#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gader/rational.hpp"

namespace gader {

/// Sparse row: (column index, coefficient) entries.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Exact basis of {x : A x = 0} via fraction-free (Bareiss) elimination on
/// integer-cleared rows. Deterministic: pivots are the first nonzero
/// column in row order; basis vectors come out one per free column, in
/// column order, scaled to integer entries with content 1 and positive
/// leading entry.
std::vector<std::vector<Rational>> kernel_basis(const std::vector<SparseRow>& rows,
                                                std::size_t ncols);

std::size_t matrix_rank(const std::vector<SparseRow>& rows, std::size_t ncols);

/// Rank of a list of dense rational vectors.
std::size_t span_rank(const std::vector<std::vector<Rational>>& vectors);

} // namespace gader
