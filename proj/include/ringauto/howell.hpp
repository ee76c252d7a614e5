#pragma once

// Howell normal form for submodules of Z_n^k. Gaussian elimination is
// unsound over Z_n (pivots need not be invertible); the Howell form is the
// canonical echelon form for this setting: one basis per submodule, with
// membership decidable by greedy reduction. Pivot entries divide n, entries
// above a pivot are reduced modulo it, and rows with leading index >= j span
// exactly the elements supported on coordinates >= j.

#include <cstdint>
#include <vector>

namespace ringauto::howell {

using Row = std::vector<std::uint64_t>;

/// Canonical Howell basis of the row span of `rows` inside Z_n^cols.
/// Rows shorter than `cols` are zero-padded.
std::vector<Row> howell_form(std::vector<Row> rows, std::uint64_t n,
                             std::size_t cols);

/// Membership test against a basis produced by howell_form.
bool member(const std::vector<Row>& basis, Row v, std::uint64_t n);

/// Howell basis of the kernel { v in Z_n^k : sum_i v_i * map_rows[i] = 0 },
/// where map_rows has k rows of width image_cols.
std::vector<Row> kernel(const std::vector<Row>& map_rows,
                        std::size_t image_cols, std::uint64_t n);

} // namespace ringauto::howell
