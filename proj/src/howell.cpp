#include "ringauto/howell.hpp"

#include <optional>

#include "ringauto/residues.hpp"

namespace ringauto::howell {

namespace {

Row combine(const Row& r1, std::uint64_t c1, const Row& r2, std::uint64_t c2,
            std::uint64_t n) {
    Row out(r1.size());
    for (std::size_t i = 0; i < r1.size(); ++i)
        out[i] = addmod(mulmod(c1, r1[i], n), mulmod(c2, r2[i], n), n);
    return out;
}

Row scaled(const Row& r, std::uint64_t c, std::uint64_t n) {
    Row out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = mulmod(c, r[i], n);
    return out;
}

bool is_zero_row(const Row& r) {
    for (std::uint64_t v : r)
        if (v) return false;
    return true;
}

struct Eliminator {
    std::uint64_t n;
    std::size_t cols;
    std::vector<std::optional<Row>> pivot; // by column

    explicit Eliminator(std::uint64_t n, std::size_t cols)
        : n(n), cols(cols), pivot(cols) {}

    // Inserts a row, maintaining one pivot row per column; displaced content
    // cascades to later columns.
    void insert(Row r) {
        for (auto& v : r) v %= n;
        for (std::size_t j = 0; j < cols; ++j) {
            if (r[j] == 0) continue;
            if (!pivot[j]) {
                pivot[j] = std::move(r);
                return;
            }
            const std::uint64_t a = (*pivot[j])[j];
            const std::uint64_t b = r[j];
            if (b % a == 0) {
                // Plain elimination; the pivot row is untouched, which keeps
                // the annihilator sweeps terminating.
                r = combine(r, 1, *pivot[j], (n - (b / a) % n) % n, n);
                continue;
            }
            const XgcdResult e = xgcd(a, b);
            // [[s, t], [-b/g, a/g]] has determinant 1, so the span is kept.
            const Row newp = combine(*pivot[j], Residue::reduce(e.s, n), r,
                                     Residue::reduce(e.t, n), n);
            const Row newr = combine(r, (a / e.g) % n, *pivot[j],
                                     (n - (b / e.g) % n) % n, n);
            pivot[j] = newp;
            r = newr;
        }
    }

    // One annihilator sweep: for each non-unit pivot d, (n/gcd(d,n)) times
    // the row lands in later columns and must lie in the span too. Returns
    // whether anything changed.
    bool annihilator_sweep() {
        const auto before = pivot;
        for (std::size_t j = 0; j < cols; ++j) {
            if (!pivot[j]) continue;
            const std::uint64_t d = gcd_u64((*pivot[j])[j], n);
            const std::uint64_t mult = (n / d) % n;
            if (mult == 0) continue; // unit pivot: annihilator is zero
            Row ann = scaled(*pivot[j], mult, n);
            if (!is_zero_row(ann)) insert(std::move(ann));
        }
        return pivot != before;
    }

    std::vector<Row> finalize() {
        while (annihilator_sweep()) {}
        // Normalize pivots to divisors of n and reduce entries above them.
        std::vector<Row> rows;
        std::vector<std::size_t> piv_col;
        for (std::size_t j = 0; j < cols; ++j) {
            if (!pivot[j]) continue;
            const std::uint64_t w = unit_scaling_to_gcd((*pivot[j])[j], Modulus(n));
            rows.push_back(scaled(*pivot[j], w, n));
            piv_col.push_back(j);
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const std::size_t j = piv_col[i];
            const std::uint64_t d = rows[i][j];
            for (std::size_t k = 0; k < i; ++k) {
                const std::uint64_t q = rows[k][j] / d;
                if (q)
                    rows[k] = combine(rows[k], 1, rows[i], (n - q % n) % n, n);
            }
        }
        return rows;
    }
};

} // namespace

std::vector<Row> howell_form(std::vector<Row> rows, std::uint64_t n,
                             std::size_t cols) {
    Eliminator elim(n, cols);
    for (Row& r : rows) {
        r.resize(cols, 0);
        elim.insert(std::move(r));
    }
    return elim.finalize();
}

bool member(const std::vector<Row>& basis, Row v, std::uint64_t n) {
    if (basis.empty()) return is_zero_row(v);
    const std::size_t cols = basis.front().size();
    v.resize(cols, 0);
    for (auto& x : v) x %= n;
    std::size_t next = 0;
    for (std::size_t j = 0; j < cols; ++j) {
        if (v[j] == 0) continue;
        // Find the basis row with pivot at column j, if any.
        while (next < basis.size()) {
            std::size_t pj = 0;
            while (pj < cols && basis[next][pj] == 0) ++pj;
            if (pj >= j) break;
            ++next;
        }
        if (next >= basis.size()) return false;
        std::size_t pj = 0;
        while (pj < cols && basis[next][pj] == 0) ++pj;
        if (pj != j) return false;
        const std::uint64_t d = basis[next][j];
        if (v[j] % d != 0) return false;
        const std::uint64_t q = v[j] / d;
        for (std::size_t i = j; i < cols; ++i)
            v[i] = submod(v[i], mulmod(q, basis[next][i], n), n);
    }
    return true;
}

std::vector<Row> kernel(const std::vector<Row>& map_rows,
                        std::size_t image_cols, std::uint64_t n) {
    const std::size_t k = map_rows.size();
    std::vector<Row> aug;
    aug.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        Row r = map_rows[i];
        r.resize(image_cols, 0);
        r.resize(image_cols + k, 0);
        r[image_cols + i] = 1;
        aug.push_back(std::move(r));
    }
    const auto hf = howell_form(std::move(aug), n, image_cols + k);
    // Rows supported on the trailing identity block are exactly the kernel
    // (the Howell property makes this slice complete).
    std::vector<Row> ker;
    for (const Row& r : hf) {
        bool in_slice = true;
        for (std::size_t j = 0; j < image_cols && in_slice; ++j)
            if (r[j]) in_slice = false;
        if (!in_slice) continue;
        ker.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(image_cols),
                         r.end());
    }
    return howell_form(std::move(ker), n, k);
}

} // namespace ringauto::howell
