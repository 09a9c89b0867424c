#include "gader/linalg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace gader {

namespace {

using Int = std::int64_t;

Int checked(__int128 v) {
    if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
        throw OverflowError("fraction-free elimination overflow");
    return static_cast<Int>(v);
}

Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Clears denominators and divides out the content; an all-zero row stays
/// all-zero.
std::vector<Int> integerize(const SparseRow& row, std::size_t ncols) {
    std::vector<Int> out(ncols, 0);
    Int lcm = 1;
    for (const auto& [j, q] : row) {
        (void)j;
        Int d = q.den();
        Int g = gcd_int(lcm, d);
        lcm = checked(static_cast<__int128>(lcm) / g * d);
    }
    for (const auto& [j, q] : row) {
        if (j >= ncols) throw Error("row entry outside the unknown range");
        out[j] = checked(out[j] + static_cast<__int128>(q.num()) * (lcm / q.den()));
    }
    Int content = 0;
    for (Int v : out) content = gcd_int(content, v);
    if (content > 1)
        for (Int& v : out) v /= content;
    return out;
}

struct Echelon {
    std::vector<std::vector<Int>> m;
    std::vector<std::pair<std::size_t, std::size_t>> pivots; ///< (row, col)
};

/// Bareiss one-step fraction-free elimination; every division is exact.
Echelon bareiss(std::vector<std::vector<Int>> m, std::size_t ncols) {
    Echelon e;
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            // Every row below the pivot gets the one-step update, zero
            // pivot-column entries included: skipping the scale-by-pivot
            // breaks the exactness of later divisions.
            for (std::size_t j = c + 1; j < ncols; ++j) {
                __int128 v = static_cast<__int128>(m[r][c]) * m[i][j] -
                             static_cast<__int128>(m[i][c]) * m[r][j];
                if (v % prev != 0)
                    throw Error("fraction-free elimination: non-exact division");
                m[i][j] = checked(v / prev);
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        e.pivots.emplace_back(r, c);
        ++r;
    }
    e.m = std::move(m);
    return e;
}

std::vector<Rational> back_substitute(const Echelon& e, std::size_t ncols,
                                      std::size_t free_col) {
    std::vector<Rational> x(ncols, Rational(0));
    x[free_col] = 1;
    for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
        auto [r, c] = *it;
        Rational acc = 0;
        for (std::size_t j = c + 1; j < ncols; ++j)
            if (!x[j].is_zero()) acc += Rational(e.m[r][j]) * x[j];
        x[c] = -acc / Rational(e.m[r][c]);
    }
    // Integer entries, content 1, positive leading entry.
    Int lcm = 1;
    for (const Rational& q : x) {
        Int g = gcd_int(lcm, q.den());
        lcm = checked(static_cast<__int128>(lcm) / g * q.den());
    }
    if (lcm != 1)
        for (Rational& q : x) q *= Rational(lcm);
    Int content = 0;
    for (const Rational& q : x) content = gcd_int(content, q.num());
    if (content > 1)
        for (Rational& q : x) q /= Rational(content);
    for (const Rational& q : x) {
        if (q.is_zero()) continue;
        if (q < Rational(0))
            for (Rational& y : x) y = -y;
        break;
    }
    return x;
}

} // namespace

std::vector<std::vector<Rational>> kernel_basis(const std::vector<SparseRow>& rows,
                                                std::size_t ncols) {
    std::vector<std::vector<Int>> m;
    m.reserve(rows.size());
    for (const SparseRow& r : rows) {
        std::vector<Int> row = integerize(r, ncols);
        if (std::any_of(row.begin(), row.end(), [](Int v) { return v != 0; }))
            m.push_back(std::move(row));
    }
    Echelon e = bareiss(std::move(m), ncols);

    std::vector<bool> is_pivot(ncols, false);
    for (auto [r, c] : e.pivots) {
        (void)r;
        is_pivot[c] = true;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t c = 0; c < ncols; ++c)
        if (!is_pivot[c]) basis.push_back(back_substitute(e, ncols, c));
    return basis;
}

std::size_t matrix_rank(const std::vector<SparseRow>& rows, std::size_t ncols) {
    std::vector<std::vector<Int>> m;
    m.reserve(rows.size());
    for (const SparseRow& r : rows) m.push_back(integerize(r, ncols));
    return bareiss(std::move(m), ncols).pivots.size();
}

std::size_t span_rank(const std::vector<std::vector<Rational>>& vectors) {
    if (vectors.empty()) return 0;
    std::size_t ncols = vectors.front().size();
    std::vector<SparseRow> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.size() != ncols) throw Error("span vectors have mixed lengths");
        SparseRow r;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) r.emplace_back(j, v[j]);
        rows.push_back(std::move(r));
    }
    return matrix_rank(rows, ncols);
}

} // namespace gader
