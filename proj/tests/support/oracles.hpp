#pragma once

// Reference computations used only by the tests. Nothing here calls into the
// library's elimination or enumeration code.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using BoolGrid = std::vector<std::vector<bool>>;

// Literal reading of the rule: a black box needs everything to its left
// black, or everything above it black.
inline bool is_cauchon(const BoolGrid& g) {
    const std::size_t m = g.size();
    const std::size_t n = m ? g[0].size() : 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!g[i][j])
                continue;
            bool left = true, above = true;
            for (std::size_t k = 0; k < j; ++k)
                left = left && g[i][k];
            for (std::size_t k = 0; k < i; ++k)
                above = above && g[k][j];
            if (!left && !above)
                return false;
        }
    return true;
}

inline BoolGrid grid_from_mask(int m, int n, std::uint64_t mask) {
    BoolGrid g(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(n)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (mask >> (i * n + j)) & 1U;
    return g;
}

// Filters all 2^{mn} colourings.
inline std::uint64_t brute_force_count(int m, int n) {
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m * n)); ++mask)
        if (is_cauchon(grid_from_mask(m, n, mask)))
            ++count;
    return count;
}

// Rank over Q by Gauss-Jordan elimination on rationals.
inline std::size_t rational_rank(std::vector<std::vector<mpq_class>> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            const mpq_class f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

// M(C) straight from the box-precedence rule, with white boxes taken in
// row-major order.
inline std::vector<std::vector<mpq_class>> skew_adjacency(const BoolGrid& g) {
    std::vector<std::pair<std::size_t, std::size_t>> whites;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g[i].size(); ++j)
            if (!g[i][j])
                whites.emplace_back(i, j);
    const std::size_t d = whites.size();
    std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            const auto [ia, ja] = whites[a];
            const auto [ib, jb] = whites[b];
            if ((ia == ib && ja < jb) || (ja == jb && ia < ib))
                m[a][b] = 1;
            else if ((ia == ib && ja > jb) || (ja == jb && ia > ib))
                m[a][b] = -1;
        }
    return m;
}

inline std::size_t kernel_dim(const std::vector<std::vector<mpq_class>>& m, std::size_t cols) {
    return cols - rational_rank(m);
}

// Square matrices only; a 0-row matrix carries no column count.
inline std::size_t kernel_dim(const std::vector<std::vector<mpq_class>>& m) {
    return kernel_dim(m, m.size());
}

} // namespace oracle
