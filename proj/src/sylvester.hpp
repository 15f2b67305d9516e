#pragma once

#include <span>
#include <utility>
#include <vector>

namespace mtlab::detail {

/// Determinant by Bareiss fraction-free elimination; every division is exact.
template <class T>
T bareiss_determinant(std::vector<std::vector<T>> m)
{
    std::size_t const n = m.size();
    if (n == 0)
        return T(1);
    T prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == n)
                return T(0);
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        }
        prev = m[k][k];
    }
    return negate ? T(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

/// Resultant Res(f, g) via the Sylvester matrix; coefficient spans are
/// constant term first and must have nonzero leading entries (or be empty
/// for the zero polynomial).
template <class T>
T sylvester_resultant(std::span<T const> f, std::span<T const> g)
{
    if (f.empty() || g.empty())
        return T(0);
    std::size_t const df = f.size() - 1;
    std::size_t const dg = g.size() - 1;
    std::size_t const n = df + dg;
    if (n == 0)
        return T(1);
    std::vector<std::vector<T>> m(n, std::vector<T>(n, T(0)));
    for (std::size_t row = 0; row < dg; ++row) {
        for (std::size_t i = 0; i <= df; ++i)
            m[row][row + i] = f[df - i];
    }
    for (std::size_t row = 0; row < df; ++row) {
        for (std::size_t i = 0; i <= dg; ++i)
            m[dg + row][row + i] = g[dg - i];
    }
    return bareiss_determinant(std::move(m));
}

}  // namespace mtlab::detail
