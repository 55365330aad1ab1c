#include "ppoly/linalg.hpp"

#include <algorithm>

namespace ppoly {

int int_rank(IntMatrix a) {
    const int m = static_cast<int>(a.size());
    if (m == 0) return 0;
    const int n = static_cast<int>(a[0].size());
    Int den = 1;
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (a[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[static_cast<size_t>(r)], a[static_cast<size_t>(piv)]);
        auto& pr = a[static_cast<size_t>(r)];
        for (int i = r + 1; i < m; ++i) {
            auto& ri = a[static_cast<size_t>(i)];
            Int f = ri[static_cast<size_t>(c)];
            for (int j = c + 1; j < n; ++j)
                ri[static_cast<size_t>(j)] =
                    (ri[static_cast<size_t>(j)] * pr[static_cast<size_t>(c)] - f * pr[static_cast<size_t>(j)]) / den;
            ri[static_cast<size_t>(c)] = 0;
        }
        den = pr[static_cast<size_t>(c)];
        ++r;
    }
    return r;
}

std::vector<Int> nullspace_dim1(const IntMatrix& m) {
    if (m.empty()) return {};
    const size_t rows = m.size(), cols = m[0].size();

    QMatrix a(rows, QVector(cols));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) a[i][j] = Rational(m[i][j]);

    // Gauss-Jordan, tracking pivot columns.
    std::vector<int> pivot_of_col(cols, -1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        Rational inv = a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_of_col[c] = static_cast<int>(r);
        ++r;
    }

    std::vector<size_t> free_cols;
    for (size_t c = 0; c < cols; ++c)
        if (pivot_of_col[c] < 0) free_cols.push_back(c);
    if (free_cols.size() != 1) return {};

    // Back-substitute with the free variable set to 1.
    QVector x(cols, Rational(0));
    x[free_cols[0]] = 1;
    for (size_t c = 0; c < cols; ++c)
        if (pivot_of_col[c] >= 0) x[c] = -a[static_cast<size_t>(pivot_of_col[c])][free_cols[0]];

    Int lcm_den = 1;
    for (const auto& q : x) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(q));
    std::vector<Int> v(cols);
    Int g = 0;
    for (size_t c = 0; c < cols; ++c) {
        v[c] = numerator(x[c]) * (lcm_den / denominator(x[c]));
        g = boost::multiprecision::gcd(g, v[c]);
    }
    if (g > 1)
        for (auto& e : v) e /= g;
    return v;
}

}  // namespace ppoly
