#include "ppoly/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace ppoly {

bool lp_feasible_eq(QMatrix a, QVector b) {
    const int m = static_cast<int>(a.size());
    if (m == 0) return true;
    const int n = static_cast<int>(a[0].size());
    if (static_cast<int>(b.size()) != m) throw std::invalid_argument("lp_feasible_eq: shape mismatch");

    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(a[static_cast<size_t>(i)].size()) != n)
            throw std::invalid_argument("lp_feasible_eq: ragged matrix");
        if (b[static_cast<size_t>(i)] < 0) {
            for (auto& e : a[static_cast<size_t>(i)]) e = -e;
            b[static_cast<size_t>(i)] = -b[static_cast<size_t>(i)];
        }
    }

    // Tableau [A | I | b]; basis starts on the artificial identity block.
    // Minimizing the artificial sum decides feasibility; artificials never
    // re-enter once they leave the basis.
    const int total = n + m;
    QMatrix t(static_cast<size_t>(m), QVector(static_cast<size_t>(total + 1), Rational(0)));
    std::vector<int> basis(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) t[static_cast<size_t>(i)][static_cast<size_t>(j)] = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
        t[static_cast<size_t>(i)][static_cast<size_t>(n + i)] = 1;
        t[static_cast<size_t>(i)][static_cast<size_t>(total)] = b[static_cast<size_t>(i)];
        basis[static_cast<size_t>(i)] = n + i;
    }

    while (true) {
        // Bland: entering column = smallest index with negative reduced
        // cost, restricted to the original variables.
        int enter = -1;
        for (int j = 0; j < n && enter < 0; ++j) {
            Rational red(0);
            for (int i = 0; i < m; ++i)
                if (basis[static_cast<size_t>(i)] >= n) red -= t[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (red < 0) enter = j;
        }
        if (enter < 0) break;

        int leave = -1;
        Rational best_ratio(0);
        for (int i = 0; i < m; ++i) {
            const Rational& aij = t[static_cast<size_t>(i)][static_cast<size_t>(enter)];
            if (aij <= 0) continue;
            Rational ratio = t[static_cast<size_t>(i)][static_cast<size_t>(total)] / aij;
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leave)])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        // The phase-I objective is bounded below by zero, so a column with
        // negative reduced cost always admits a pivot.
        assert(leave >= 0);
        if (leave < 0) throw std::logic_error("lp_feasible_eq: unbounded phase-I");

        auto& pr = t[static_cast<size_t>(leave)];
        Rational piv = pr[static_cast<size_t>(enter)];
        for (auto& e : pr) e /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave) continue;
            Rational f = t[static_cast<size_t>(i)][static_cast<size_t>(enter)];
            if (f == 0) continue;
            auto& ri = t[static_cast<size_t>(i)];
            for (int j = 0; j <= total; ++j) ri[static_cast<size_t>(j)] -= f * pr[static_cast<size_t>(j)];
        }
        basis[static_cast<size_t>(leave)] = enter;
    }

    Rational objective(0);
    for (int i = 0; i < m; ++i)
        if (basis[static_cast<size_t>(i)] >= n) objective += t[static_cast<size_t>(i)][static_cast<size_t>(total)];
    return objective == 0;
}

void LinearSystem::add_eq(QVector coeffs, Rational rhs) {
    if (static_cast<int>(coeffs.size()) != num_free_) throw std::invalid_argument("LinearSystem: coeff size");
    rows_.push_back(Row{std::move(coeffs), true, std::move(rhs)});
}

void LinearSystem::add_le(QVector coeffs, Rational rhs) {
    if (static_cast<int>(coeffs.size()) != num_free_) throw std::invalid_argument("LinearSystem: coeff size");
    rows_.push_back(Row{std::move(coeffs), false, std::move(rhs)});
}

bool LinearSystem::feasible() const {
    // Free variables split as x = u - w with u, w >= 0; one slack per
    // inequality row.
    int num_le = 0;
    for (const auto& r : rows_)
        if (!r.is_eq) ++num_le;
    const int cols = 2 * num_free_ + num_le;
    QMatrix a;
    QVector b;
    a.reserve(rows_.size());
    int slack = 0;
    for (const auto& r : rows_) {
        QVector row(static_cast<size_t>(cols), Rational(0));
        for (int v = 0; v < num_free_; ++v) {
            row[static_cast<size_t>(2 * v)] = r.coeffs[static_cast<size_t>(v)];
            row[static_cast<size_t>(2 * v + 1)] = -r.coeffs[static_cast<size_t>(v)];
        }
        if (!r.is_eq) {
            row[static_cast<size_t>(2 * num_free_ + slack)] = 1;
            ++slack;
        }
        a.push_back(std::move(row));
        b.push_back(r.rhs);
    }
    return lp_feasible_eq(std::move(a), std::move(b));
}

}  // namespace ppoly
