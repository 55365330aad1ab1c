#include "ppoly/bases.hpp"

#include <stdexcept>

#include "ppoly/linalg.hpp"

namespace ppoly {

BitWord config_of_row(int n, int r) {
    BitWord x(n, 0);
    for (int i = 0; i < n; ++i) x.set(i, (r >> (n - 1 - i)) & 1);
    return x;
}

int row_of_config(const BitWord& x) {
    int r = 0;
    for (int i = 0; i < x.width; ++i)
        if (x.get(i)) r |= 1 << (x.width - 1 - i);
    return r;
}

namespace {

StatisticMatrix evaluate_sets(const PreHypergraph& a, BasisKind kind) {
    if (a.n > 16) throw std::invalid_argument("statistic matrix: ground size capped at 16");
    StatisticMatrix m;
    m.kind = kind;
    m.n = a.n;
    m.rows = 1 << a.n;
    m.cols = static_cast<int>(a.sets.size());
    m.col_sets = a.sets;
    m.data.resize(static_cast<size_t>(m.rows) * m.cols);
    for (int r = 0; r < m.rows; ++r) {
        BitWord x = config_of_row(a.n, r);
        for (int c = 0; c < m.cols; ++c) {
            const BitWord& set = a.sets[static_cast<size_t>(c)];
            int v = 0;
            switch (kind) {
                case BasisKind::parity:
                    v = (x & set).parity() ? 1 : 0;
                    break;
                case BasisKind::character:
                    v = (x & set).parity() ? -1 : 1;
                    break;
                case BasisKind::monomial:
                    v = ((x.bits & set.bits) == set.bits) ? 1 : 0;
                    break;
                case BasisKind::marginal:
                    break;
            }
            m.data[static_cast<size_t>(r) * m.cols + c] = v;
        }
    }
    return m;
}

}  // namespace

StatisticMatrix parity_matrix(const PreHypergraph& a) { return evaluate_sets(a, BasisKind::parity); }

StatisticMatrix character_matrix(const PreHypergraph& a) { return evaluate_sets(a, BasisKind::character); }

StatisticMatrix monomial_matrix(const PreHypergraph& a) { return evaluate_sets(a, BasisKind::monomial); }

namespace {

// y_A packed over the elements of A in ascending order; ordered like the
// configuration rows (first element of A is the most significant position).
BitWord restrict_to(const BitWord& x, const BitWord& set) {
    BitWord y(set.popcount(), 0);
    int t = 0;
    for (int i = 0; i < x.width; ++i)
        if (set.get(i)) {
            y.set(t, x.get(i));
            ++t;
        }
    return y;
}

}  // namespace

StatisticMatrix marginal_matrix(const PreHypergraph& a) {
    if (a.n > 16) throw std::invalid_argument("statistic matrix: ground size capped at 16");
    StatisticMatrix m;
    m.kind = BasisKind::marginal;
    m.n = a.n;
    m.rows = 1 << a.n;
    auto maximal = maximal_elements(a);
    for (const auto& set : maximal) {
        int card = set.popcount();
        for (int r = 0; r < (1 << card); ++r) m.col_margin.emplace_back(set, config_of_row(card, r));
    }
    m.cols = static_cast<int>(m.col_margin.size());
    m.data.resize(static_cast<size_t>(m.rows) * m.cols);
    for (int r = 0; r < m.rows; ++r) {
        BitWord x = config_of_row(a.n, r);
        for (int c = 0; c < m.cols; ++c) {
            const auto& [set, y] = m.col_margin[static_cast<size_t>(c)];
            m.data[static_cast<size_t>(r) * m.cols + c] = (restrict_to(x, set) == y) ? 1 : 0;
        }
    }
    return m;
}

namespace {

// Columns are the cylinder indicators 1{X_A = y_A} for every member A of
// the family (not just the maximal ones).
IntMatrix cylinder_columns(const PreHypergraph& a) {
    const int rows = 1 << a.n;
    std::vector<std::pair<BitWord, BitWord>> cols;
    for (const auto& set : a.sets) {
        int card = set.popcount();
        for (int r = 0; r < (1 << card); ++r) cols.emplace_back(set, config_of_row(card, r));
    }
    IntMatrix m(static_cast<size_t>(rows), std::vector<Int>(cols.size()));
    for (int r = 0; r < rows; ++r) {
        BitWord x = config_of_row(a.n, r);
        for (size_t c = 0; c < cols.size(); ++c) m[static_cast<size_t>(r)][c] = (restrict_to(x, cols[c].first) == cols[c].second) ? 1 : 0;
    }
    return m;
}

}  // namespace

int interaction_space_dim(const PreHypergraph& a) {
    if (!is_hypergraph(a)) throw std::invalid_argument("interaction_space_dim: input is not a hypergraph");
    if (a.n > 16) throw std::invalid_argument("interaction_space_dim: ground size capped at 16");
    return int_rank(cylinder_columns(a));
}

bool verify_parity_basis(const PreHypergraph& a) {
    if (!is_hypergraph(a)) throw std::invalid_argument("verify_parity_basis: input is not a hypergraph");
    if (a.n > 16) throw std::invalid_argument("verify_parity_basis: ground size capped at 16");

    StatisticMatrix p = parity_matrix(a);
    const int rows = p.rows;
    const int pcols = p.cols + 1;  // parity columns plus the all-ones vector

    IntMatrix pm(static_cast<size_t>(rows), std::vector<Int>(static_cast<size_t>(pcols)));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < p.cols; ++c) pm[static_cast<size_t>(r)][static_cast<size_t>(c)] = p.entry(r, c);
        pm[static_cast<size_t>(r)][static_cast<size_t>(p.cols)] = 1;
    }
    IntMatrix cm = cylinder_columns(a);

    IntMatrix stacked(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r) {
        auto& row = stacked[static_cast<size_t>(r)];
        row = pm[static_cast<size_t>(r)];
        row.insert(row.end(), cm[static_cast<size_t>(r)].begin(), cm[static_cast<size_t>(r)].end());
    }

    int rank_p = int_rank(pm);
    if (rank_p != pcols) return false;  // not linearly independent
    int rank_c = int_rank(std::move(cm));
    int rank_both = int_rank(std::move(stacked));
    return rank_p == rank_c && rank_p == rank_both;
}

}  // namespace ppoly
