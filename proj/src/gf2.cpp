#include "ppoly/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ppoly {

namespace {

std::uint64_t width_mask(int w) {
    return w == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << w) - 1;
}

}  // namespace

BitWord::BitWord(int w, std::uint64_t b) : width(w), bits(b) {
    if (w < 0 || w > 64) throw std::invalid_argument("BitWord width out of range (0..64)");
    bits &= width_mask(w);
}

int BitWord::popcount() const { return std::popcount(bits); }

BitWord operator^(const BitWord& a, const BitWord& b) {
    if (a.width != b.width) throw std::invalid_argument("BitWord width mismatch in xor");
    return BitWord(a.width, a.bits ^ b.bits);
}

BitWord operator&(const BitWord& a, const BitWord& b) {
    if (a.width != b.width) throw std::invalid_argument("BitWord width mismatch in and");
    return BitWord(a.width, a.bits & b.bits);
}

std::string to_string(const BitWord& w) {
    std::string s(static_cast<size_t>(w.width), '0');
    for (int i = 0; i < w.width; ++i)
        if (w.get(i)) s[static_cast<size_t>(i)] = '1';
    return s;
}

BitWord bitword_from_string(const std::string& s) {
    if (s.size() > 64) throw std::invalid_argument("bit string longer than 64");
    BitWord w(static_cast<int>(s.size()), 0);
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            w.set(static_cast<int>(i), true);
        else if (s[i] != '0')
            throw std::invalid_argument("bit string must consist of '0'/'1'");
    }
    return w;
}

GF2Matrix::GF2Matrix(int r, int c) : rows(r), cols(c), row_words(static_cast<size_t>(r), BitWord(c, 0)) {
    if (r < 0 || c < 0 || c > 64) throw std::invalid_argument("GF2Matrix dimensions out of range");
}

GF2Matrix::GF2Matrix(std::vector<BitWord> rws) : row_words(std::move(rws)) {
    rows = static_cast<int>(row_words.size());
    cols = rows ? row_words[0].width : 0;
    for (const auto& w : row_words)
        if (w.width != cols) throw std::invalid_argument("GF2Matrix rows must share one width");
}

BitWord GF2Matrix::column(int c) const {
    BitWord col(rows, 0);
    for (int r = 0; r < rows; ++r) col.set(r, at(r, c));
    return col;
}

Rref rref_gf2(const GF2Matrix& m) {
    std::vector<BitWord> work = m.row_words;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (work[static_cast<size_t>(i)].get(c)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(work[static_cast<size_t>(r)], work[static_cast<size_t>(piv)]);
        for (int i = 0; i < m.rows; ++i)
            if (i != r && work[static_cast<size_t>(i)].get(c))
                work[static_cast<size_t>(i)] = work[static_cast<size_t>(i)] ^ work[static_cast<size_t>(r)];
        pivots.push_back(c);
        ++r;
    }
    work.resize(static_cast<size_t>(r), BitWord(m.cols, 0));
    Rref out;
    out.mat = GF2Matrix(std::move(work));
    if (r == 0) out.mat = GF2Matrix(0, m.cols);
    out.pivot_cols = std::move(pivots);
    return out;
}

int rank_gf2(const GF2Matrix& m) { return static_cast<int>(rref_gf2(m).pivot_cols.size()); }

StandardForm standard_form(const GF2Matrix& g) {
    Rref rr = rref_gf2(g);
    if (static_cast<int>(rr.pivot_cols.size()) != g.rows)
        throw std::invalid_argument("not a generator matrix: rows are linearly dependent");

    std::vector<int> perm = rr.pivot_cols;
    std::vector<bool> is_pivot(static_cast<size_t>(g.cols), false);
    for (int c : rr.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    for (int c = 0; c < g.cols; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) perm.push_back(c);

    GF2Matrix out(g.rows, g.cols);
    for (int j = 0; j < g.cols; ++j) {
        int src = perm[static_cast<size_t>(j)];
        for (int r = 0; r < g.rows; ++r) out.set(r, j, rr.mat.at(r, src));
    }
    return StandardForm{std::move(out), std::move(perm)};
}

std::vector<BitWord> span_enumerate(const std::vector<BitWord>& basis) {
    if (basis.empty()) return {BitWord(0, 0)};
    return span_enumerate(basis, basis[0].width);
}

std::vector<BitWord> span_enumerate(const std::vector<BitWord>& basis, int width) {
    if (basis.size() > 30) throw std::invalid_argument("span_enumerate: more than 30 generators");
    std::vector<BitWord> span = {BitWord(width, 0)};
    for (const auto& b : basis) {
        if (b.width != width) throw std::invalid_argument("span_enumerate: width mismatch");
        std::vector<BitWord> next = span;
        next.reserve(span.size() * 2);
        for (const auto& w : span) next.push_back(w ^ b);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        span = std::move(next);
    }
    return span;
}

std::vector<BitWord> group_echelon_basis(const std::vector<BitWord>& elems) {
    if (elems.empty()) return {};
    return rref_gf2(GF2Matrix(elems)).mat.row_words;
}

bool is_subgroup(const std::vector<BitWord>& elems) {
    if (elems.empty()) return false;
    std::vector<BitWord> sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    auto basis = group_echelon_basis(sorted);
    if (basis.size() > 30) return false;
    return span_enumerate(basis, sorted[0].width) == sorted;
}

std::vector<Index2Subgroup> index2_subgroups(const std::vector<BitWord>& group) {
    if (!is_subgroup(group)) throw std::invalid_argument("index2_subgroups: input is not a subgroup");
    std::vector<BitWord> elems = group;
    std::sort(elems.begin(), elems.end());

    auto basis = group_echelon_basis(elems);
    const int k = static_cast<int>(basis.size());
    if (k < 1) throw std::invalid_argument("index2_subgroups: trivial group has no index-2 subgroups");

    Rref rr = rref_gf2(GF2Matrix(elems));
    const std::vector<int>& pivots = rr.pivot_cols;

    // With a reduced echelon basis the coordinate of an element along basis
    // vector i is just its bit at the i-th pivot column.
    auto coords = [&](const BitWord& g) {
        BitWord c(k, 0);
        for (int i = 0; i < k; ++i) c.set(i, g.get(pivots[static_cast<size_t>(i)]));
        return c;
    };

    std::vector<Index2Subgroup> out;
    out.reserve((size_t(1) << k) - 1);
    for (std::uint64_t f = 1; f < (std::uint64_t(1) << k); ++f) {
        Index2Subgroup sub;
        sub.functional = BitWord(k, f);
        for (const auto& g : elems)
            if (!(coords(g) & sub.functional).parity()) sub.kernel.push_back(g);
        out.push_back(std::move(sub));
    }
    return out;
}

std::vector<std::vector<BitWord>> subspace_bases(int n, int k) {
    if (n < 0 || n > 30 || k < 0 || k > n) throw std::invalid_argument("subspace_bases: bad dimensions");
    std::vector<std::vector<BitWord>> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }

    // Enumerate pivot column sets in lexicographic order, then all
    // assignments of the free entries (non-pivot columns to the right of a
    // row's pivot) in increasing binary order.
    std::vector<int> pivots(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) pivots[static_cast<size_t>(i)] = i;
    while (true) {
        std::vector<std::pair<int, int>> free_slots;  // (row, col)
        for (int i = 0; i < k; ++i) {
            for (int c = pivots[static_cast<size_t>(i)] + 1; c < n; ++c) {
                bool is_piv = std::find(pivots.begin(), pivots.end(), c) != pivots.end();
                if (!is_piv) free_slots.emplace_back(i, c);
            }
        }
        const size_t nfree = free_slots.size();
        for (std::uint64_t assign = 0; assign < (std::uint64_t(1) << nfree); ++assign) {
            std::vector<BitWord> basis(static_cast<size_t>(k), BitWord(n, 0));
            for (int i = 0; i < k; ++i) basis[static_cast<size_t>(i)].set(pivots[static_cast<size_t>(i)], true);
            for (size_t s = 0; s < nfree; ++s)
                if ((assign >> s) & 1)
                    basis[static_cast<size_t>(free_slots[s].first)].set(free_slots[s].second, true);
            out.push_back(std::move(basis));
        }

        // next k-combination of [0, n)
        int i = k - 1;
        while (i >= 0 && pivots[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pivots[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) pivots[static_cast<size_t>(j)] = pivots[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace ppoly
