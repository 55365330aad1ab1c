#include "ppoly/codes.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ppoly {

LinearCode make_linear_code(GF2Matrix generator) {
    LinearCode c;
    c.length = generator.cols;
    c.dim = generator.rows;
    if (c.dim < 1) throw std::invalid_argument("linear code: need at least one generator row");
    if (c.dim > c.length) throw std::invalid_argument("linear code: dim exceeds length");
    if (rank_gf2(generator) != c.dim)
        throw std::invalid_argument("linear code: generator rows are linearly dependent");
    c.generator = std::move(generator);
    return c;
}

LinearCode code_from_hypergraph(const PreHypergraph& a) {
    if (static_cast<int>(a.sets.size()) > 64)
        throw std::invalid_argument("code_from_hypergraph: more than 64 sets");
    GF2Matrix g(a.n, static_cast<int>(a.sets.size()));
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < g.cols; ++j) g.set(i, j, a.sets[static_cast<size_t>(j)].get(i));
    return make_linear_code(std::move(g));
}

std::vector<BitWord> codewords(const LinearCode& c) {
    if (c.dim > 20) throw std::invalid_argument("codewords: dim capped at 20");
    return span_enumerate(c.generator.row_words, c.length);
}

int min_distance(const LinearCode& c) {
    if (c.dim > 20) throw std::invalid_argument("min_distance: dim capped at 20");
    int best = std::numeric_limits<int>::max();
    for (const auto& w : codewords(c))
        if (!w.is_zero()) best = std::min(best, w.popcount());
    return best;
}

std::uint64_t distance_formula(int k, int n) {
    if (n < 1 || n > 64 || k < 1 || k > n) throw std::invalid_argument("distance_formula: need 1 <= k <= n <= 64");
    std::uint64_t sum = 0;
    std::uint64_t binom = 1;  // C(n-1, 0)
    for (int l = 0; l <= k - 1; ++l) {
        sum += binom;
        binom = binom * static_cast<std::uint64_t>(n - 1 - l) / static_cast<std::uint64_t>(l + 1);
    }
    return sum;
}

HypergraphFromGenerator hypergraph_from_generator(const GF2Matrix& g) {
    const int n = g.rows, s = g.cols;
    if (n < 1 || s < n) throw std::invalid_argument("hypergraph_from_generator: need at least N columns");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.at(i, j) != (i == j))
                throw std::invalid_argument(
                    "hypergraph_from_generator: matrix is not in standard form (E_N | H); run standard_form first");

    std::vector<BitWord> sets;
    std::vector<std::pair<int, BitWord>> duplicates;
    for (int i = 0; i < n; ++i) sets.emplace_back(n, std::uint64_t(1) << i);
    for (int j = n; j < s; ++j) {
        BitWord col(n, 0);
        for (int i = 0; i < n; ++i) col.set(i, g.at(i, j));
        if (col.is_zero())
            throw std::invalid_argument("hypergraph_from_generator: zero column in H");
        if (std::find(sets.begin(), sets.end(), col) != sets.end()) {
            duplicates.emplace_back(j + 1, col);
            continue;
        }
        sets.push_back(col);
    }
    HypergraphFromGenerator out;
    out.hypergraph = make_pre_hypergraph(n, std::move(sets));
    out.duplicates = std::move(duplicates);
    return out;
}

bool verify_homomorphism(const PreHypergraph& a) {
    if (a.n > 8) throw std::invalid_argument("verify_homomorphism: ground size capped at 8");
    if (a.sets.size() > 64) throw std::invalid_argument("verify_homomorphism: more than 64 sets");
    const int total = 1 << a.n;
    const int cols = static_cast<int>(a.sets.size());

    std::vector<BitWord> image(static_cast<size_t>(total), BitWord(cols, 0));
    for (int v = 0; v < total; ++v) {
        BitWord x(a.n, static_cast<std::uint64_t>(v));
        for (int c = 0; c < cols; ++c) image[static_cast<size_t>(v)].set(c, (x & a.sets[static_cast<size_t>(c)]).parity());
    }

    for (int x = 0; x < total; ++x)
        for (int y = 0; y < total; ++y)
            if (image[static_cast<size_t>(x ^ y)] != (image[static_cast<size_t>(x)] ^ image[static_cast<size_t>(y)]))
                return false;

    std::vector<BitWord> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace ppoly
