#ifndef PPOLY_CODES_HPP
#define PPOLY_CODES_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ppoly/hypergraph.hpp"

namespace ppoly {

/// Binary [length, dim] linear code given by a full-row-rank generator.
struct LinearCode {
    int length = 0;
    int dim = 0;
    GF2Matrix generator;
};

LinearCode make_linear_code(GF2Matrix generator);

/// The [|A|, N] code whose generator rows are the parity evaluations of the
/// unit configurations. Under the canonical set order the generator comes
/// out in standard form (E_N | H).
LinearCode code_from_hypergraph(const PreHypergraph& a);

/// All 2^dim codewords, ascending by packed value. dim <= 20.
std::vector<BitWord> codewords(const LinearCode& c);

/// Minimum weight of a nonzero codeword (= minimum pairwise Hamming
/// distance, by linearity). dim <= 20.
int min_distance(const LinearCode& c);

/// Closed form sum_{l=0}^{k-1} C(n-1, l) for the code of uniform(k, n).
std::uint64_t distance_formula(int k, int n);

struct HypergraphFromGenerator {
    PreHypergraph hypergraph;
    /// Columns that collapsed into an already-present set: (1-based column
    /// index in the generator, the set it duplicated).
    std::vector<std::pair<int, BitWord>> duplicates;
};

/// Reads the sets off the columns of a standard-form generator (E_N | H).
/// H must have no zero column; duplicate columns are reported, not fatal.
/// Throws std::invalid_argument when the matrix is not in standard form.
HypergraphFromGenerator hypergraph_from_generator(const GF2Matrix& g);

/// Exhaustively checks f(x xor y) = f(x) xor f(y) over all configuration
/// pairs, plus injectivity of f. N <= 8.
bool verify_homomorphism(const PreHypergraph& a);

}  // namespace ppoly

#endif
