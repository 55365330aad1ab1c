#ifndef PPOLY_BASES_HPP
#define PPOLY_BASES_HPP

#include <utility>
#include <vector>

#include "ppoly/hypergraph.hpp"

namespace ppoly {

enum class BasisKind { parity, character, monomial, marginal };

/// Evaluation table of a generating system of the interaction space of a
/// (pre-)hypergraph. Rows are the 2^N configurations in ascending binary
/// order of the tuple (x_1,...,x_N); row r has x_i = bit (N-i) of r.
/// Columns follow the canonical set order; for the marginal kind they are
/// pairs (A, y_A) with A inclusion-maximal and y_A ascending.
struct StatisticMatrix {
    BasisKind kind = BasisKind::parity;
    int n = 0;
    int rows = 0;
    int cols = 0;
    std::vector<int> data;                               // row-major
    std::vector<BitWord> col_sets;                       // parity/character/monomial
    std::vector<std::pair<BitWord, BitWord>> col_margin; // marginal: (A, y packed over A)

    int entry(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
};

/// Configuration shown in row r: coordinate i gets bit (n-1-i) of r.
BitWord config_of_row(int n, int r);
int row_of_config(const BitWord& x);

/// Entry (x, A) = parity of |supp(x) ∩ A|. The rows are 0/1 points; their
/// convex hull is the polytope this library revolves around. N <= 16.
StatisticMatrix parity_matrix(const PreHypergraph& a);

/// Entry (x, A) = (-1)^{|supp(x) ∩ A|}, i.e. 1 - 2*parity.
StatisticMatrix character_matrix(const PreHypergraph& a);

/// Entry (x, A) = prod_{i in A} x_i.
StatisticMatrix monomial_matrix(const PreHypergraph& a);

/// Entry (x, (A, y_A)) = 1 iff x restricted to A equals y_A, over the
/// inclusion-maximal sets A.
StatisticMatrix marginal_matrix(const PreHypergraph& a);

/// Rational rank of the matrix of all cylinder indicators 1{X_A = y_A},
/// A running over the whole family. Requires a hypergraph.
int interaction_space_dim(const PreHypergraph& a);

/// True iff the parity columns plus the all-ones vector are linearly
/// independent and span the same column space as the cylinder indicators.
/// Requires a hypergraph.
bool verify_parity_basis(const PreHypergraph& a);

}  // namespace ppoly

#endif
