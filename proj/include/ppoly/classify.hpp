#ifndef PPOLY_CLASSIFY_HPP
#define PPOLY_CLASSIFY_HPP

#include <optional>
#include <vector>

#include "ppoly/geometry.hpp"

namespace ppoly {

using BigCount = Int;

/// Full-dimensional 0/1 polytope in R^n whose vertex set is an XOR-subgroup
/// of the cube vertices. Vertices are kept ascending by packed value.
struct GroupPolytope {
    int n = 0;
    std::vector<BitWord> vertices;
};

/// Validates subgroup structure (zero element, XOR closure, power-of-two
/// size) and, unless told otherwise, full dimension.
GroupPolytope make_group_polytope(int n, std::vector<BitWord> vertices, bool check_full_dim = true);

/// P x [0,1]: every vertex duplicated at heights 0 and 1.
GroupPolytope prism(const GroupPolytope& p);

/// Places the index-2 subgroup u at height 0 and its coset at height 1,
/// keeping the vertex count. Requires u distinct from every coordinate
/// kernel V(P) ∩ {x_i = 0}; those lifts stay flat.
GroupPolytope lift(const GroupPolytope& p, const std::vector<BitWord>& u);

/// The coordinate kernels U_i = V(P) ∩ {x_i = 0}, i = 1..n.
std::vector<std::vector<BitWord>> coordinate_kernels(const GroupPolytope& p);

/// Four equivalent statements about lifting P along u, each computed by an
/// independent mechanism: the lift has dimension n+1; u avoids every
/// coordinate hyperplane; the cube center lies in both hulls; the hulls of
/// u and its coset intersect.
struct Prop4Result {
    bool lift_full_dim = false;
    bool no_coordinate_kernel = false;
    bool center_in_both = false;
    bool hulls_intersect = false;

    bool all_equal() const {
        return lift_full_dim == no_coordinate_kernel && lift_full_dim == center_in_both &&
               lift_full_dim == hulls_intersect;
    }
};

Prop4Result lift_equivalence_checks(const GroupPolytope& p, const std::vector<BitWord>& u);

/// The complete family of group polytopes in dimension n, built by the
/// prism/lift recursion from the segment. Canonically sorted and
/// duplicate-checked. Guarded to n <= max_n.
std::vector<GroupPolytope> enumerate_group_polytopes(int n, int max_n = 7);

/// Counting table c[n][k] (1 <= k <= n) for the number of n-dimensional
/// group polytopes with 2^k vertices, plus row sums.
struct CnkTable {
    int n_max = 0;
    std::vector<std::vector<BigCount>> c;  // c[n-1][k-1]
    std::vector<BigCount> row_sums;        // row_sums[n-1]

    const BigCount& at(int n, int k) const { return c[static_cast<size_t>(n - 1)][static_cast<size_t>(k - 1)]; }
};

CnkTable count_cnk(int n_max);

/// Independent count of the same quantity: spanning n-subsets of the
/// nonzero vectors of GF(2)^k, times n!, divided by |GL(k,2)|.
/// Guarded to k <= 4, n <= 10.
BigCount count_cnk_oracle(int n, int k);

/// Number of 2^k-subsets of the n-cube vertices with full-dimensional
/// hull, by exhaustive rank checks. Guarded to n <= 4.
BigCount dnk_bruteforce(int n, int k);

/// A subgroup of size n+1 whose hull is a regular n-simplex, when one
/// exists (only possible when n+1 is a power of two). n <= 7.
std::optional<std::vector<BitWord>> regular_simplex_subgroup(int n);

/// Rank-free full-dimension test for subgroup hulls: the n coordinate
/// functionals on the group must be pairwise distinct and nonzero.
bool subgroup_hull_fulldim_fast(const std::vector<BitWord>& subgroup, int n);

/// Every subgroup of the cube vertex group, as sorted element lists.
std::vector<std::vector<BitWord>> all_subgroups(int n);

}  // namespace ppoly

#endif
