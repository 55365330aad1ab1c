#ifndef PPOLY_GF2_HPP
#define PPOLY_GF2_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ppoly {

/// A vector over GF(2) with up to 64 coordinates packed into one machine
/// word. Coordinate i (0-based) is bit i. Width 0 is the empty word; it only
/// shows up as a point of a zero-dimensional vertex set.
struct BitWord {
    int width = 0;
    std::uint64_t bits = 0;

    BitWord() = default;
    BitWord(int width, std::uint64_t bits);

    bool get(int i) const { return (bits >> i) & 1u; }
    void set(int i, bool v) {
        if (v)
            bits |= std::uint64_t(1) << i;
        else
            bits &= ~(std::uint64_t(1) << i);
    }
    int popcount() const;
    bool parity() const { return popcount() & 1; }
    bool is_zero() const { return bits == 0; }

    auto operator<=>(const BitWord&) const = default;
};

BitWord operator^(const BitWord& a, const BitWord& b);
BitWord operator&(const BitWord& a, const BitWord& b);

/// Leftmost character is coordinate 1, e.g. (1,1,0) <-> "110".
std::string to_string(const BitWord& w);
BitWord bitword_from_string(const std::string& s);

/// Dense row-major matrix over GF(2); every row has width == cols.
struct GF2Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<BitWord> row_words;

    GF2Matrix() = default;
    GF2Matrix(int rows, int cols);
    explicit GF2Matrix(std::vector<BitWord> rws);

    bool at(int r, int c) const { return row_words[r].get(c); }
    void set(int r, int c, bool v) { row_words[r].set(c, v); }
    BitWord column(int c) const;
};

int rank_gf2(const GF2Matrix& m);

struct Rref {
    GF2Matrix mat;
    std::vector<int> pivot_cols;
};

/// Reduced row echelon form; zero rows are dropped.
Rref rref_gf2(const GF2Matrix& m);

struct StandardForm {
    GF2Matrix mat;          // (E_k | H)
    std::vector<int> perm;  // perm[j] = source column now at position j
};

/// Row-reduce a full-row-rank matrix and move the pivot columns to the
/// front, yielding a standard-form generator matrix of an equivalent code.
/// Throws std::invalid_argument when the input is rank deficient.
StandardForm standard_form(const GF2Matrix& g);

/// All elements of the span of the given words, deduplicated and sorted
/// ascending by packed value. The empty list spans {0} of the given width
/// (width must then be supplied by passing at least one word; an empty
/// input yields the single word of width 0 unless `width` is given).
std::vector<BitWord> span_enumerate(const std::vector<BitWord>& basis);
std::vector<BitWord> span_enumerate(const std::vector<BitWord>& basis, int width);

/// True when `elems` is exactly an XOR-closed subgroup containing zero.
bool is_subgroup(const std::vector<BitWord>& elems);

/// Reduced echelon basis of the subgroup generated by `elems`.
std::vector<BitWord> group_echelon_basis(const std::vector<BitWord>& elems);

struct Index2Subgroup {
    BitWord functional;            // nonzero linear form in the dual echelon basis
    std::vector<BitWord> kernel;   // ascending, half the input group
};

/// The 2^k - 1 index-2 subgroups of a subgroup of size 2^k, one per nonzero
/// functional on the group. Functionals are expressed with respect to the
/// echelon basis of the group and enumerated in ascending packed order.
/// Throws std::invalid_argument when the input is not a subgroup.
std::vector<Index2Subgroup> index2_subgroups(const std::vector<BitWord>& group);

/// Echelon bases of all k-dimensional subspaces of GF(2)^n, enumerated in a
/// fixed deterministic order (pivot sets in lexicographic order, free
/// entries in increasing binary order).
std::vector<std::vector<BitWord>> subspace_bases(int n, int k);

}  // namespace ppoly

#endif
