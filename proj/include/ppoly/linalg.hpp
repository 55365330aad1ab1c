#ifndef PPOLY_LINALG_HPP
#define PPOLY_LINALG_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace ppoly {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntMatrix = std::vector<std::vector<Int>>;
using QMatrix = std::vector<std::vector<Rational>>;
using QVector = std::vector<Rational>;

/// Rank over the rationals of an integer matrix (fraction-free Bareiss
/// elimination, exact).
int int_rank(IntMatrix m);

/// One-dimensional rational nullspace of an integer matrix, cleared to a
/// primitive integer vector. Empty when the nullity is not exactly 1.
std::vector<Int> nullspace_dim1(const IntMatrix& m);

}  // namespace ppoly

#endif
