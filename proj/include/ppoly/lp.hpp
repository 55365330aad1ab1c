#ifndef PPOLY_LP_HPP
#define PPOLY_LP_HPP

#include "ppoly/linalg.hpp"

namespace ppoly {

/// Decides whether {x >= 0 : A x = b} is nonempty, by a phase-I simplex
/// over exact rationals with Bland's anti-cycling rule.
bool lp_feasible_eq(QMatrix a, QVector b);

/// Feasibility system over free (sign-unrestricted) variables with
/// equality and <= constraints; reduced to standard form internally.
class LinearSystem {
  public:
    explicit LinearSystem(int num_free) : num_free_(num_free) {}

    void add_eq(QVector coeffs, Rational rhs);
    void add_le(QVector coeffs, Rational rhs);
    bool feasible() const;

  private:
    struct Row {
        QVector coeffs;
        bool is_eq;
        Rational rhs;
    };
    int num_free_;
    std::vector<Row> rows_;
};

}  // namespace ppoly

#endif
