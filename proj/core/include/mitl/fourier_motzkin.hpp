#pragma once

#include "mitl/interval.hpp"

#include <vector>

namespace mitl {

/// A conjunction of strict / non-strict linear inequalities over a small
/// fixed set of rational variables, with exact Fourier-Motzkin projection.
/// Rows are of the form sum_i coef[i] * x_i (< | <=) rhs.
class LinearSystem {
public:
    struct Row {
        std::vector<Rational> coef;
        Rational rhs;
        bool strict;
    };

    explicit LinearSystem(int num_vars) : num_vars_(num_vars) {}

    int num_vars() const { return num_vars_; }
    const std::vector<Row>& rows() const { return rows_; }

    void add_le(std::vector<Rational> coef, const Rational& rhs, bool strict);
    /// sum coef * x (< | <=) bound; a +inf bound is vacuous and a -inf bound
    /// makes the system infeasible.
    void add_le(std::vector<Rational> coef, const TimeBound& bound, bool strict);
    /// sum coef * x (> | >=) bound.
    void add_ge(std::vector<Rational> coef, const TimeBound& bound, bool strict);
    void add_eq(const std::vector<Rational>& coef, const Rational& rhs);
    void mark_infeasible() { infeasible_ = true; }

    /// Projects the variable away (exact shadow of the solution set).
    LinearSystem eliminate(int var) const;

    bool feasible() const;

    /// For a system whose rows constrain only `var`: its solution interval.
    Interval solve_single(int var) const;

private:
    int num_vars_;
    bool infeasible_ = false;
    std::vector<Row> rows_;
};

}  // namespace mitl
