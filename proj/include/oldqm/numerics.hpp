#pragma once

#include <functional>
#include <vector>

namespace oldqm {

// Sum by pairwise halving in index order. The reduction tree is fixed by the
// element count alone, so results are bitwise reproducible however the
// inputs were produced.
double pairwise_sum(const std::vector<double>& v);

// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

struct BisectResult {
    double root;
    int steps;
};

// Plain bisection; requires f(lo) and f(hi) of opposite sign (or zero).
// Stops when the bracket shrinks below rel_tol relative to its midpoint.
BisectResult bisect(const std::function<double(double)>& f, double lo, double hi,
                    double f_lo, double f_hi, double rel_tol, int max_steps = 200);

}  // namespace oldqm
