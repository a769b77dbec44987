#include "oldqm/numerics.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace oldqm {

namespace {

double pairwise_range(const double* p, std::size_t n) {
    if (n <= 4) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += p[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_range(p, half) + pairwise_range(p + half, n - half);
}

}  // namespace

double pairwise_sum(const std::vector<double>& v) {
    return pairwise_range(v.data(), v.size());
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_slope: need at least two matching points");
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

BisectResult bisect(const std::function<double(double)>& f, double lo, double hi,
                    double f_lo, double f_hi, double rel_tol, int max_steps) {
    if (f_lo == 0.0) return {lo, 0};
    if (f_hi == 0.0) return {hi, 0};
    if ((f_lo > 0.0) == (f_hi > 0.0))
        throw std::runtime_error("bisect: endpoints do not bracket a root");
    int steps = 0;
    while (steps < max_steps) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;  // bracket at machine resolution
        const double f_mid = f(mid);
        ++steps;
        if (f_mid == 0.0) return {mid, steps};
        if ((f_mid > 0.0) == (f_hi > 0.0)) {
            hi = mid;
        } else {
            lo = mid;
        }
        if (hi - lo <= rel_tol * std::abs(0.5 * (lo + hi))) break;
    }
    return {0.5 * (lo + hi), steps};
}

}  // namespace oldqm
