#pragma once

#include <vector>

#include <boost/rational.hpp>

#include "oldqm/constants.hpp"

namespace oldqm {

// Small-coupling expansion of an energy ratio E/(m c^2) in even powers of
// mu = alpha Z, against the exact closed form.
struct ExpansionReport {
    double mu;
    double exact;
    std::vector<int> orders;           // included powers: 0, 2, 4, ...
    std::vector<double> partial_sums;  // cumulative sum through each order
    // Fitted log-log slope of |exact - last partial sum| vs mu. The sweep sits
    // where the remainder dominates double rounding (mu ~ 0.1..0.35), well
    // below the subcritical bound; at physical alpha the remainder is under
    // 1e-21 and unmeasurable in doubles.
    double remainder_order_estimate;
};

// Relativistic Schrodinger level n = n_r + l + 1, through mu^4:
//   1 - mu^2/(2 n^2) - (mu^4/(2 n^4)) (n/(l+1/2) - 3/4)
ExpansionReport expand_rel_schrodinger(int n, int l, double mu, int max_order = 4);

// Dirac level n = n_r + j + 1/2, through mu^8 (same mu^4 bracket with
// l -> j, then the mu^6 and mu^8 brackets).
ExpansionReport expand_dirac(int n, double j, double mu, int max_order = 8);

using Fraction = boost::rational<long long>;

// Fine-structure spread of level n (highest minus lowest mu^4 coefficient),
// computed in exact rationals from the expansion brackets.
Fraction mu4_spread_rel_schrodinger(int n);  // l = n-1 vs l = 0
Fraction mu4_spread_dirac(int n);            // j = n-1/2 vs j = 1/2

// Ratio of the two spreads; equals 4n/(2n-1), e.g. 8/3 at n = 2 (the factor
// by which the spin-free wave equation overestimates the splitting).
Fraction splitting_ratio(int n);

struct ComparisonRow {
    int n;
    int l;
    double j;        // l + 1/2: pairs each Schrodinger l with a Dirac level
    int n_r;         // n - l - 1 == n - j - 1/2
    double e_nonrel;     // hartree units
    double e_old;        // E/mc^2, azimuthal number n_theta = j + 1/2
    double e_dirac;      // E/mc^2
    double e_rel_schr;   // E/mc^2
    double mu4_schr;     // mu^4 partial sum, spin-free
    double mu4_dirac;    // mu^4 partial sum, Dirac
};

// One row per (n <= n_max, j = 1/2 .. n-1/2); e_old == e_dirac to rounding
// on every row, while e_rel_schr deviates in the mu^4 digits.
std::vector<ComparisonRow> comparison_table(double z, int n_max, const PhysicalConstants& k);

}  // namespace oldqm
