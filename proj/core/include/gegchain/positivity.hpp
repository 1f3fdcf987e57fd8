#ifndef GEGCHAIN_POSITIVITY_HPP
#define GEGCHAIN_POSITIVITY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "gegchain/metrics.hpp"
#include "gegchain/numerics.hpp"

namespace gegchain {

/// Positivity boundaries of the tridiagonal family Theta_1(g, a) at fixed
/// (N, a): the metric has at most 0 / 1 / 2 negative eigenvalues for
/// |g| < G / G' / G''.
struct PositivityRecord {
    std::size_t n_levels;
    double a;
    std::optional<double> g_boundary;      // G
    std::optional<double> g_prime;         // G'
    std::optional<double> g_double_prime;  // G''
    double precision;
};

/// Sorted eigenvalue tracks of Theta_1(g, a) over a coupling grid.
struct EigenCurve {
    std::vector<double> g_samples;
    std::vector<std::vector<double>> eigenvalue_tracks;  // per sample, ascending
};

EigenCurve eigencurves(std::size_t n_levels, const GegenbauerParam& p, double g_min, double g_max,
                       std::size_t samples);

/// Smallest g >= 0 at which the negative-eigenvalue count of Theta_1(g, a)
/// exceeds max_negatives, located by bisection to absolute tolerance tol.
/// The search window starts at g = 10 and doubles up to 1e4; if the count
/// never exceeds max_negatives there, throws std::runtime_error naming the cap.
double boundary(std::size_t n_levels, const GegenbauerParam& p, int max_negatives,
                double tol = 1e-9);

/// All three boundaries, with the undefined ones left empty.
PositivityRecord positivity_record(std::size_t n_levels, const GegenbauerParam& p,
                                   double tol = 1e-9);

/// Exact 2x2 boundary of Theta_1(b/2, a) in the b-parametrization:
/// sqrt(2a+2). Divide by 2 for the g-parametrization.
double analytic_2x2_boundary(const GegenbauerParam& p);

struct PositivityCheck {
    bool positive_definite;
    Inertia inertia;
};

/// true iff the assembled matrix has no negative and no zero eigenvalue at
/// tolerance tol.
PositivityCheck is_positive_metric(const MetricCombination& m, double tol);
PositivityCheck is_positive_metric(const SymmetricMatrix& m, double tol);

} // namespace gegchain

#endif
