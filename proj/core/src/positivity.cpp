#include "gegchain/positivity.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gegchain {

namespace {

int negative_count(std::size_t n_levels, const GegenbauerParam& p, double g) {
    const SymmetricMatrix theta = tridiagonal_metric(n_levels, p, g);
    const double tol = 1e-12 * theta.norm_inf();
    return inertia_of(theta, tol).negatives;
}

} // namespace

EigenCurve eigencurves(std::size_t n_levels, const GegenbauerParam& p, double g_min, double g_max,
                       std::size_t samples) {
    if (samples < 2) throw std::invalid_argument("eigencurves: need at least 2 samples");
    EigenCurve out;
    out.g_samples.reserve(samples);
    out.eigenvalue_tracks.reserve(samples);
    for (std::size_t s = 0; s < samples; ++s) {
        const double g =
            g_min + (g_max - g_min) * static_cast<double>(s) / static_cast<double>(samples - 1);
        out.g_samples.push_back(g);
        out.eigenvalue_tracks.push_back(eig_symmetric(tridiagonal_metric(n_levels, p, g)).values);
    }
    return out;
}

double boundary(std::size_t n_levels, const GegenbauerParam& p, int max_negatives, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("boundary: tol must be > 0");
    if (max_negatives < 0) throw std::invalid_argument("boundary: max_negatives must be >= 0");

    double cap = 10.0;
    const double cap_limit = 1e4;
    while (negative_count(n_levels, p, cap) <= max_negatives) {
        cap *= 2.0;
        if (cap > cap_limit)
            throw std::runtime_error("boundary: negative count never exceeds " +
                                     std::to_string(max_negatives) + " up to g = " +
                                     std::to_string(cap_limit));
    }
    double lo = 0.0, hi = cap;
    if (negative_count(n_levels, p, lo) > max_negatives)
        throw std::runtime_error("boundary: negative count already exceeded at g = 0");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (negative_count(n_levels, p, mid) > max_negatives)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

PositivityRecord positivity_record(std::size_t n_levels, const GegenbauerParam& p, double tol) {
    PositivityRecord rec;
    rec.n_levels = n_levels;
    rec.a = p.a;
    rec.precision = tol;
    for (int k = 0; k <= 2; ++k) {
        std::optional<double>& slot =
            k == 0 ? rec.g_boundary : (k == 1 ? rec.g_prime : rec.g_double_prime);
        try {
            slot = boundary(n_levels, p, k, tol);
        } catch (const std::runtime_error&) {
            slot = std::nullopt;
        }
    }
    return rec;
}

double analytic_2x2_boundary(const GegenbauerParam& p) { return std::sqrt(2.0 * p.a + 2.0); }

PositivityCheck is_positive_metric(const SymmetricMatrix& m, double tol) {
    const Inertia in = inertia_of(m, tol);
    return {in.negatives == 0 && in.zeros == 0, in};
}

PositivityCheck is_positive_metric(const MetricCombination& m, double tol) {
    return is_positive_metric(m.assembled, tol);
}

} // namespace gegchain
