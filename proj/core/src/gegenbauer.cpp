#include "gegchain/gegenbauer.hpp"

#include <cmath>
#include <stdexcept>

#include "gegchain/numerics.hpp"

namespace gegchain {

GegenbauerParam::GegenbauerParam(double value) : a(value) {
    if (!(value > 0.0))
        throw std::domain_error(
            "GegenbauerParam: a must be > 0 (a = 0 is the Chebyshev degeneration)");
}

double gegenbauer_eval(int n, const GegenbauerParam& p, double x) {
    if (n < 0) throw std::invalid_argument("gegenbauer_eval: degree must be >= 0");
    const double a = p.a;
    if (n == 0) return 1.0;
    double gm2 = 1.0;
    double gm1 = 2.0 * a * x;
    for (int k = 2; k <= n; ++k) {
        const double g = (2.0 * (k + a - 1.0) * x * gm1 - (k + 2.0 * a - 2.0) * gm2) / k;
        gm2 = gm1;
        gm1 = g;
    }
    return gm1;
}

GegenbauerValue gegenbauer_eval_with_derivative(int n, const GegenbauerParam& p, double x) {
    if (n < 0) throw std::invalid_argument("gegenbauer_eval_with_derivative: degree must be >= 0");
    const double a = p.a;
    if (n == 0) return {1.0, 0.0};
    double gm2 = 1.0, dm2 = 0.0;
    double gm1 = 2.0 * a * x, dm1 = 2.0 * a;
    for (int k = 2; k <= n; ++k) {
        const double g = (2.0 * (k + a - 1.0) * x * gm1 - (k + 2.0 * a - 2.0) * gm2) / k;
        const double d =
            (2.0 * (k + a - 1.0) * (gm1 + x * dm1) - (k + 2.0 * a - 2.0) * dm2) / k;
        gm2 = gm1;
        gm1 = g;
        dm2 = dm1;
        dm1 = d;
    }
    return {gm1, dm1};
}

std::vector<double> SpectralData::normalized_eigenvector(std::size_t n) const {
    std::vector<double> v = eigenvectors.at(n);
    const double nrm = norm2(v);
    for (double& c : v) c /= nrm;
    return v;
}

SpectralData gegenbauer_zeros(std::size_t n_levels, const GegenbauerParam& p) {
    if (n_levels < 1) throw std::invalid_argument("gegenbauer_zeros: N must be >= 1");

    // zeros of G(N,a,.) are the eigenvalues of the classical Jacobi matrix of
    // the orthogonal-polynomial family, with beta_{k+1}^2 from the normalized
    // three-term recurrence
    const double a = p.a;
    SymmetricMatrix jacobi(n_levels);
    for (std::size_t k = 0; k + 1 < n_levels; ++k) {
        const double kk = static_cast<double>(k);
        jacobi.set(k, k + 1,
                   0.5 * std::sqrt((kk + 1.0) * (kk + 2.0 * a) /
                                   ((kk + a) * (kk + a + 1.0))));
    }
    std::vector<double> energies = eig_symmetric(jacobi).values;

    // one Newton polish on the recurrence evaluation
    for (double& e : energies) {
        const auto [g, dg] = gegenbauer_eval_with_derivative(static_cast<int>(n_levels), p, e);
        if (dg != 0.0) e -= g / dg;
    }

    SpectralData out;
    out.n_levels = n_levels;
    out.energies = std::move(energies);
    out.eigenvectors.resize(n_levels);
    for (std::size_t n = 0; n < n_levels; ++n) {
        out.eigenvectors[n].resize(n_levels);
        for (std::size_t k = 0; k < n_levels; ++k)
            out.eigenvectors[n][k] = gegenbauer_eval(static_cast<int>(k), p, out.energies[n]);
    }
    return out;
}

} // namespace gegchain
