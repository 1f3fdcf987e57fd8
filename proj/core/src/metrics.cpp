#include "gegchain/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "gegchain/chain.hpp"
#include "gegchain/dieudonne.hpp"

namespace gegchain {

bool Pseudometric::parity_pattern_holds() const {
    for (std::size_t i = 0; i < n_levels; ++i)
        for (std::size_t j = i; j < n_levels; ++j) {
            const std::size_t d = j - i;
            const bool allowed = d <= band && (d % 2 == band % 2);
            if (!allowed && entries.entry(i, j) != 0.0) return false;
        }
    return true;
}

double rising_product(double a, std::size_t n) {
    if (n <= 60) {
        double prod = 1.0;
        for (std::size_t m = 1; m <= n; ++m) prod *= static_cast<double>(m) + 2.0 * a;
        return prod;
    }
    double log_prod = 0.0;
    for (std::size_t m = 1; m <= n; ++m) log_prod += std::log(static_cast<double>(m) + 2.0 * a);
    return std::exp(log_prod);
}

Pseudometric theta0(std::size_t n_levels, const GegenbauerParam& p) {
    if (n_levels < 1) throw std::invalid_argument("theta0: N must be >= 1");
    const double a = p.a;
    Pseudometric out;
    out.n_levels = n_levels;
    out.band = 0;
    out.label = PseudometricLabel::diagonal;
    out.entries = SymmetricMatrix(n_levels);
    for (std::size_t j = 0; j < n_levels; ++j) {
        double theta;
        if (j == 0)
            theta = 2.0 * a * a;
        else if (j == 1)
            theta = a + 1.0;
        else
            theta = (a + static_cast<double>(j)) / rising_product(a, j - 1);
        out.entries.set(j, j, theta);
    }
    return out;
}

Pseudometric p1(std::size_t n_levels, const GegenbauerParam& p) {
    if (n_levels < 2) throw std::invalid_argument("p1: N must be >= 2");
    const double a = p.a;
    Pseudometric out;
    out.n_levels = n_levels;
    out.band = 1;
    out.label = PseudometricLabel::tridiagonal;
    out.entries = SymmetricMatrix(n_levels);
    for (std::size_t j = 1; j < n_levels; ++j) {
        double kappa;
        if (j == 1)
            kappa = 2.0 * a;
        else if (j == 2)
            kappa = 1.0;
        else
            kappa = 1.0 / rising_product(a, j - 2);
        out.entries.set(j - 1, j, kappa);
    }
    return out;
}

Pseudometric p2(std::size_t n_levels, const GegenbauerParam& p) {
    if (n_levels < 3) throw std::invalid_argument("p2: N must be >= 3");
    const double a = p.a;
    const double n = static_cast<double>(n_levels);
    Pseudometric out;
    out.n_levels = n_levels;
    out.band = 2;
    out.label = PseudometricLabel::pentadiagonal;
    out.entries = SymmetricMatrix(n_levels);

    // second off-diagonal: gamma_j at (j-1, j+1)
    for (std::size_t j = 1; j + 1 < n_levels; ++j) {
        const double dj = static_cast<double>(j);
        double gamma;
        if (j == 1)
            gamma = a;
        else if (j == 2)
            gamma = (1.0 + a) / (4.0 + 2.0 * a);
        else
            gamma = (1.0 + a) / ((2.0 * dj + 2.0 * a) * rising_product(a, j - 2));
        out.entries.set(j - 1, j + 1, gamma);
    }

    // diagonal: delta_j at (j,j) for j = 1..N-2; the (N-1,N-1) corner is the
    // truncation-dependent omega_N, not delta_{N-1}
    for (std::size_t j = 1; j + 1 < n_levels; ++j) {
        const double dj = static_cast<double>(j);
        const double numer = 2.0 * (2.0 * a * a * a + 3.0 * a * a - (4.0 * dj - 5.0) * dj * a -
                                    (2.0 * dj * dj - 1.0) * (dj - 1.0));
        const double denom =
            (2.0 * dj + 2.0 + 2.0 * a) * (2.0 * dj - 2.0 + 2.0 * a) * rising_product(a, j - 1);
        out.entries.set(j, j, numer / denom);
    }
    const double u = (2.0 * n - 3.0) * (n - 2.0);
    const double v = 3.0 * n - 6.0;
    const double omega = -(u + v * a) / ((2.0 * n - 4.0 + 2.0 * a) * rising_product(a, n_levels - 2));
    out.entries.set(n_levels - 1, n_levels - 1, omega);
    return out;
}

Pseudometric p_longrange_n4(const GegenbauerParam& p) {
    const double a = p.a;
    Pseudometric out;
    out.n_levels = 4;
    out.band = 3;
    out.label = PseudometricLabel::long_range;
    out.entries = SymmetricMatrix(4);
    out.entries.set(0, 3, a);
    out.entries.set(1, 2, (a * a + 2.0 * a + 1.0) / (a + 3.0));
    out.entries.set(2, 3, -(3.0 * a + 5.0) / ((a + 3.0) * (2.0 * a + 1.0)));
    return out;
}

Pseudometric p_longrange_n8(const GegenbauerParam& p) {
    const double a = p.a;

    // entries without a fully printed closed form come from the banded solver
    const ChainHamiltonian h = build_hamiltonian(8, p);
    const std::vector<Pseudometric> sols = solve_banded(h, 7, 1e-10);
    if (sols.size() != 1)
        throw std::runtime_error("p_longrange_n8: banded solver did not return a unique solution");
    Pseudometric out = sols.front();
    out.label = PseudometricLabel::long_range;

    out.entries.set(0, 7, a);
    out.entries.set(1, 6, (a + 1.0) * (a + 3.0) / (a + 7.0));
    out.entries.set(2, 5, (a + 1.0) * (a + 3.0) * (2.0 * a + 5.0) * (a + 2.0) /
                              ((2.0 * a + 1.0) * (a + 7.0) * (a + 6.0)));
    out.entries.set(3, 4, (2.0 * a + 5.0) * (a + 3.0) * (a + 3.0) * (a + 2.0) * (a + 2.0) /
                              ((2.0 * a + 1.0) * (a + 7.0) * (a + 6.0) * (a + 5.0)));
    out.entries.set(2, 7, -3.0 * (3.0 * a + 13.0) * (a + 2.0) /
                              ((2.0 * a + 1.0) * (a + 7.0) * (a + 6.0)));
    out.entries.set(3, 6, -5.0 * (a + 4.0) * (3.0 * a * a + 22.0 * a + 23.0) * (a + 3.0) *
                              (a + 3.0) /
                              ((2.0 * a + 1.0) * (a + 6.0) * (a + 5.0) * (a + 1.0) * (a + 7.0) *
                               (a + 7.0)));
    const double q = ((((3.0 * a + 55.0) * a + 380.0) * a + 1223.0) * a + 1811.0) * a + 976.0;
    out.entries.set(4, 5, -6.0 * (2.0 * a + 5.0) * (a + 3.0) * q /
                              ((a + 5.0) * (2.0 * a + 3.0) * (2.0 * a + 1.0) * (a + 1.0) *
                               (a + 7.0) * (a + 7.0) * (a + 6.0) * (a + 6.0)));
    return out;
}

MetricCombination assemble_metric(const std::vector<Pseudometric>& components,
                                  const std::vector<double>& alphas) {
    if (components.empty()) throw std::invalid_argument("assemble_metric: no components");
    if (components.size() != alphas.size())
        throw std::invalid_argument("assemble_metric: coefficient count mismatch");
    const std::size_t n = components.front().n_levels;
    for (const Pseudometric& c : components)
        if (c.n_levels != n) throw std::invalid_argument("assemble_metric: dimension mismatch");

    MetricCombination out;
    out.alphas = alphas;
    out.components = components;
    out.assembled = SymmetricMatrix(n);
    for (std::size_t c = 0; c < components.size(); ++c)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                out.assembled.add(i, j, alphas[c] * components[c].entries.entry(i, j));
    return out;
}

SymmetricMatrix tridiagonal_metric(std::size_t n_levels, const GegenbauerParam& p, double g) {
    if (n_levels == 1) return theta0(1, p).entries;
    return assemble_metric({theta0(n_levels, p), p1(n_levels, p)}, {1.0, g}).assembled;
}

} // namespace gegchain
