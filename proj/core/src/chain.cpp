#include "gegchain/chain.hpp"

#include <cmath>
#include <stdexcept>

#include "gegchain/metrics.hpp"

namespace gegchain {

Matrix ChainHamiltonian::dense() const {
    Matrix h(n_levels, n_levels);
    for (std::size_t j = 0; j + 1 < n_levels; ++j) {
        h(j, j + 1) = superdiag[j];
        h(j + 1, j) = subdiag[j];
    }
    return h;
}

double ChainHamiltonian::norm_inf() const { return dense().norm_inf(); }

SymmetricMatrix HermitianPartner::symmetric() const {
    SymmetricMatrix m(n_levels);
    for (std::size_t k = 0; k + 1 < n_levels; ++k) m.set(k, k + 1, offdiag[k]);
    return m;
}

ChainHamiltonian build_hamiltonian(std::size_t n_levels, const GegenbauerParam& p) {
    if (n_levels < 1) throw std::invalid_argument("build_hamiltonian: N must be >= 1");
    const double a = p.a;
    ChainHamiltonian h;
    h.n_levels = n_levels;
    h.a = a;
    for (std::size_t j = 0; j + 1 < n_levels; ++j) {
        const double dj = static_cast<double>(j);
        h.superdiag.push_back(1.0 / (2.0 * a + 2.0 * dj));
        h.subdiag.push_back((2.0 * a + dj) / (2.0 * a + 2.0 * dj + 2.0));
    }
    return h;
}

std::vector<double> build_omega0(std::size_t n_levels, const GegenbauerParam& p) {
    const Pseudometric t0 = theta0(n_levels, p);
    std::vector<double> omega(n_levels);
    for (std::size_t n = 0; n < n_levels; ++n) omega[n] = std::sqrt(t0.entry(n, n));
    return omega;
}

HermitianPartner build_hermitian_partner(std::size_t n_levels, const GegenbauerParam& p) {
    if (n_levels < 1) throw std::invalid_argument("build_hermitian_partner: N must be >= 1");
    const double a = p.a;
    HermitianPartner h;
    h.n_levels = n_levels;
    h.a = a;
    for (std::size_t k = 0; k + 1 < n_levels; ++k) {
        const double dk = static_cast<double>(k);
        h.offdiag.push_back(0.5 * std::sqrt((2.0 * a + dk) / ((a + dk) * (a + dk + 1.0))));
    }
    return h;
}

} // namespace gegchain
