#ifndef GEGCHAIN_CHAIN_HPP
#define GEGCHAIN_CHAIN_HPP

#include <cstddef>
#include <vector>

#include "gegchain/gegenbauer.hpp"
#include "gegchain/matrix.hpp"

namespace gegchain {

/// The non-Hermitian tridiagonal chain Hamiltonian: zero diagonal,
/// superdiagonal c_j = 1/(2a+2j) and subdiagonal b_{j+1} = (2a+j)/(2a+2j+2),
/// j = 0..N-2. Stored in banded form; dense() renders for residual checks.
struct ChainHamiltonian {
    std::size_t n_levels;
    double a;
    std::vector<double> superdiag;  // c_0..c_{N-2}
    std::vector<double> subdiag;    // b_1..b_{N-1}

    Matrix dense() const;
    double norm_inf() const;
};

/// Symmetric tridiagonal partner with zero diagonal and off-diagonal
/// mu_k = (1/2) sqrt((2a+k)/((a+k)(a+k+1))), isospectral with the chain.
struct HermitianPartner {
    std::size_t n_levels;
    double a;
    std::vector<double> offdiag;  // mu_0..mu_{N-2}

    SymmetricMatrix symmetric() const;
};

ChainHamiltonian build_hamiltonian(std::size_t n_levels, const GegenbauerParam& p);

/// Diagonal entries of Omega_0 = diag(sqrt(theta_n)); Omega_0^T Omega_0
/// equals the diagonal pseudometric Theta_0.
std::vector<double> build_omega0(std::size_t n_levels, const GegenbauerParam& p);

HermitianPartner build_hermitian_partner(std::size_t n_levels, const GegenbauerParam& p);

} // namespace gegchain

#endif
