#ifndef GEGCHAIN_DIEUDONNE_HPP
#define GEGCHAIN_DIEUDONNE_HPP

#include <cstddef>
#include <vector>

#include "gegchain/chain.hpp"
#include "gegchain/matrix.hpp"
#include "gegchain/metrics.hpp"

namespace gegchain {

struct ResidualReport {
    double value;
    bool degenerate_input;  // true when ||P|| = 0 and the quotient is defined as 0
};

/// Relative intertwining residual ||H^T P - P H||_inf / (||H||_inf ||P||_inf).
ResidualReport residual_report(const ChainHamiltonian& h, const Matrix& p);
double residual(const ChainHamiltonian& h, const Matrix& p);
double residual(const ChainHamiltonian& h, const SymmetricMatrix& p);
double residual(const ChainHamiltonian& h, const Pseudometric& p);

/// The map L(P) = H^T P - P H restricted to symmetric matrices, materialized
/// as an N^2-row constraint matrix over the N(N+1)/2 upper-triangle entries.
/// Unknowns are ordered row-major over (i,j), i <= j.
Matrix constraint_matrix(const ChainHamiltonian& h);

/// dim null(L) over symmetric matrices; equals N for simple real spectra.
std::size_t nullspace_dimension(const ChainHamiltonian& h, double tol = 1e-10);

/// Banded solutions of L(P) = 0 supported on diagonals {d : |d| <= k,
/// d == k (mod 2)}. The component with the smaller-band solutions projected
/// out (first-row entries (0,d) = 0 for d < k) is returned, rescaled to the
/// seed normalization theta_0 = 2a^2 (k=0), kappa_1 = 2a (k=1),
/// gamma_1 = a (k=2), entry(0,N-1) = a (k=N-1) when the seed entry is large
/// enough; otherwise the largest entry is scaled to 1 and the result flagged.
std::vector<Pseudometric> solve_banded(const ChainHamiltonian& h, std::size_t band,
                                       double tol = 1e-10);

/// Same, without the parity restriction (all |d| <= k). Used to check that
/// the chessboard pattern emerges from the equation rather than the ansatz.
std::vector<Pseudometric> solve_banded_full(const ChainHamiltonian& h, std::size_t band,
                                            double tol = 1e-10);

/// Independent spectral route: P = sum_n w_n psi~_n psi~_n^T over the left
/// eigenvectors psi~_n of H, which solves L(P) = 0 for any weights and is
/// positive definite iff all w_n > 0.
SymmetricMatrix spectral_pseudometric(const ChainHamiltonian& h,
                                      const std::vector<double>& weights);

} // namespace gegchain

#endif
