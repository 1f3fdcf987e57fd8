#ifndef GEGCHAIN_METRICS_HPP
#define GEGCHAIN_METRICS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "gegchain/gegenbauer.hpp"
#include "gegchain/matrix.hpp"

namespace gegchain {

enum class PseudometricLabel { diagonal, tridiagonal, pentadiagonal, long_range, generic };

/// Symmetric banded solution of the intertwining relation H^T P = P H.
/// Band half-width k with the chessboard pattern: entry(i,j) can be nonzero
/// only when |i-j| <= k and |i-j| == k (mod 2).
struct Pseudometric {
    std::size_t n_levels = 0;
    std::size_t band = 0;
    PseudometricLabel label = PseudometricLabel::generic;
    SymmetricMatrix entries;
    /// set by the banded solver when the canonical seed entry was too small to
    /// normalize against and the largest entry was scaled to 1 instead
    bool nonstandard_normalization = false;

    double entry(std::size_t i, std::size_t j) const { return entries.entry(i, j); }
    Matrix dense() const { return entries.dense(); }
    /// true when all entries outside the band/parity pattern are exactly zero
    bool parity_pattern_holds() const;
};

/// Coefficient vector over pseudometric components plus the assembled
/// symmetric matrix Theta = sum_i alpha_i P_i.
struct MetricCombination {
    std::vector<double> alphas;
    std::vector<Pseudometric> components;
    SymmetricMatrix assembled;
};

/// Rising product Gamma_n = (1+2a)(2+2a)...(n+2a), Gamma_0 = 1. Switches to
/// log-space accumulation for large n to dodge overflow.
double rising_product(double a, std::size_t n);

/// Diagonal pseudometric: theta_0 = 2a^2, theta_1 = a+1,
/// theta_j = (a+j)/Gamma_{j-1} for j >= 2.
Pseudometric theta0(std::size_t n_levels, const GegenbauerParam& p);

/// Tridiagonal pseudometric: kappa_1 = 2a, kappa_2 = 1,
/// kappa_j = 1/Gamma_{j-2} for j >= 3, placed on the first off-diagonals.
Pseudometric p1(std::size_t n_levels, const GegenbauerParam& p);

/// Pentadiagonal pseudometric with the truncation-dependent corner:
/// gamma_1 = a, gamma_2 = (1+a)/(4+2a), gamma_j = (1+a)/((2j+2a) Gamma_{j-2}),
/// delta_j = 2[2a^3+3a^2-(4j-5)j a-(2j^2-1)(j-1)]/((2j+2+2a)(2j-2+2a) Gamma_{j-1}),
/// and the last diagonal entry is omega_N = -(u_N + v_N a)/((2N-4+2a) Gamma_{N-2})
/// with u_N = (2N-3)(N-2), v_N = 3N-6 instead of delta_{N-1}.
Pseudometric p2(std::size_t n_levels, const GegenbauerParam& p);

/// The N=4, band-3 pseudometric in closed form: (0,3) = a,
/// (1,2) = (a^2+2a+1)/(a+3), (2,3) = -(3a+5)/((a+3)(2a+1)).
Pseudometric p_longrange_n4(const GegenbauerParam& p);

/// The N=8, band-7 pseudometric, normalized to entry(0,7) = a. Entries with
/// closed forms are evaluated directly; the remaining ones are recovered by
/// the banded nullspace solver.
Pseudometric p_longrange_n8(const GegenbauerParam& p);

/// Theta = sum_i alphas[i] * components[i]; all components must share N.
MetricCombination assemble_metric(const std::vector<Pseudometric>& components,
                                  const std::vector<double>& alphas);

/// Convenience: Theta_1(g, a) = Theta_0 + g P_1 as a dense symmetric matrix.
SymmetricMatrix tridiagonal_metric(std::size_t n_levels, const GegenbauerParam& p, double g);

} // namespace gegchain

#endif
