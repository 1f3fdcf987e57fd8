#ifndef GEGCHAIN_GEGENBAUER_HPP
#define GEGCHAIN_GEGENBAUER_HPP

#include <cstddef>
#include <vector>

namespace gegchain {

/// Parameter a of the Gegenbauer family G(n, a, x). Strictly positive:
/// a = 0 degenerates to the Chebyshev family and is rejected.
struct GegenbauerParam {
    double a;
    explicit GegenbauerParam(double value);
};

/// G(n, a, x) by the forward three-term recurrence
///   n G(n) = 2 (n + a - 1) x G(n-1) - (n + 2a - 2) G(n-2),
/// seeded with G(0) = 1, G(1) = 2 a x.
double gegenbauer_eval(int n, const GegenbauerParam& p, double x);

/// Value and x-derivative of G(n, a, x) in one recurrence pass.
struct GegenbauerValue {
    double value;
    double derivative;
};
GegenbauerValue gegenbauer_eval_with_derivative(int n, const GegenbauerParam& p, double x);

/// Zeros of G(N, a, .) in ascending order together with the associated
/// polynomial vectors: the n-th vector has components G(k, a, E_n) for
/// k = 0..N-1 (recurrence-seeded convention, not unit norm). At E_n the
/// three-term recurrence terminates, G(N, a, E_n) = 0.
struct SpectralData {
    std::size_t n_levels;
    std::vector<double> energies;
    std::vector<std::vector<double>> eigenvectors;

    /// unit-norm copy of eigenvector n
    std::vector<double> normalized_eigenvector(std::size_t n) const;
};

/// Zeros of G(N, a, .) via the symmetric Jacobi-matrix route, polished by one
/// Newton step on the recurrence evaluation.
SpectralData gegenbauer_zeros(std::size_t n_levels, const GegenbauerParam& p);

} // namespace gegchain

#endif
