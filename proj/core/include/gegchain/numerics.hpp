#ifndef GEGCHAIN_NUMERICS_HPP
#define GEGCHAIN_NUMERICS_HPP

#include <vector>

#include "gegchain/matrix.hpp"

namespace gegchain {

/// Eigenvalue sign counts of a symmetric matrix at an absolute threshold tol:
/// negatives = #{lambda < -tol}, zeros = #{|lambda| <= tol}, positives = #{lambda > tol}.
struct Inertia {
    int negatives = 0;
    int zeros = 0;
    int positives = 0;
    double tol = 0.0;
};

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    Matrix vectors;              // column j pairs with values[j]; orthonormal
};

/// Full eigendecomposition of a dense symmetric matrix by cyclic Jacobi
/// rotations. Throws std::runtime_error (with the sweep count) if the
/// off-diagonal mass has not converged after the sweep cap.
EigenDecomposition eig_symmetric(const SymmetricMatrix& m);

/// Eigenvalues of a symmetric tridiagonal matrix (diag d, off-diagonal e)
/// by Sturm-sequence bisection. Cross-check path for the Jacobi solver.
std::vector<double> eig_tridiagonal_bisection(const std::vector<double>& diag,
                                              const std::vector<double>& offdiag,
                                              double tol = 1e-14);

/// Inertia via symmetrically pivoted LDL^T (Sylvester's law); falls back to
/// the eigendecomposition when the factorization runs into a small pivot.
Inertia inertia_of(const SymmetricMatrix& m, double tol);

/// Factorization-only route; throws std::runtime_error on pivot breakdown.
Inertia inertia_ldlt(const SymmetricMatrix& m, double tol);

/// Sign-counting over eig_symmetric; reference route for inertia_of.
Inertia inertia_eig(const SymmetricMatrix& m, double tol);

/// Orthonormal basis of {x : ||a x|| <= tol * ||a|| * ||x||}, obtained from a
/// row-echelon reduction with partial pivoting; basis vectors are ordered by
/// the free-column structure, so the output is deterministic.
std::vector<std::vector<double>> nullspace(const Matrix& a, double tol);

} // namespace gegchain

#endif
