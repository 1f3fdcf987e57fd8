#include "gegchain/dieudonne.hpp"

#include <cmath>
#include <stdexcept>

#include "gegchain/numerics.hpp"

namespace gegchain {

namespace {

double h_entry(const ChainHamiltonian& h, std::size_t i, std::size_t j) {
    if (j == i + 1) return h.superdiag[i];
    if (i == j + 1) return h.subdiag[j];
    return 0.0;
}

PseudometricLabel label_for_band(std::size_t band, std::size_t n) {
    switch (band) {
        case 0: return PseudometricLabel::diagonal;
        case 1: return PseudometricLabel::tridiagonal;
        case 2: return PseudometricLabel::pentadiagonal;
        default: return band + 1 == n ? PseudometricLabel::long_range : PseudometricLabel::generic;
    }
}

std::vector<Pseudometric> solve_banded_impl(const ChainHamiltonian& h, std::size_t band,
                                            double tol, bool parity) {
    const std::size_t n = h.n_levels;
    if (band >= n) throw std::invalid_argument("solve_banded: band must be <= N-1");

    // unknowns: upper-triangle entries on the admissible diagonals
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const std::size_t d = j - i;
            if (d > band) continue;
            if (parity && d % 2 != band % 2) continue;
            index[i][j] = static_cast<int>(unknowns.size());
            index[j][i] = index[i][j];
            unknowns.emplace_back(i, j);
        }
    if (unknowns.empty()) return {};

    // canonical gauge: zero out the seeds of the smaller-band solutions that
    // fit the same pattern, so the maximal-band component is isolated
    std::vector<int> gauge;
    for (std::size_t d = 0; d < band; ++d)
        if (index[0][d] >= 0) gauge.push_back(index[0][d]);

    const std::size_t nu = unknowns.size();
    Matrix constraints(n * n + gauge.size(), nu);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t row = r * n + c;
            // (H^T P)_{rc} = sum_m H_{mr} P_{mc}
            for (std::size_t m : {r > 0 ? r - 1 : n, r + 1}) {
                if (m >= n) continue;
                const int u = index[m][c];
                if (u >= 0) constraints(row, static_cast<std::size_t>(u)) += h_entry(h, m, r);
            }
            // -(P H)_{rc} = -sum_m P_{rm} H_{mc}
            for (std::size_t m : {c > 0 ? c - 1 : n, c + 1}) {
                if (m >= n) continue;
                const int u = index[r][m];
                if (u >= 0) constraints(row, static_cast<std::size_t>(u)) -= h_entry(h, m, c);
            }
        }
    for (std::size_t g = 0; g < gauge.size(); ++g)
        constraints(n * n + g, static_cast<std::size_t>(gauge[g])) = 1.0;

    const auto basis = nullspace(constraints, tol);

    std::vector<Pseudometric> out;
    for (const auto& vec : basis) {
        Pseudometric pm;
        pm.n_levels = n;
        pm.band = band;
        pm.label = label_for_band(band, n);
        pm.entries = SymmetricMatrix(n);

        // seed normalization: entry (0, band) carries the canonical seed
        double target = 1.0;
        const double a = h.a;
        if (band == 0)
            target = 2.0 * a * a;
        else if (band == 1)
            target = 2.0 * a;
        else if (band == 2 || band + 1 == n)
            target = a;

        const double seed = vec[static_cast<std::size_t>(index[0][band])];
        double scale;
        if (std::fabs(seed) >= 1e-8) {
            scale = target / seed;
        } else {
            scale = 1.0 / norm_inf(vec);
            pm.nonstandard_normalization = true;
        }
        for (std::size_t u = 0; u < nu; ++u)
            pm.entries.set(unknowns[u].first, unknowns[u].second, scale * vec[u]);
        out.push_back(std::move(pm));
    }
    return out;
}

} // namespace

ResidualReport residual_report(const ChainHamiltonian& h, const Matrix& p) {
    if (p.rows() != h.n_levels || p.cols() != h.n_levels)
        throw std::invalid_argument("residual: dimension mismatch");
    const double pnorm = p.norm_inf();
    if (pnorm == 0.0) return {0.0, true};
    const Matrix hd = h.dense();
    const Matrix lhs = hd.transposed() * p;
    const Matrix rhs = p * hd;
    return {(lhs - rhs).norm_inf() / (hd.norm_inf() * pnorm), false};
}

double residual(const ChainHamiltonian& h, const Matrix& p) { return residual_report(h, p).value; }

double residual(const ChainHamiltonian& h, const SymmetricMatrix& p) {
    return residual(h, p.dense());
}

double residual(const ChainHamiltonian& h, const Pseudometric& p) {
    return residual(h, p.dense());
}

Matrix constraint_matrix(const ChainHamiltonian& h) {
    const std::size_t n = h.n_levels;
    std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
    int count = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            index[i][j] = count;
            index[j][i] = count;
            ++count;
        }
    Matrix constraints(n * n, static_cast<std::size_t>(count));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t row = r * n + c;
            for (std::size_t m = 0; m < n; ++m) {
                const double hmr = h_entry(h, m, r);
                if (hmr != 0.0)
                    constraints(row, static_cast<std::size_t>(index[m][c])) += hmr;
                const double hmc = h_entry(h, m, c);
                if (hmc != 0.0)
                    constraints(row, static_cast<std::size_t>(index[r][m])) -= hmc;
            }
        }
    return constraints;
}

std::size_t nullspace_dimension(const ChainHamiltonian& h, double tol) {
    return nullspace(constraint_matrix(h), tol).size();
}

std::vector<Pseudometric> solve_banded(const ChainHamiltonian& h, std::size_t band, double tol) {
    return solve_banded_impl(h, band, tol, true);
}

std::vector<Pseudometric> solve_banded_full(const ChainHamiltonian& h, std::size_t band,
                                            double tol) {
    return solve_banded_impl(h, band, tol, false);
}

SymmetricMatrix spectral_pseudometric(const ChainHamiltonian& h,
                                      const std::vector<double>& weights) {
    const std::size_t n = h.n_levels;
    if (weights.size() != n)
        throw std::invalid_argument("spectral_pseudometric: weight count mismatch");

    const GegenbauerParam p(h.a);
    const HermitianPartner partner = build_hermitian_partner(n, p);
    const EigenDecomposition eig = eig_symmetric(partner.symmetric());
    const std::vector<double> omega = build_omega0(n, p);

    double spread = 0.0;
    if (n > 1) spread = eig.values.back() - eig.values.front();
    for (std::size_t k = 0; k + 1 < n; ++k)
        if (eig.values[k + 1] - eig.values[k] <= 1e-12 * std::max(spread, 1.0))
            throw std::runtime_error("spectral_pseudometric: degenerate spectrum");

    // left eigenvectors of H are Omega_0 v_n with v_n from the partner
    SymmetricMatrix out(n);
    for (std::size_t m = 0; m < n; ++m) {
        if (weights[m] == 0.0) continue;
        std::vector<double> psi(n);
        for (std::size_t i = 0; i < n; ++i) psi[i] = omega[i] * eig.vectors(i, m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) out.add(i, j, weights[m] * psi[i] * psi[j]);
    }
    return out;
}

} // namespace gegchain
