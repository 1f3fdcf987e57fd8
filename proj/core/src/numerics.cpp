#include "gegchain/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gegchain {

namespace {

double offdiag_sq(const Matrix& a) {
    const std::size_t n = a.rows();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
    return s;
}

} // namespace

EigenDecomposition eig_symmetric(const SymmetricMatrix& m) {
    if (!m.finite()) throw std::invalid_argument("eig_symmetric: non-finite input");
    const std::size_t n = m.size();
    Matrix a = m.dense();
    Matrix v = Matrix::identity(n);

    double diag_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) diag_sq += a(i, i) * a(i, i);
    const double frob_sq = diag_sq + 2.0 * offdiag_sq(a);
    const double stop = 1e-30 * std::max(frob_sq, 1e-300);

    constexpr int max_sweeps = 100;
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        if (2.0 * offdiag_sq(a) <= stop) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t;
                if (std::fabs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (i != p && i != q) {
                        const double aip = a(i, p);
                        const double aiq = a(i, q);
                        a(i, p) = aip - s * (aiq + tau * aip);
                        a(i, q) = aiq + s * (aip - tau * aiq);
                        a(p, i) = a(i, p);
                        a(q, i) = a(i, q);
                    }
                    const double vip = v(i, p);
                    const double viq = v(i, q);
                    v(i, p) = vip - s * (viq + tau * vip);
                    v(i, q) = viq + s * (vip - tau * viq);
                }
            }
        }
    }
    if (sweep == max_sweeps)
        throw std::runtime_error("eig_symmetric: Jacobi sweeps did not converge after " +
                                 std::to_string(max_sweeps) + " sweeps");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

    EigenDecomposition out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]);
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

std::vector<double> eig_tridiagonal_bisection(const std::vector<double>& diag,
                                              const std::vector<double>& offdiag,
                                              double tol) {
    const std::size_t n = diag.size();
    if (n == 0) return {};
    if (offdiag.size() + 1 != n)
        throw std::invalid_argument("eig_tridiagonal_bisection: off-diagonal length mismatch");

    // eigenvalues of the leading sequence strictly below x (Sturm count)
    auto count_below = [&](double x) {
        int cnt = 0;
        double q = diag[0] - x;
        if (q < 0.0) ++cnt;
        for (std::size_t i = 1; i < n; ++i) {
            const double denom = (q == 0.0) ? 1e-300 : q;
            q = diag[i] - x - offdiag[i - 1] * offdiag[i - 1] / denom;
            if (q < 0.0) ++cnt;
        }
        return cnt;
    };

    double lo = diag[0], hi = diag[0];
    for (std::size_t i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::fabs(offdiag[i - 1]) : 0.0) +
                         (i + 1 < n ? std::fabs(offdiag[i]) : 0.0);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    const double width = std::max(hi - lo, 1e-300);

    std::vector<double> values(n);
    for (std::size_t k = 0; k < n; ++k) {
        double a = lo, b = hi;
        while (b - a > tol * width) {
            const double mid = 0.5 * (a + b);
            if (count_below(mid) <= static_cast<int>(k))
                a = mid;
            else
                b = mid;
        }
        values[k] = 0.5 * (a + b);
    }
    return values;
}

Inertia inertia_eig(const SymmetricMatrix& m, double tol) {
    if (tol < 0.0) throw std::invalid_argument("inertia_eig: tol must be >= 0");
    Inertia out;
    out.tol = tol;
    for (double lambda : eig_symmetric(m).values) {
        if (lambda < -tol)
            ++out.negatives;
        else if (lambda > tol)
            ++out.positives;
        else
            ++out.zeros;
    }
    return out;
}

Inertia inertia_ldlt(const SymmetricMatrix& m, double tol) {
    if (tol < 0.0) throw std::invalid_argument("inertia_ldlt: tol must be >= 0");
    const std::size_t n = m.size();
    Matrix a = m.dense();
    Inertia out;
    out.tol = tol;

    // guard against classifying a pivot whose size says nothing about the
    // eigenvalue it represents
    const double breakdown = std::max(tol * 16.0, 1e-306);

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::fabs(a(i, i)) > std::fabs(a(p, p))) p = i;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k), a(i, p));
        }
        const double d = a(k, k);
        if (std::fabs(d) <= breakdown) {
            double rest = 0.0;
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j) rest = std::max(rest, std::fabs(a(i, j)));
            if (rest <= tol) {
                out.zeros += static_cast<int>(n - k);
                return out;
            }
            throw std::runtime_error("inertia_ldlt: pivot breakdown at step " + std::to_string(k));
        }
        if (d > 0.0)
            ++out.positives;
        else
            ++out.negatives;
        for (std::size_t i = k + 1; i < n; ++i) {
            const double l = a(i, k) / d;
            if (l == 0.0) continue;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= l * a(k, j);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            a(i, k) = 0.0;
            a(k, i) = 0.0;
        }
        // keep the trailing block symmetric against rounding drift
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const double s = 0.5 * (a(i, j) + a(j, i));
                a(i, j) = s;
                a(j, i) = s;
            }
    }
    return out;
}

Inertia inertia_of(const SymmetricMatrix& m, double tol) {
    if (tol < 0.0) throw std::invalid_argument("inertia_of: tol must be >= 0");
    if (!m.finite()) throw std::invalid_argument("inertia_of: non-finite input");
    try {
        return inertia_ldlt(m, tol);
    } catch (const std::runtime_error&) {
        return inertia_eig(m, tol);
    }
}

std::vector<std::vector<double>> nullspace(const Matrix& a, double tol) {
    if (!a.finite()) throw std::invalid_argument("nullspace: non-finite input");
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    Matrix r = a;
    const double threshold = tol * std::max(a.max_abs(), 0.0);

    std::vector<std::size_t> pivot_row;
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t p = rank;
        for (std::size_t i = rank + 1; i < rows; ++i)
            if (std::fabs(r(i, col)) > std::fabs(r(p, col))) p = i;
        if (std::fabs(r(p, col)) <= threshold) continue;
        if (p != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(r(rank, j), r(p, j));
        const double piv = r(rank, col);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank) continue;
            const double f = r(i, col) / piv;
            if (f == 0.0) continue;
            for (std::size_t j = col; j < cols; ++j) r(i, j) -= f * r(rank, j);
            r(i, col) = 0.0;
        }
        pivot_row.push_back(rank);
        pivot_col.push_back(col);
        ++rank;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<double>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<double> x(cols, 0.0);
        x[f] = 1.0;
        for (std::size_t k = 0; k < pivot_col.size(); ++k)
            x[pivot_col[k]] = -r(pivot_row[k], f) / r(pivot_row[k], pivot_col[k]);
        basis.push_back(std::move(x));
    }

    // modified Gram-Schmidt; vectors are independent by construction
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const double c = dot(basis[i], basis[j]);
            for (std::size_t k = 0; k < cols; ++k) basis[i][k] -= c * basis[j][k];
        }
        const double nrm = norm2(basis[i]);
        for (double& v : basis[i]) v /= nrm;
    }
    return basis;
}

} // namespace gegchain
