#ifndef GEGCHAIN_MATRIX_HPP
#define GEGCHAIN_MATRIX_HPP

#include <cstddef>
#include <vector>

namespace gegchain {

/// Dense real matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transposed() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix& operator*=(double s);

    std::vector<double> apply(const std::vector<double>& x) const;

    /// max_i sum_j |a_ij|
    double norm_inf() const;
    /// largest |a_ij|
    double max_abs() const;
    bool finite() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Real symmetric matrix with packed lower-triangle storage, so
/// entry(i,j) == entry(j,i) holds exactly by construction.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t n, double fill = 0.0)
        : n_(n), data_(n * (n + 1) / 2, fill) {}

    static SymmetricMatrix diagonal(const std::vector<double>& d);
    static SymmetricMatrix from_dense(const Matrix& m);

    std::size_t size() const { return n_; }

    double entry(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }
    void set(std::size_t i, std::size_t j, double v) { data_[index(i, j)] = v; }
    void add(std::size_t i, std::size_t j, double v) { data_[index(i, j)] += v; }

    Matrix dense() const;
    double norm_inf() const;
    double max_abs() const;
    bool finite() const;

private:
    static std::size_t tri(std::size_t i) { return i * (i + 1) / 2; }
    std::size_t index(std::size_t i, std::size_t j) const {
        return i >= j ? tri(i) + j : tri(j) + i;
    }

    std::size_t n_ = 0;
    std::vector<double> data_;
};

double dot(const std::vector<double>& x, const std::vector<double>& y);
double norm2(const std::vector<double>& x);
double norm_inf(const std::vector<double>& x);

} // namespace gegchain

#endif
