#pragma once

#include <cstddef>
#include <vector>

namespace isogauss {

// Dense row-major matrix of doubles. Vectors are plain std::vector<double>;
// a Matrix is used wherever two-dimensional shape matters.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<double>>& rows);
    static Matrix diag(const std::vector<double>& d);

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    double* row(std::size_t i) { return data.data() + i * cols; }
    const double* row(std::size_t i) const { return data.data() + i * cols; }

    std::size_t size() const { return data.size(); }
    bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
    bool square() const { return rows == cols; }
    bool all_finite() const;
};

// c = op(a) * op(b); shapes checked, DimensionError on mismatch.
Matrix matmul(const Matrix& a, const Matrix& b, bool trans_a = false, bool trans_b = false);

// y = a * x (no transpose) or a^T * x.
std::vector<double> matvec(const Matrix& a, const std::vector<double>& x, bool trans = false);

Matrix transpose(const Matrix& a);
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix scaled(const Matrix& a, double c);

double trace(const Matrix& a);
double frobenius_norm(const Matrix& a);
double max_abs(const Matrix& a);

// Vector helpers on top of the kernel layer.
double dot(const std::vector<double>& x, const std::vector<double>& y);
double norm2(const std::vector<double>& x);
std::vector<double> vec_add(const std::vector<double>& x, const std::vector<double>& y);
std::vector<double> vec_sub(const std::vector<double>& x, const std::vector<double>& y);
std::vector<double> vec_scaled(const std::vector<double>& x, double c);

}  // namespace isogauss
