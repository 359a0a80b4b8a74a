#include "isogauss/matrix.hpp"

#include <cmath>
#include <string>

#include "isogauss/errors.hpp"
#include "isogauss/kernels.hpp"

namespace isogauss {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols)
            throw DimensionError("from_rows: ragged row " + std::to_string(i));
        for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::diag(const std::vector<double>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

bool Matrix::all_finite() const {
    for (double v : data)
        if (!std::isfinite(v)) return false;
    return true;
}

namespace {
std::string shape_str(const Matrix& m) {
    return std::to_string(m.rows) + "x" + std::to_string(m.cols);
}
}  // namespace

Matrix matmul(const Matrix& a, const Matrix& b, bool trans_a, bool trans_b) {
    const std::size_t m = trans_a ? a.cols : a.rows;
    const std::size_t ka = trans_a ? a.rows : a.cols;
    const std::size_t kb = trans_b ? b.cols : b.rows;
    const std::size_t n = trans_b ? b.rows : b.cols;
    if (ka != kb)
        throw DimensionError("matmul: inner dimensions " + shape_str(a) + " vs " + shape_str(b));
    Matrix c(m, n);
    kernels::active().gemm(trans_a, trans_b, m, n, ka, 1.0, a.data.data(), a.cols,
                           b.data.data(), b.cols, 0.0, c.data.data(), c.cols);
    return c;
}

std::vector<double> matvec(const Matrix& a, const std::vector<double>& x, bool trans) {
    const std::size_t m = trans ? a.cols : a.rows;
    const std::size_t k = trans ? a.rows : a.cols;
    if (x.size() != k)
        throw DimensionError("matvec: " + shape_str(a) + " vs vector of length " +
                             std::to_string(x.size()));
    std::vector<double> y(m, 0.0);
    kernels::active().gemm(trans, false, m, 1, k, 1.0, a.data.data(), a.cols, x.data(), 1, 0.0,
                           y.data(), 1);
    return y;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
    return t;
}

Matrix add(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) throw DimensionError("add: " + shape_str(a) + " vs " + shape_str(b));
    Matrix c = a;
    kernels::active().axpy(1.0, b.data.data(), c.data.data(), c.size());
    return c;
}

Matrix sub(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) throw DimensionError("sub: " + shape_str(a) + " vs " + shape_str(b));
    Matrix c = a;
    kernels::active().axpy(-1.0, b.data.data(), c.data.data(), c.size());
    return c;
}

Matrix scaled(const Matrix& a, double c) {
    Matrix r = a;
    kernels::active().scale(c, r.data.data(), r.size());
    return r;
}

double trace(const Matrix& a) {
    if (!a.square()) throw DimensionError("trace: matrix is " + shape_str(a));
    double t = 0.0;
    for (std::size_t i = 0; i < a.rows; ++i) t += a(i, i);
    return t;
}

double frobenius_norm(const Matrix& a) {
    return std::sqrt(kernels::active().sumsq(a.data.data(), a.size()));
}

double max_abs(const Matrix& a) {
    double m = 0.0;
    for (double v : a.data) m = std::max(m, std::abs(v));
    return m;
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw DimensionError("dot: length mismatch");
    return kernels::active().dot(x.data(), y.data(), x.size());
}

double norm2(const std::vector<double>& x) {
    return std::sqrt(kernels::active().sumsq(x.data(), x.size()));
}

std::vector<double> vec_add(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw DimensionError("vec_add: length mismatch");
    std::vector<double> r = x;
    kernels::active().axpy(1.0, y.data(), r.data(), r.size());
    return r;
}

std::vector<double> vec_sub(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw DimensionError("vec_sub: length mismatch");
    std::vector<double> r = x;
    kernels::active().axpy(-1.0, y.data(), r.data(), r.size());
    return r;
}

std::vector<double> vec_scaled(const std::vector<double>& x, double c) {
    std::vector<double> r = x;
    kernels::active().scale(c, r.data(), r.size());
    return r;
}

}  // namespace isogauss
