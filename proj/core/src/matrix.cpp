#include "bipwalk/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace bipwalk {

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::dagger() const {
    Matrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            m(j, i) = std::conj((*this)(i, j));
    return m;
}

std::vector<cx> Matrix::column(int j) const {
    std::vector<cx> v(n_);
    for (int i = 0; i < n_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_column(int j, const std::vector<cx>& v) {
    if (static_cast<int>(v.size()) != n_)
        throw std::invalid_argument("set_column: size mismatch");
    for (int i = 0; i < n_; ++i) (*this)(i, j) = v[i];
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Matrix multiply: size mismatch");
    Matrix c(a.n_);
    for (int i = 0; i < a.n_; ++i)
        for (int k = 0; k < a.n_; ++k) {
            const cx aik = a(i, k);
            if (aik == cx{}) continue;
            for (int j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

std::vector<cx> operator*(const Matrix& a, const std::vector<cx>& v) {
    if (static_cast<int>(v.size()) != a.n_)
        throw std::invalid_argument("Matrix apply: size mismatch");
    std::vector<cx> w(a.n_);
    for (int i = 0; i < a.n_; ++i) {
        cx s = 0.0;
        for (int j = 0; j < a.n_; ++j) s += a(i, j) * v[j];
        w[i] = s;
    }
    return w;
}

Matrix& Matrix::operator+=(const Matrix& b) {
    if (n_ != b.n_) throw std::invalid_argument("Matrix add: size mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += b.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& b) {
    if (n_ != b.n_) throw std::invalid_argument("Matrix subtract: size mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= b.a_[i];
    return *this;
}

Matrix& Matrix::operator*=(cx s) {
    for (cx& v : a_) v *= s;
    return *this;
}

double Matrix::max_abs_diff(const Matrix& b) const {
    if (n_ != b.n_) throw std::invalid_argument("max_abs_diff: size mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a_.size(); ++i)
        m = std::max(m, std::abs(a_[i] - b.a_[i]));
    return m;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const cx& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double vec_norm(const std::vector<cx>& v) {
    double s = 0.0;
    for (const cx& a : v) s += std::norm(a);
    return std::sqrt(s);
}

double vec_max_abs_diff(const std::vector<cx>& a, const std::vector<cx>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("vec_max_abs_diff: size mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

cx vec_dot(const std::vector<cx>& a, const std::vector<cx>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_dot: size mismatch");
    cx s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double normality_defect(const Matrix& m) {
    const Matrix md = m.dagger();
    Matrix lhs = m * md;
    lhs -= md * m;
    return lhs.max_abs();
}

double unitarity_defect(const Matrix& m) {
    Matrix g = m.dagger() * m;
    g -= Matrix::identity(m.size());
    return g.max_abs();
}

} // namespace bipwalk
