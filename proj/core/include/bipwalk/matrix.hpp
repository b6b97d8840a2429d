#pragma once

#include "bipwalk/defs.hpp"

#include <vector>

namespace bipwalk {

// Dense square complex matrix, row major. Just enough linear algebra for the
// reduced operators; nothing here is performance critical.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

    static Matrix identity(int n);

    int size() const noexcept { return n_; }

    cx& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const cx& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    Matrix dagger() const;

    std::vector<cx> column(int j) const;
    void set_column(int j, const std::vector<cx>& v);

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend std::vector<cx> operator*(const Matrix& a, const std::vector<cx>& v);
    Matrix& operator+=(const Matrix& b);
    Matrix& operator-=(const Matrix& b);
    Matrix& operator*=(cx s);

    double max_abs_diff(const Matrix& b) const;
    double max_abs() const;

private:
    int n_ = 0;
    std::vector<cx> a_;
};

double vec_norm(const std::vector<cx>& v);
double vec_max_abs_diff(const std::vector<cx>& a, const std::vector<cx>& b);
cx vec_dot(const std::vector<cx>& a, const std::vector<cx>& b); // conj(a) . b

// Largest |entry| of M M^dag - M^dag M; zero iff M is normal.
double normality_defect(const Matrix& m);

// Largest |entry| of M^dag M - I.
double unitarity_defect(const Matrix& m);

} // namespace bipwalk
