#include "bipwalk/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bipwalk {

namespace {

double off_diagonal_sq(const Matrix& a) {
    double s = 0.0;
    const int n = a.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += std::norm(a(i, j));
    return s;
}

double frob(const Matrix& a) {
    double s = 0.0;
    const int n = a.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

} // namespace

std::vector<double> hermitian_jacobi(Matrix& a, Matrix& v) {
    const int n = a.size();
    if (v.size() != n)
        throw std::invalid_argument("hermitian_jacobi: accumulator size mismatch");

    const double scale = std::max(frob(a), 1e-300);
    const double stop = 1e-30 * scale * scale;

    for (int sweep = 0; sweep < 100 && off_diagonal_sq(a) > stop; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq_abs = std::abs(a(p, q));
                if (apq_abs < 1e-300) { a(p, q) = a(q, p) = 0.0; continue; }

                const cx u = a(p, q) / apq_abs;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * apq_abs);
                const double t = theta >= 0.0
                    ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                    : -1.0 / (-theta + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                a(p, p) = app - t * apq_abs;
                a(q, q) = aqq + t * apq_abs;
                a(p, q) = a(q, p) = 0.0;

                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const cx arp = a(r, p), arq = a(r, q);
                    a(r, p) = c * arp - s * std::conj(u) * arq;
                    a(r, q) = s * u * arp + c * arq;
                    a(p, r) = std::conj(a(r, p));
                    a(q, r) = std::conj(a(r, q));
                }
                for (int r = 0; r < n; ++r) {
                    const cx vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = c * vrp - s * std::conj(u) * vrq;
                    v(r, q) = s * u * vrp + c * vrq;
                }
            }
        }
    }

    std::vector<double> d(n);
    for (int i = 0; i < n; ++i) d[i] = a(i, i).real();
    return d;
}

EigenSystem eigensystem_normal(const Matrix& m, double normality_tol) {
    const int n = m.size();
    if (n == 0) throw std::invalid_argument("eigensystem_normal: empty matrix");

    const double defect = normality_defect(m);
    if (defect > normality_tol * std::max(1.0, frob(m)))
        throw std::invalid_argument(
            "eigensystem_normal: matrix is not normal (defect "
            + std::to_string(defect) + ")");

    const Matrix md = m.dagger();
    Matrix h(n), k(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            h(i, j) = 0.5 * (m(i, j) + md(i, j));
            k(i, j) = cx(0.0, -0.5) * (m(i, j) - md(i, j));
        }

    Matrix v = Matrix::identity(n);
    std::vector<double> hd = hermitian_jacobi(h, v);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return hd[i] < hd[j]; });
    Matrix vs(n);
    for (int j = 0; j < n; ++j) vs.set_column(j, v.column(order[j]));
    std::sort(hd.begin(), hd.end());

    // H and K commute, so K is block diagonal across H's eigenspaces; a
    // second Jacobi pass inside each near-degenerate cluster separates the
    // remaining eigenvalue pairs.
    const double cluster_tol = 1e-8 * std::max(1.0, std::abs(hd[n - 1]) + std::abs(hd[0]));
    int lo = 0;
    while (lo < n) {
        int hi = lo + 1;
        while (hi < n && hd[hi] - hd[hi - 1] <= cluster_tol) ++hi;
        const int sz = hi - lo;
        if (sz > 1) {
            std::vector<std::vector<cx>> cols(sz);
            for (int j = 0; j < sz; ++j) cols[j] = vs.column(lo + j);
            std::vector<std::vector<cx>> kcols(sz);
            for (int j = 0; j < sz; ++j) kcols[j] = k * cols[j];
            Matrix b(sz);
            for (int i = 0; i < sz; ++i)
                for (int j = 0; j < sz; ++j) b(i, j) = vec_dot(cols[i], kcols[j]);
            for (int i = 0; i < sz; ++i)
                for (int j = i; j < sz; ++j) {
                    const cx sym = 0.5 * (b(i, j) + std::conj(b(j, i)));
                    b(i, j) = sym;
                    b(j, i) = std::conj(sym);
                }
            Matrix w = Matrix::identity(sz);
            hermitian_jacobi(b, w);
            for (int j = 0; j < sz; ++j) {
                std::vector<cx> col(n);
                for (int r = 0; r < n; ++r) {
                    cx acc = 0.0;
                    for (int i = 0; i < sz; ++i) acc += cols[i][r] * w(i, j);
                    col[r] = acc;
                }
                vs.set_column(lo + j, col);
            }
        }
        lo = hi;
    }

    EigenSystem es;
    es.vectors = vs;
    es.values.resize(n);
    for (int j = 0; j < n; ++j) {
        const std::vector<cx> col = vs.column(j);
        es.values[j] = vec_dot(col, m * col);
    }
    return es;
}

double eigen_residual(const Matrix& m, const EigenSystem& es) {
    double worst = 0.0;
    for (std::size_t j = 0; j < es.values.size(); ++j) {
        std::vector<cx> r = m * es.vectors.column(static_cast<int>(j));
        const std::vector<cx> col = es.vectors.column(static_cast<int>(j));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= es.values[j] * col[i];
        worst = std::max(worst, vec_norm(r));
    }
    return worst;
}

void canonicalize_phase(std::vector<cx>& v, double zero_tol) {
    double big = 0.0;
    for (const cx& a : v) big = std::max(big, std::abs(a));
    if (big == 0.0) return;
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
        if (std::abs(*it) > zero_tol * big) {
            const cx rot = std::conj(*it) / std::abs(*it);
            for (cx& a : v) a *= rot;
            return;
        }
    }
}

} // namespace bipwalk
