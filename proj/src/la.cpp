#include "fwedge/la.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fwedge::la {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix shape mismatch in +=");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix shape mismatch in -=");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= other.a_[i];
    return *this;
}

Matrix& Matrix::operator*=(cplx scale) {
    for (auto& v : a_) v *= scale;
    return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { a += b; return a; }
Matrix operator-(Matrix a, const Matrix& b) { a -= b; return a; }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix shape mismatch in *");
    Matrix c(a.rows(), b.cols());
    // ikj order keeps the inner loop contiguous in b and c.
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

Matrix adjoint(const Matrix& m) {
    Matrix r(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = std::conj(m(i, j));
    return r;
}

Matrix transpose(const Matrix& m) {
    Matrix r(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = m(i, j);
    return r;
}

Matrix conjugate(const Matrix& m) {
    Matrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = std::conj(m(i, j));
    return r;
}

cplx trace(const Matrix& m) {
    cplx t = 0.0;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
    return t;
}

double frobenius_norm(const Matrix& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

double max_abs(const Matrix& m) {
    double r = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r = std::max(r, std::abs(m(i, j)));
    return r;
}

double hermiticity_error(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("hermiticity_error: square matrix required");
    double r = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            r = std::max(r, std::abs(m(i, j) - std::conj(m(j, i))));
    return r;
}

double unitarity_error(const Matrix& u) {
    const Matrix g = adjoint(u) * u;
    double r = 0.0;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            r = std::max(r, std::abs(g(i, j) - (i == j ? 1.0 : 0.0)));
    return r;
}

void add_outer(Matrix& a, cplx alpha, const std::vector<cplx>& x, const std::vector<cplx>& y) {
    if (a.rows() != x.size() || a.cols() != y.size())
        throw std::invalid_argument("add_outer: shape mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) {
        const cplx ax = alpha * x[i];
        if (ax == cplx{}) continue;
        for (std::size_t j = 0; j < y.size(); ++j) a(i, j) += ax * std::conj(y[j]);
    }
}

std::vector<cplx> matvec(const Matrix& a, const std::vector<cplx>& x) {
    if (a.cols() != x.size()) throw std::invalid_argument("matvec: shape mismatch");
    std::vector<cplx> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cplx s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

namespace {

double offdiag_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t p = 0; p + 1 < a.rows(); ++p)
        for (std::size_t q = p + 1; q < a.cols(); ++q) s += std::norm(a(p, q));
    return std::sqrt(2.0 * s);
}

}  // namespace

EigResult jacobi_hermitian(Matrix a, double herm_tol, int max_sweeps) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("jacobi_hermitian: square matrix required");

    const double scale = std::max(max_abs(a), 1.0);
    if (hermiticity_error(a) > herm_tol * scale)
        throw std::invalid_argument("jacobi_hermitian: input not Hermitian within tolerance");

    // Work on the exact Hermitian average so rounding asymmetry cannot drift.
    for (std::size_t p = 0; p < n; ++p) {
        a(p, p) = cplx(a(p, p).real(), 0.0);
        for (std::size_t q = p + 1; q < n; ++q) {
            const cplx h = 0.5 * (a(p, q) + std::conj(a(q, p)));
            a(p, q) = h;
            a(q, p) = std::conj(h);
        }
    }

    Matrix v = Matrix::identity(n);
    const double fro = std::max(frobenius_norm(a), 1e-300);
    const double stop = 1e-15 * fro;

    int sweep = 0;
    for (; sweep < max_sweeps && offdiag_norm(a) > stop; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = std::abs(a(p, q));
                if (apq <= 1e-300) continue;

                // Unitary rotation in the (p,q) plane annihilating a(p,q).
                const cplx phase = a(p, q) / apq;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Columns transform by J: col_p' = c*col_p - s*conj(phase)*col_q,
                //                         col_q' = s*phase*col_p + c*col_q.
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * std::conj(phase) * akq;
                    a(k, q) = s * phase * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * phase * aqk;
                    a(q, k) = s * std::conj(phase) * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = cplx(a(p, p).real(), 0.0);
                a(q, q) = cplx(a(q, q).real(), 0.0);

                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * std::conj(phase) * vkq;
                    v(k, q) = s * phase * vkp + c * vkq;
                }
            }
        }
    }

    if (offdiag_norm(a) > 1e4 * stop)
        throw std::runtime_error("jacobi_hermitian: no convergence within sweep budget");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigResult r;
    r.eigenvalues.resize(n);
    r.vectors = Matrix(n, n);
    for (std::size_t c2 = 0; c2 < n; ++c2) {
        r.eigenvalues[c2] = a(order[c2], order[c2]).real();
        for (std::size_t k = 0; k < n; ++k) r.vectors(k, c2) = v(k, order[c2]);
    }
    r.sweeps = sweep;
    return r;
}

}  // namespace fwedge::la
