#pragma once

// Dense complex matrices and the cyclic Jacobi eigensolver used by the
// geminal canonicalization and the numeric cross-checks. Desk-scale only:
// matrices stay well below 10^3 x 10^3 except for the 3-fold tensor space.

#include <complex>
#include <cstddef>
#include <vector>

namespace fwedge::la {

using cplx = std::complex<double>;

/// Row-major dense complex matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * cols_ + j]; }

    cplx* data() noexcept { return a_.data(); }
    const cplx* data() const noexcept { return a_.data(); }

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(cplx scale);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);

Matrix adjoint(const Matrix& m);
Matrix transpose(const Matrix& m);
Matrix conjugate(const Matrix& m);

cplx trace(const Matrix& m);
double frobenius_norm(const Matrix& m);
double max_abs(const Matrix& m);

/// max |M - M†| entrywise; 0 for exactly Hermitian input.
double hermiticity_error(const Matrix& m);

/// max |U†U - I| entrywise.
double unitarity_error(const Matrix& u);

/// A += alpha * x * y†  (rank-one update).
void add_outer(Matrix& a, cplx alpha, const std::vector<cplx>& x, const std::vector<cplx>& y);

std::vector<cplx> matvec(const Matrix& a, const std::vector<cplx>& x);

struct EigResult {
    std::vector<double> eigenvalues;  // ascending
    Matrix vectors;                   // column i pairs with eigenvalues[i]
    int sweeps = 0;
};

/// Cyclic Jacobi rotations for a Hermitian matrix. Deterministic: fixed
/// (p,q) sweep order, eigenpairs sorted ascending with stable index
/// tie-break. Throws std::invalid_argument when the input is not Hermitian
/// within herm_tol (absolute, relative to max entry).
EigResult jacobi_hermitian(Matrix a, double herm_tol = 1e-12, int max_sweeps = 64);

}  // namespace fwedge::la
