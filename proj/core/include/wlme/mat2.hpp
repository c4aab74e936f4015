#pragma once

#include <array>
#include <complex>

#include "wlme/errors.hpp"

namespace wlme {

using cplx = std::complex<double>;

// 2x2 complex matrix: local operators, Pauli matrices, phase rotations.
// Stored row-major.
class Mat2 {
public:
    Mat2() : e_{cplx(0), cplx(0), cplx(0), cplx(0)} {}
    Mat2(cplx a00, cplx a01, cplx a10, cplx a11) : e_{a00, a01, a10, a11} {}

    static Mat2 identity() { return Mat2(1, 0, 0, 1); }
    static Mat2 pauli_x() { return Mat2(0, 1, 1, 0); }
    static Mat2 pauli_y() { return Mat2(0, cplx(0, -1), cplx(0, 1), 0); }
    static Mat2 pauli_z() { return Mat2(1, 0, 0, -1); }

    const cplx& operator()(int row, int col) const { return e_[2 * row + col]; }
    cplx& operator()(int row, int col) { return e_[2 * row + col]; }

    Mat2 operator*(const Mat2& o) const {
        return Mat2(e_[0] * o.e_[0] + e_[1] * o.e_[2], e_[0] * o.e_[1] + e_[1] * o.e_[3],
                    e_[2] * o.e_[0] + e_[3] * o.e_[2], e_[2] * o.e_[1] + e_[3] * o.e_[3]);
    }
    Mat2 operator*(cplx s) const { return Mat2(s * e_[0], s * e_[1], s * e_[2], s * e_[3]); }
    Mat2 operator+(const Mat2& o) const {
        return Mat2(e_[0] + o.e_[0], e_[1] + o.e_[1], e_[2] + o.e_[2], e_[3] + o.e_[3]);
    }
    Mat2 operator-(const Mat2& o) const {
        return Mat2(e_[0] - o.e_[0], e_[1] - o.e_[1], e_[2] - o.e_[2], e_[3] - o.e_[3]);
    }

    Mat2 adjoint() const {
        return Mat2(std::conj(e_[0]), std::conj(e_[2]), std::conj(e_[1]), std::conj(e_[3]));
    }

    cplx trace() const { return e_[0] + e_[3]; }
    cplx det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

    // max |entry| difference, used for tolerance comparisons everywhere
    double max_abs_diff(const Mat2& o) const;

    bool is_unitary(double tol) const;
    bool is_hermitian(double tol) const;
    bool is_invertible(double tol) const { return std::abs(det()) > tol; }

    bool all_finite() const;

private:
    std::array<cplx, 4> e_;
};

inline Mat2 operator*(cplx s, const Mat2& m) { return m * s; }

// diag(e^{i a/2}, e^{-i a/2}): rotation about Z by angle a.
Mat2 rz(double alpha);

// [[cos(b/2), -sin(b/2)], [sin(b/2), cos(b/2)]]: real rotation about Y.
Mat2 ry(double beta);

// Closed-form spectral decomposition of a Hermitian 2x2 matrix.
// u is unitary with u * m * u^† = diag(lambda1, lambda2), lambda1 >= lambda2.
// Uses the trace/determinant quadratic, no iterative solver. When the
// eigenvalues coincide within 1e-12 the diagonalizer is the identity.
// Eigenvector phases are fixed by making the first nonzero component of
// each eigenvector real and positive.
struct Eig2 {
    double lambda1;
    double lambda2;
    Mat2 u;
};

Eig2 eig_herm2(const Mat2& m);

}  // namespace wlme
