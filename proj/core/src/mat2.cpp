#include "wlme/mat2.hpp"

#include <algorithm>
#include <cmath>

namespace wlme {

double Mat2::max_abs_diff(const Mat2& o) const {
    double d = 0.0;
    for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(e_[i] - o.e_[i]));
    return d;
}

bool Mat2::is_unitary(double tol) const {
    return (adjoint() * *this).max_abs_diff(Mat2::identity()) <= tol;
}

bool Mat2::is_hermitian(double tol) const { return max_abs_diff(adjoint()) <= tol; }

bool Mat2::all_finite() const {
    for (int i = 0; i < 4; ++i) {
        if (!std::isfinite(e_[i].real()) || !std::isfinite(e_[i].imag())) return false;
    }
    return true;
}

Mat2 rz(double alpha) {
    return Mat2(std::polar(1.0, alpha / 2.0), 0, 0, std::polar(1.0, -alpha / 2.0));
}

Mat2 ry(double beta) {
    const double c = std::cos(beta / 2.0);
    const double s = std::sin(beta / 2.0);
    return Mat2(c, -s, s, c);
}

namespace {

// Multiply a 2-vector by the unit phase that makes its first nonzero
// component real and positive.
void fix_phase(cplx& v0, cplx& v1) {
    const cplx pivot = (std::abs(v0) > 0.0) ? v0 : v1;
    const double mag = std::abs(pivot);
    if (mag == 0.0) return;
    const cplx rot = std::conj(pivot) / mag;
    v0 *= rot;
    v1 *= rot;
}

}  // namespace

Eig2 eig_herm2(const Mat2& m) {
    require(m.is_hermitian(1e-9), ErrorKind::NotHermitian,
            "eig_herm2: matrix is not Hermitian within 1e-9");

    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    // symmetrize the off-diagonal so rounding in the input cannot skew the pair
    const cplx b = 0.5 * (m(0, 1) + std::conj(m(1, 0)));

    const double gap = std::hypot(a - d, 2.0 * std::abs(b));
    const double tr = a + d;
    const double lambda1 = 0.5 * (tr + gap);
    const double lambda2 = 0.5 * (tr - gap);

    if (gap < 1e-12) {
        return {lambda1, lambda2, Mat2::identity()};  // scalar matrix, identity by convention
    }

    // Two algebraically equivalent expressions for the lambda1 eigenvector;
    // pick the better conditioned one.
    cplx v0 = b;
    cplx v1 = cplx(lambda1 - a, 0.0);
    const cplx w0 = cplx(lambda1 - d, 0.0);
    const cplx w1 = std::conj(b);
    if (std::norm(w0) + std::norm(w1) > std::norm(v0) + std::norm(v1)) {
        v0 = w0;
        v1 = w1;
    }
    const double nv = std::sqrt(std::norm(v0) + std::norm(v1));
    v0 /= nv;
    v1 /= nv;

    // The second eigenvector is the orthonormal complement.
    cplx u0 = -std::conj(v1);
    cplx u1 = std::conj(v0);

    fix_phase(v0, v1);
    fix_phase(u0, u1);

    // Rows of u are the conjugated eigenvectors, so u m u^† is diagonal.
    Mat2 u(std::conj(v0), std::conj(v1), std::conj(u0), std::conj(u1));
    return {lambda1, lambda2, u};
}

}  // namespace wlme
