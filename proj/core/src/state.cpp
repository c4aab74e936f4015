#include "wlme/state.hpp"

#include <cmath>
#include <string>

namespace wlme {

namespace detail {

double norm2(std::span<const cplx> amps) {
    double s = 0.0;
    for (const cplx& a : amps) s += std::norm(a);
    return s;
}

void apply_one(std::vector<cplx>& amps, int bit, const Mat2& op) {
    const std::size_t stride = std::size_t{1} << bit;
    const std::size_t dim = amps.size();
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const cplx a0 = amps[i];
            const cplx a1 = amps[i + stride];
            amps[i] = op(0, 0) * a0 + op(0, 1) * a1;
            amps[i + stride] = op(1, 0) * a0 + op(1, 1) * a1;
        }
    }
}

}  // namespace detail

PureState PureState::from_normalized(int n, std::vector<cplx> amps) {
    const double norm = std::sqrt(detail::norm2(amps));
    if (norm != 1.0) {
        for (cplx& a : amps) a /= norm;
    }
    return PureState(n, std::move(amps));
}

PureState make_state(int n, std::vector<cplx> amps, bool normalize) {
    require(n >= 1 && n <= PureState::kMaxQubits, ErrorKind::OutOfRange,
            "make_state: n must be in [1, " + std::to_string(PureState::kMaxQubits) + "]");
    require(amps.size() == (std::size_t{1} << n), ErrorKind::DimensionMismatch,
            "make_state: expected 2^n amplitudes");
    for (const cplx& a : amps) {
        require(std::isfinite(a.real()) && std::isfinite(a.imag()), ErrorKind::NonFinite,
                "make_state: amplitudes must be finite");
    }
    const double norm = std::sqrt(detail::norm2(amps));
    if (normalize) {
        require(norm > 1e-12, ErrorKind::ZeroVector, "make_state: zero amplitude vector");
    } else {
        require(std::abs(norm - 1.0) <= 1e-9, ErrorKind::NotNormalized,
                "make_state: vector norm deviates from 1 by more than 1e-9");
    }
    return PureState::from_normalized(n, std::move(amps));
}

cplx inner(const PureState& a, const PureState& b) {
    require(a.n_qubits() == b.n_qubits(), ErrorKind::DimensionMismatch,
            "inner: qubit counts differ");
    cplx s(0.0, 0.0);
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double infidelity(const PureState& a, const PureState& b) { return 1.0 - std::abs(inner(a, b)); }

PureState apply_local(const PureState& state, const LocalOps& ops, bool renormalize) {
    const int n = state.n_qubits();
    require(static_cast<int>(ops.size()) == n, ErrorKind::DimensionMismatch,
            "apply_local: expected one (optional) operator per qubit");
    if (!renormalize) {
        for (const auto& op : ops) {
            require(!op || op->is_unitary(1e-9), ErrorKind::NonUnitaryWithoutRenormalize,
                    "apply_local: non-unitary operator requires the renormalize flag");
        }
    }
    std::vector<cplx> amps(state.amps().begin(), state.amps().end());
    for (int l = 1; l <= n; ++l) {
        if (ops[l - 1]) detail::apply_one(amps, state.bit_of(l), *ops[l - 1]);
    }
    const double norm = std::sqrt(detail::norm2(amps));
    require(norm > 1e-12, ErrorKind::ZeroResult, "apply_local: operators annihilated the state");
    return PureState::from_normalized(n, std::move(amps));
}

PureState apply_local(const PureState& state, std::span<const Mat2> ops, bool renormalize) {
    LocalOps opt(ops.size());
    for (std::size_t i = 0; i < ops.size(); ++i) opt[i] = ops[i];
    return apply_local(state, opt, renormalize);
}

}  // namespace wlme
