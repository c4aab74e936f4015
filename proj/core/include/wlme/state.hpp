#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wlme/mat2.hpp"

namespace wlme {

// Dense n-qubit pure state.
//
// Basis convention used across the whole library: qubit 1 is the MOST
// significant bit of the amplitude index, i.e. |q_1 q_2 ... q_n> sits at
// index q_1*2^(n-1) + ... + q_n. Qubit indices are 1-based.
//
// States are immutable after construction and normalized to unit 2-norm
// within 1e-12. Validated construction (make_state) caps n at 12 system
// qubits; the ancilla protocol builds doubled registers internally.
class PureState {
public:
    int n_qubits() const { return n_; }
    std::size_t dim() const { return amps_.size(); }

    const cplx& operator[](std::size_t index) const { return amps_[index]; }
    std::span<const cplx> amps() const { return amps_; }

    // bit position of 1-based qubit l within an amplitude index
    int bit_of(int qubit) const { return n_ - qubit; }

    static constexpr int kMaxQubits = 12;       // validated construction
    static constexpr int kMaxTotalQubits = 24;  // doubled protocol registers

    // Trusted constructor for internally generated amplitude vectors; scales
    // by 1/norm so the class invariant holds to machine precision.
    static PureState from_normalized(int n, std::vector<cplx> amps);

private:
    PureState(int n, std::vector<cplx> amps) : n_(n), amps_(std::move(amps)) {}

    int n_;
    std::vector<cplx> amps_;
};

// Validated construction from raw amplitudes. With normalize set, any
// vector of norm > 1e-12 is accepted and scaled; without it the norm must
// already be within 1e-9 of one.
PureState make_state(int n, std::vector<cplx> amps, bool normalize = false);

// <a|b>
cplx inner(const PureState& a, const PureState& b);

// 1 - |<a|b>|: zero iff the states agree up to a global phase.
double infidelity(const PureState& a, const PureState& b);

using LocalOps = std::vector<std::optional<Mat2>>;

// (O_1 ⊗ ... ⊗ O_n)|state>. Missing entries act as identity. Without the
// renormalize flag every operator must be unitary within 1e-9; with it the
// result is rescaled to unit norm (SLOCC-style invertible maps).
PureState apply_local(const PureState& state, const LocalOps& ops, bool renormalize = false);
PureState apply_local(const PureState& state, std::span<const Mat2> ops, bool renormalize = false);

namespace detail {
// In-place single-qubit update on a raw amplitude vector; `bit` is the bit
// position of the target qubit. Shared by apply_local, the Gram evaluation
// and the protocol construction.
void apply_one(std::vector<cplx>& amps, int bit, const Mat2& op);
double norm2(std::span<const cplx> amps);
}  // namespace detail

}  // namespace wlme
