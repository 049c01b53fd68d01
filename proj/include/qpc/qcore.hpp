#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

// Core state-vector substrate: complex amplitudes, 2x2 unitaries, bit
// conventions. Basis index bit j (LSB = bit 0) is the state of wire j;
// kets are printed with the most-significant wire leftmost.

namespace qpc {

using cx = std::complex<double>;

struct StateVector {
    int num_qubits = 0;
    std::vector<cx> amps;

    std::size_t size() const { return amps.size(); }
    double norm_sq() const;
};

// 2x2 complex matrix, row-major: m[r][c].
struct Unitary2 {
    cx m[2][2];

    static Unitary2 identity();
    Unitary2 adjoint() const;
    // ||U^dag U - I||_max
    double unitarity_error() const;
};

Unitary2 operator*(const Unitary2& a, const Unitary2& b);

struct BitString {
    std::vector<int> bits;  // bits[j] is bit j (LSB first)

    static BitString from_value(std::uint64_t value, int n);
    std::uint64_t value() const;
};

StateVector basis_state(int num_qubits, std::uint64_t index);

// true iff max entrywise |a_k - b_k| <= tol. Throws on size mismatch.
bool compare_states(const StateVector& a, const StateVector& b, double tol);

// |<a|b>|, phase-insensitive overlap.
double fidelity(const StateVector& a, const StateVector& b);

// Deterministic Haar-distributed 2x2 unitary: complex Gaussian matrix,
// Gram-Schmidt on columns, column phases fixed so the triangular factor
// has a real-positive diagonal.
Unitary2 haar_random_unitary(std::uint64_t seed);

// U_{order[last]} * ... * U_{order[0]} (order[0] applied first).
// Empty order gives the identity.
Unitary2 product_in_order(const std::vector<Unitary2>& unitaries,
                          const std::vector<int>& order);

StateVector apply_unitary2(const StateVector& state, const Unitary2& u, int wire);

// Low-level kernels used by the circuit simulator.
void apply_unitary2_inplace(StateVector& state, const Unitary2& u, int wire);
void apply_cnot_inplace(StateVector& state, int control, int target);
void apply_toffoli_inplace(StateVector& state, int c1, int c2, int target);
void apply_cswap_inplace(StateVector& state, int control, int a, int b);

}  // namespace qpc
