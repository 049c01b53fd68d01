#pragma once

#include <random>

#include "qpc/circuit.hpp"

// Shared generators for randomized tests.

namespace qpc::testutil {

inline StateVector random_state(int num_qubits, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    StateVector s;
    s.num_qubits = num_qubits;
    s.amps.resize(std::size_t{1} << num_qubits);
    for (cx& a : s.amps) a = cx(gauss(rng), gauss(rng));
    double nrm = std::sqrt(s.norm_sq());
    for (cx& a : s.amps) a /= nrm;
    return s;
}

// Random circuit over the non-oracle gate kinds.
inline Circuit random_circuit(int num_qubits, int num_gates, std::mt19937_64& rng) {
    Circuit c;
    c.num_qubits = num_qubits;
    std::uniform_int_distribution<int> kind_pick(0, 3);
    std::uniform_int_distribution<int> wire_pick(0, num_qubits - 1);
    auto distinct_wires = [&](int count) {
        std::vector<int> ws;
        while (static_cast<int>(ws.size()) < count) {
            int w = wire_pick(rng);
            if (std::find(ws.begin(), ws.end(), w) == ws.end()) ws.push_back(w);
        }
        return ws;
    };
    for (int g = 0; g < num_gates; ++g) {
        switch (kind_pick(rng)) {
            case 0:
                c.gates.push_back(Gate::single(haar_random_unitary(rng()), wire_pick(rng)));
                break;
            case 1: {
                auto ws = distinct_wires(2);
                c.gates.push_back(Gate::cnot(ws[0], ws[1]));
                break;
            }
            case 2: {
                if (num_qubits < 3) {
                    c.gates.push_back(Gate::single(haar_random_unitary(rng()), wire_pick(rng)));
                    break;
                }
                auto ws = distinct_wires(3);
                c.gates.push_back(Gate::toffoli(ws[0], ws[1], ws[2]));
                break;
            }
            default: {
                if (num_qubits < 3) {
                    auto ws = distinct_wires(2);
                    c.gates.push_back(Gate::cnot(ws[0], ws[1]));
                    break;
                }
                auto ws = distinct_wires(3);
                c.gates.push_back(Gate::cswap(ws[0], ws[1], ws[2]));
                break;
            }
        }
    }
    return c;
}

inline Unitary2 pauli_x() {
    Unitary2 u{};
    u.m[0][1] = 1.0;
    u.m[1][0] = 1.0;
    return u;
}

inline Unitary2 pauli_z() {
    Unitary2 u{};
    u.m[0][0] = 1.0;
    u.m[1][1] = -1.0;
    return u;
}

inline Unitary2 hadamard() {
    double r = 1.0 / std::sqrt(2.0);
    Unitary2 u{};
    u.m[0][0] = r;
    u.m[0][1] = r;
    u.m[1][0] = r;
    u.m[1][1] = -r;
    return u;
}

inline StateVector apply_matrix(const Unitary2& u, const StateVector& psi) {
    StateVector out;
    out.num_qubits = 1;
    out.amps = {u.m[0][0] * psi.amps[0] + u.m[0][1] * psi.amps[1],
                u.m[1][0] * psi.amps[0] + u.m[1][1] * psi.amps[1]};
    return out;
}

}  // namespace qpc::testutil
