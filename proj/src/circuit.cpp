#include "qpc/circuit.hpp"

#include <algorithm>

namespace qpc {

Gate Gate::single(const Unitary2& u, int wire) {
    Gate g{GateKind::SingleQubit, {wire}};
    g.unitary = u;
    return g;
}

Gate Gate::cnot(int control, int target) {
    return Gate{GateKind::CNOT, {control, target}};
}

Gate Gate::toffoli(int c1, int c2, int target) {
    return Gate{GateKind::Toffoli, {c1, c2, target}};
}

Gate Gate::cswap(int control, int a, int b) {
    return Gate{GateKind::ControlledSwap, {control, a, b}};
}

Gate Gate::oracle(int label, int wire) {
    Gate g{GateKind::OracleCall, {wire}};
    g.label = label;
    return g;
}

void validate_gate(const Gate& gate, int num_qubits) {
    for (int w : gate.wires)
        if (w < 0 || w >= num_qubits)
            throw std::invalid_argument("gate wire out of range");
    std::vector<int> ws = gate.wires;
    std::sort(ws.begin(), ws.end());
    if (std::adjacent_find(ws.begin(), ws.end()) != ws.end())
        throw std::invalid_argument("duplicate wires within one gate");
}

static void apply_gate_inplace(StateVector& state, const Gate& gate,
                               const OracleBindings* bindings) {
    validate_gate(gate, state.num_qubits);
    switch (gate.kind) {
        case GateKind::SingleQubit:
            apply_unitary2_inplace(state, gate.unitary, gate.wires[0]);
            break;
        case GateKind::CNOT:
            apply_cnot_inplace(state, gate.wires[0], gate.wires[1]);
            break;
        case GateKind::Toffoli:
            apply_toffoli_inplace(state, gate.wires[0], gate.wires[1], gate.wires[2]);
            break;
        case GateKind::ControlledSwap:
            apply_cswap_inplace(state, gate.wires[0], gate.wires[1], gate.wires[2]);
            break;
        case GateKind::OracleCall: {
            if (!bindings)
                throw std::invalid_argument("OracleCall requires oracle bindings");
            auto it = bindings->find(gate.label);
            if (it == bindings->end())
                throw std::invalid_argument("unbound oracle label " +
                                            std::to_string(gate.label));
            apply_unitary2_inplace(state, it->second, gate.wires[0]);
            break;
        }
    }
}

StateVector apply_gate(const StateVector& state, const Gate& gate) {
    StateVector out = state;
    apply_gate_inplace(out, gate, nullptr);
    return out;
}

StateVector simulate(const Circuit& circuit, const StateVector& input,
                     const OracleBindings& bindings) {
    if (input.num_qubits != circuit.num_qubits)
        throw std::invalid_argument("simulate: qubit count mismatch");
    StateVector state = input;
    for (const Gate& g : circuit.gates) apply_gate_inplace(state, g, &bindings);
    return state;
}

Circuit invert(const Circuit& circuit) {
    Circuit inv;
    inv.num_qubits = circuit.num_qubits;
    inv.registers = circuit.registers;
    inv.gates.reserve(circuit.gates.size());
    for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
        Gate g = *it;
        switch (g.kind) {
            case GateKind::SingleQubit:
                g.unitary = g.unitary.adjoint();
                break;
            case GateKind::CNOT:
            case GateKind::Toffoli:
            case GateKind::ControlledSwap:
                break;  // self-inverse
            case GateKind::OracleCall:
                throw std::invalid_argument(
                    "invert: oracle adjoints are not available");
        }
        inv.gates.push_back(std::move(g));
    }
    return inv;
}

Circuit lower_controlled_swaps(const Circuit& circuit) {
    Circuit out;
    out.num_qubits = circuit.num_qubits;
    out.registers = circuit.registers;
    for (const Gate& g : circuit.gates) {
        if (g.kind == GateKind::ControlledSwap) {
            int c = g.wires[0], a = g.wires[1], b = g.wires[2];
            out.gates.push_back(Gate::cnot(b, a));
            out.gates.push_back(Gate::toffoli(c, a, b));
            out.gates.push_back(Gate::cnot(b, a));
        } else {
            out.gates.push_back(g);
        }
    }
    return out;
}

ResourceReport count_resources(const Circuit& circuit, bool lower_toffoli) {
    ResourceReport r;
    for (const Gate& g : circuit.gates) {
        switch (g.kind) {
            case GateKind::SingleQubit:
                ++r.single_qubit_count;
                break;
            case GateKind::CNOT:
                ++r.cnot_count;
                break;
            case GateKind::Toffoli:
                if (lower_toffoli) {
                    r.cnot_count += 6;
                    r.single_qubit_count += 9;
                } else {
                    ++r.toffoli_count;
                }
                break;
            case GateKind::ControlledSwap:
                ++r.controlled_swap_count;
                break;
            case GateKind::OracleCall:
                ++r.oracle_uses[g.label];
                break;
        }
    }
    for (const auto& [name, range] : circuit.registers) {
        int width = range.second - range.first + 1;
        if (name.rfind("control", 0) == 0) r.control_qubits += width;
        if (name == "system") r.ancilla_qubits += width - 1;
    }
    return r;
}

}  // namespace qpc
