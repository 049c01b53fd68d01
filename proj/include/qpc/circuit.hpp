#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpc/qcore.hpp"

// Gate-list intermediate representation, simulation, inversion,
// controlled-swap lowering and resource accounting.

namespace qpc {

enum class GateKind { SingleQubit, CNOT, Toffoli, ControlledSwap, OracleCall };

struct Gate {
    GateKind kind;
    // SingleQubit: wires = {wire}
    // CNOT: {control, target}
    // Toffoli: {control1, control2, target}
    // ControlledSwap: {control, wireA, wireB}
    // OracleCall: {wire}
    std::vector<int> wires;
    Unitary2 unitary = Unitary2::identity();  // SingleQubit only
    int label = -1;                           // OracleCall only

    static Gate single(const Unitary2& u, int wire);
    static Gate cnot(int control, int target);
    static Gate toffoli(int c1, int c2, int target);
    static Gate cswap(int control, int a, int b);
    static Gate oracle(int label, int wire);
};

// Named wire ranges, inclusive [lo, hi]. Registers whose name starts
// with "control" count as control qubits; the "system" register holds
// the target qubit on its first wire and ancillas on the rest.
using RegisterMap = std::map<std::string, std::pair<int, int>>;

struct Circuit {
    int num_qubits = 0;
    std::vector<Gate> gates;
    RegisterMap registers;
};

struct ResourceReport {
    long long cnot_count = 0;
    long long single_qubit_count = 0;
    long long toffoli_count = 0;
    long long controlled_swap_count = 0;
    int control_qubits = 0;
    int ancilla_qubits = 0;
    std::map<int, long long> oracle_uses;
};

// Throws on bad wires or duplicate wires within the gate.
void validate_gate(const Gate& gate, int num_qubits);

StateVector apply_gate(const StateVector& state, const Gate& gate);

using OracleBindings = std::map<int, Unitary2>;

// Applies gates in list order; OracleCall(l, w) applies the bound
// unitary on wire w. Throws on unbound labels.
StateVector simulate(const Circuit& circuit, const StateVector& input,
                     const OracleBindings& bindings = {});

// Reversed gate list with each gate inverted. OracleCall gates cannot
// be inverted (oracle adjoints are not a resource) and throw.
Circuit invert(const Circuit& circuit);

// Every ControlledSwap(c, a, b) becomes CNOT(b,a), Toffoli(c,a,b), CNOT(b,a).
Circuit lower_controlled_swaps(const Circuit& circuit);

// When lower_toffoli is set each Toffoli contributes 6 CNOTs and 9
// single-qubit operations to the counts (counting only). Oracle calls
// are tallied separately and excluded from single_qubit_count.
ResourceReport count_resources(const Circuit& circuit, bool lower_toffoli);

}  // namespace qpc
