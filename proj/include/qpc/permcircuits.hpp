#pragma once

#include "qpc/circuit.hpp"

// Circuit-model constructions: the n-controlled swap routing network,
// the select circuit (control register picks U_i), and the disposition
// circuit (N chained select stages programming U_{i_N} ... U_{i_1}).
//
// Wire layout of all generated circuits: system wires 0..N-1 first
// (wire 0 carries the target qubit), control wires above. Control wire
// j of a register holds bit j of the programmed index.

namespace qpc {

struct RoutingStep {
    int step_index = 0;  // k
    int control_wire = 0;
    std::vector<std::pair<int, int>> swap_pairs;
};

struct DispositionProgram {
    int N = 0;
    std::vector<int> indices;  // i_1 ... i_N, applied in that order
};

// Swap pairs of step k of the n-controlled swap: for every k-bit
// string s, ( s<<(n-k), (s<<(n-k)) | 1<<(n-k-1) ). Step k is driven by
// bit (n-1-k) of the control integer.
std::vector<RoutingStep> routing_steps(int n, int control_wire_base);

// Routing network over n control wires (N..N+n-1) and N = 2^n system
// wires; N-1 ControlledSwaps; control basis state |i> routes wire 0 to
// wire i.
Circuit build_n_controlled_swap(int n);

// S, one oracle call per system wire, then S^-1.
Circuit build_select_circuit(int n);

// N chained select stages sharing the system register, stage t with
// its own control register "control<t+1>" at wires N + t*n.
Circuit build_disposition_circuit(int N);

// Classical semantics of the routing network: pi_i(w) is the wire that
// receives the input of wire w when the control integer is i.
std::vector<int> routing_permutation(int n, int i);

// Output U_i |psi> extracted from system wire 0. The control is a
// basis state so the output is a pure single-qubit state; throws if
// the residual weight elsewhere exceeds tolerance.
StateVector run_select(const std::vector<Unitary2>& unitaries, int i,
                       const StateVector& psi);

StateVector run_disposition(const std::vector<Unitary2>& unitaries,
                            const DispositionProgram& program,
                            const StateVector& psi);

// Full joint output (controls and the whole system register, nothing
// traced out). control_state spans all N*n control wires; control wire
// w of the joint circuit is wire N + w.
StateVector run_disposition_coherent(const std::vector<Unitary2>& unitaries,
                                     const StateVector& control_state,
                                     const StateVector& psi);

// Conditional state of system wire 0 given a control basis value, read
// off a joint output state. The branch weight is the probability of
// the control value; purity is the top eigenvalue of the reduced
// wire-0 density matrix (1 for an unentangled branch). The state phase
// is fixed so its largest component is real-positive.
struct BranchState {
    double weight = 0.0;
    double purity = 0.0;
    StateVector state;  // 1 qubit
};

BranchState conditional_wire0_state(const StateVector& joint, int N, int n,
                                    std::uint64_t control_value);

}  // namespace qpc
