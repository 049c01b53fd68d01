#include "qpc/permcircuits.hpp"

#include <array>
#include <cmath>

namespace qpc {

namespace {

int log2_exact(int N) {
    int n = 0;
    while ((1 << n) < N) ++n;
    if ((1 << n) != N)
        throw std::invalid_argument("N must be a power of two");
    return n;
}

}  // namespace

std::vector<RoutingStep> routing_steps(int n, int control_wire_base) {
    if (n < 1) throw std::invalid_argument("routing_steps: n must be >= 1");
    std::vector<RoutingStep> steps;
    steps.reserve(n);
    for (int k = 0; k < n; ++k) {
        RoutingStep step;
        step.step_index = k;
        // step k is driven by control bit (n-1-k): MSB first
        step.control_wire = control_wire_base + (n - 1 - k);
        for (int s = 0; s < (1 << k); ++s) {
            int a = s << (n - k);
            int b = a | (1 << (n - k - 1));
            step.swap_pairs.emplace_back(a, b);
        }
        steps.push_back(std::move(step));
    }
    return steps;
}

Circuit build_n_controlled_swap(int n) {
    if (n < 1) throw std::invalid_argument("build_n_controlled_swap: n >= 1 required");
    int N = 1 << n;
    Circuit c;
    c.num_qubits = N + n;
    c.registers["system"] = {0, N - 1};
    c.registers["control"] = {N, N + n - 1};
    for (const RoutingStep& step : routing_steps(n, N))
        for (auto [a, b] : step.swap_pairs)
            c.gates.push_back(Gate::cswap(step.control_wire, a, b));
    return c;
}

Circuit build_select_circuit(int n) {
    Circuit s = build_n_controlled_swap(n);
    int N = 1 << n;
    Circuit c;
    c.num_qubits = s.num_qubits;
    c.registers = s.registers;
    c.gates = s.gates;
    for (int j = 0; j < N; ++j) c.gates.push_back(Gate::oracle(j, j));
    Circuit sinv = invert(s);
    c.gates.insert(c.gates.end(), sinv.gates.begin(), sinv.gates.end());
    return c;
}

Circuit build_disposition_circuit(int N) {
    int n = log2_exact(N);
    Circuit stage = build_select_circuit(n);
    Circuit c;
    c.num_qubits = N + N * n;
    c.registers["system"] = {0, N - 1};
    for (int t = 0; t < N; ++t) {
        int base = N + t * n;
        c.registers["control" + std::to_string(t + 1)] = {base, base + n - 1};
        for (Gate g : stage.gates) {
            for (int& w : g.wires)
                if (w >= N) w = base + (w - N);
            c.gates.push_back(std::move(g));
        }
    }
    return c;
}

std::vector<int> routing_permutation(int n, int i) {
    if (i < 0 || i >= (1 << n))
        throw std::invalid_argument("routing_permutation: i out of range");
    int N = 1 << n;
    // perm[w] = wire currently holding the token that started on wire w
    std::vector<int> pos(N);
    for (int w = 0; w < N; ++w) pos[w] = w;
    for (const RoutingStep& step : routing_steps(n, N)) {
        int bit = (i >> (step.control_wire - N)) & 1;
        if (!bit) continue;
        for (auto [a, b] : step.swap_pairs)
            for (int& p : pos)
                if (p == a) p = b;
                else if (p == b) p = a;
    }
    return pos;
}

namespace {

StateVector embed_input(int num_qubits, int N, std::uint64_t control_value,
                        const StateVector& psi) {
    StateVector in;
    in.num_qubits = num_qubits;
    in.amps.assign(std::size_t{1} << num_qubits, cx(0.0));
    std::uint64_t base = control_value << N;
    in.amps[base] = psi.amps[0];
    in.amps[base | 1] = psi.amps[1];
    return in;
}

// Ancilla wires keep residues (the unitaries applied to their |0>
// inputs while routed), so the branch is a product state
// (wire-0 state) (x) residues. Dividing out the residue amplitudes
// recovers the wire-0 state exactly, phase included; the factorization
// is validated against every ancilla configuration.
StateVector extract_wire0(const StateVector& out, int N, std::uint64_t control_value,
                          const std::vector<std::array<cx, 2>>& residues) {
    std::uint64_t base = control_value << N;
    auto residue_amp = [&](std::uint64_t r) {
        cx amp = 1.0;
        for (int j = 0; j < N - 1; ++j) amp *= residues[j][(r >> j) & 1u];
        return amp;
    };

    std::uint64_t best = 0;
    double best_mag = -1.0;
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << (N - 1)); ++r) {
        double mag = std::abs(residue_amp(r));
        if (mag > best_mag) {
            best_mag = mag;
            best = r;
        }
    }

    StateVector v;
    v.num_qubits = 1;
    cx ref = residue_amp(best);
    v.amps = {out.amps[base | (best << 1)] / ref,
              out.amps[base | (best << 1) | 1] / ref};
    if (std::abs(v.norm_sq() - 1.0) > 1e-9)
        throw std::runtime_error("wire-0 extraction is not normalized");
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << (N - 1)); ++r) {
        cx amp = residue_amp(r);
        for (int b = 0; b < 2; ++b)
            if (std::abs(out.amps[base | (r << 1) | static_cast<unsigned>(b)] -
                         v.amps[b] * amp) > 1e-9)
                throw std::runtime_error("output entangled beyond wire 0");
    }
    return v;
}

// Residue on output wire j of one select stage programmed with i:
// the stage applies U_{pi_i(j)} to wire j's content.
std::vector<std::vector<int>> stage_channel_map(int n, const std::vector<int>& program) {
    int N = 1 << n;
    std::vector<std::vector<int>> applied(N);
    for (int idx : program) {
        std::vector<int> pi = routing_permutation(n, idx);
        for (int j = 0; j < N; ++j) applied[j].push_back(pi[j]);
    }
    return applied;
}

std::vector<std::array<cx, 2>> residue_states(
    const std::vector<Unitary2>& unitaries, int n, const std::vector<int>& program) {
    int N = 1 << n;
    std::vector<std::vector<int>> applied = stage_channel_map(n, program);
    std::vector<std::array<cx, 2>> residues;
    for (int j = 1; j < N; ++j) {
        Unitary2 u = product_in_order(unitaries, applied[j]);
        residues.push_back({u.m[0][0], u.m[1][0]});  // column 0: U|0>
    }
    return residues;
}

}  // namespace

StateVector run_select(const std::vector<Unitary2>& unitaries, int i,
                       const StateVector& psi) {
    int n = log2_exact(static_cast<int>(unitaries.size()));
    int N = 1 << n;
    if (i < 0 || i >= N) throw std::invalid_argument("run_select: i out of range");
    if (psi.num_qubits != 1) throw std::invalid_argument("run_select: psi must be 1 qubit");
    Circuit c = build_select_circuit(n);
    OracleBindings bindings;
    for (int j = 0; j < N; ++j) bindings[j] = unitaries[j];
    StateVector out = simulate(c, embed_input(c.num_qubits, N, i, psi), bindings);
    return extract_wire0(out, N, i, residue_states(unitaries, n, {i}));
}

StateVector run_disposition(const std::vector<Unitary2>& unitaries,
                            const DispositionProgram& program,
                            const StateVector& psi) {
    int n = log2_exact(static_cast<int>(unitaries.size()));
    int N = 1 << n;
    if (program.N != N || static_cast<int>(program.indices.size()) != N)
        throw std::invalid_argument("run_disposition: program length must equal N");
    for (int idx : program.indices)
        if (idx < 0 || idx >= N)
            throw std::invalid_argument("run_disposition: program index out of range");
    if (psi.num_qubits != 1)
        throw std::invalid_argument("run_disposition: psi must be 1 qubit");

    std::uint64_t c = 0;
    for (int t = 0; t < N; ++t)
        c |= static_cast<std::uint64_t>(program.indices[t]) << (t * n);

    Circuit circ = build_disposition_circuit(N);
    OracleBindings bindings;
    for (int j = 0; j < N; ++j) bindings[j] = unitaries[j];
    StateVector out = simulate(circ, embed_input(circ.num_qubits, N, c, psi), bindings);
    return extract_wire0(out, N, c, residue_states(unitaries, n, program.indices));
}

StateVector run_disposition_coherent(const std::vector<Unitary2>& unitaries,
                                     const StateVector& control_state,
                                     const StateVector& psi) {
    int n = log2_exact(static_cast<int>(unitaries.size()));
    int N = 1 << n;
    if (control_state.num_qubits != N * n)
        throw std::invalid_argument("run_disposition_coherent: control register size");
    if (psi.num_qubits != 1)
        throw std::invalid_argument("run_disposition_coherent: psi must be 1 qubit");

    Circuit circ = build_disposition_circuit(N);
    StateVector in;
    in.num_qubits = circ.num_qubits;
    in.amps.assign(std::size_t{1} << circ.num_qubits, cx(0.0));
    for (std::uint64_t c = 0; c < control_state.amps.size(); ++c) {
        if (control_state.amps[c] == cx(0.0)) continue;
        in.amps[(c << N) | 0] = control_state.amps[c] * psi.amps[0];
        in.amps[(c << N) | 1] = control_state.amps[c] * psi.amps[1];
    }
    OracleBindings bindings;
    for (int j = 0; j < N; ++j) bindings[j] = unitaries[j];
    return simulate(circ, in, bindings);
}

BranchState conditional_wire0_state(const StateVector& joint, int N, int n,
                                    std::uint64_t control_value) {
    if (joint.num_qubits != N + N * n)
        throw std::invalid_argument("conditional_wire0_state: joint size mismatch");
    std::uint64_t dim_sys = std::uint64_t{1} << N;
    std::uint64_t base = control_value << N;

    BranchState r;
    r.state = basis_state(1, 0);

    // reduced wire-0 density matrix of the branch
    double p00 = 0.0, p11 = 0.0;
    cx p01 = 0.0;
    for (std::uint64_t rest = 0; rest < dim_sys / 2; ++rest) {
        cx a0 = joint.amps[base | (rest << 1)];
        cx a1 = joint.amps[base | (rest << 1) | 1];
        p00 += std::norm(a0);
        p11 += std::norm(a1);
        p01 += a0 * std::conj(a1);
    }
    r.weight = p00 + p11;
    if (r.weight < 1e-30) return r;
    p00 /= r.weight;
    p11 /= r.weight;
    p01 /= r.weight;

    double mid = 0.5 * (p00 + p11);
    double rad = std::sqrt(0.25 * (p00 - p11) * (p00 - p11) + std::norm(p01));
    r.purity = mid + rad;

    cx v0, v1;
    if (std::abs(p01) > 1e-15) {
        v0 = p01;
        v1 = cx(r.purity - p00);
    } else if (p00 >= p11) {
        v0 = 1.0;
        v1 = 0.0;
    } else {
        v0 = 0.0;
        v1 = 1.0;
    }
    double nrm = std::sqrt(std::norm(v0) + std::norm(v1));
    v0 /= nrm;
    v1 /= nrm;
    cx big = (std::abs(v0) >= std::abs(v1)) ? v0 : v1;
    cx phase = std::conj(big) / std::abs(big);
    r.state.amps = {v0 * phase, v1 * phase};
    return r;
}

}  // namespace qpc
