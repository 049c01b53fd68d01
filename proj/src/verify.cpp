#include "qpc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qpc/permcircuits.hpp"
#include "qpc/switchnet.hpp"

namespace qpc {

namespace {

// Column action of a single gate on a basis index, from the gate truth
// tables alone (no shared kernel with the fast simulator).
void apply_gate_dense(const Gate& gate, const OracleBindings& bindings,
                      DenseMatrix& m) {
    std::size_t dim = m.size();
    switch (gate.kind) {
        case GateKind::SingleQubit:
        case GateKind::OracleCall: {
            Unitary2 u = gate.unitary;
            if (gate.kind == GateKind::OracleCall) {
                auto it = bindings.find(gate.label);
                if (it == bindings.end())
                    throw std::invalid_argument("dense_circuit_matrix: unbound oracle");
                u = it->second;
            }
            std::size_t wm = std::size_t{1} << gate.wires[0];
            for (std::size_t col = 0; col < dim; ++col)
                for (std::size_t row = 0; row < dim; ++row) {
                    if (!(row & wm)) {
                        cx r0 = m[row][col];
                        cx r1 = m[row | wm][col];
                        m[row][col] = u.m[0][0] * r0 + u.m[0][1] * r1;
                        m[row | wm][col] = u.m[1][0] * r0 + u.m[1][1] * r1;
                    }
                }
            break;
        }
        case GateKind::CNOT: {
            std::size_t cm = std::size_t{1} << gate.wires[0];
            std::size_t tm = std::size_t{1} << gate.wires[1];
            for (std::size_t col = 0; col < dim; ++col)
                for (std::size_t row = 0; row < dim; ++row)
                    if ((row & cm) && !(row & tm))
                        std::swap(m[row][col], m[row | tm][col]);
            break;
        }
        case GateKind::Toffoli: {
            std::size_t cm = (std::size_t{1} << gate.wires[0]) |
                             (std::size_t{1} << gate.wires[1]);
            std::size_t tm = std::size_t{1} << gate.wires[2];
            for (std::size_t col = 0; col < dim; ++col)
                for (std::size_t row = 0; row < dim; ++row)
                    if (((row & cm) == cm) && !(row & tm))
                        std::swap(m[row][col], m[row | tm][col]);
            break;
        }
        case GateKind::ControlledSwap: {
            std::size_t cm = std::size_t{1} << gate.wires[0];
            std::size_t am = std::size_t{1} << gate.wires[1];
            std::size_t bm = std::size_t{1} << gate.wires[2];
            for (std::size_t col = 0; col < dim; ++col)
                for (std::size_t row = 0; row < dim; ++row)
                    if ((row & cm) && (row & am) && !(row & bm))
                        std::swap(m[row][col], m[(row & ~am) | bm][col]);
            break;
        }
    }
}

}  // namespace

DenseMatrix dense_circuit_matrix(const Circuit& circuit, const OracleBindings& bindings) {
    if (circuit.num_qubits > 12)
        throw std::length_error("dense_circuit_matrix: more than 12 qubits");
    std::size_t dim = std::size_t{1} << circuit.num_qubits;
    DenseMatrix m(dim, std::vector<cx>(dim, cx(0.0)));
    for (std::size_t d = 0; d < dim; ++d) m[d][d] = 1.0;
    for (const Gate& g : circuit.gates) {
        validate_gate(g, circuit.num_qubits);
        apply_gate_dense(g, bindings, m);
    }
    return m;
}

std::vector<cx> mat_vec(const DenseMatrix& m, const std::vector<cx>& v) {
    std::vector<cx> out(m.size(), cx(0.0));
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
    return out;
}

std::vector<std::vector<int>> enumerate_dispositions(int N) {
    double total = std::pow(static_cast<double>(N), N);
    if (total > 1e6)
        throw std::length_error("enumerate_dispositions: N^N exceeds 1e6");
    std::vector<std::vector<int>> out;
    std::vector<int> cur(N, 0);
    while (true) {
        out.push_back(cur);
        int pos = N - 1;
        while (pos >= 0 && cur[pos] == N - 1) cur[pos--] = 0;
        if (pos < 0) break;
        ++cur[pos];
    }
    return out;
}

std::vector<std::vector<int>> enumerate_permutations(int N) {
    if (N > 8) throw std::length_error("enumerate_permutations: N > 8");
    std::vector<int> cur(N);
    for (int j = 0; j < N; ++j) cur[j] = j;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(cur);
    } while (std::next_permutation(cur.begin(), cur.end()));
    return out;
}

EquivalenceReport cross_model_check(int N, int trials, std::uint64_t seed) {
    if (N != 2 && N != 4)
        throw std::invalid_argument("cross_model_check: circuit model requires N in {2, 4}");
    SwitchNetwork net = build_network(N);
    std::mt19937_64 rng(seed);

    EquivalenceReport report;
    report.circuit_uses_per_channel = N;
    for (const auto& [label, uses] : uses_per_channel(net))
        report.switch_uses_per_channel = std::max(report.switch_uses_per_channel, uses);

    for (int t = 0; t < trials; ++t) {
        std::vector<Unitary2> set;
        for (int j = 0; j < N; ++j) set.push_back(haar_random_unitary(rng()));
        StateVector psi = apply_unitary2(basis_state(1, 0), haar_random_unitary(rng()), 0);

        std::uint64_t bits = rng() & ((std::uint64_t{1} << net.switch_count()) - 1);
        Permutation sigma = evaluate(net, ControlAssignment::from_value(net, bits));

        Unitary2 z = product_in_order(set, sigma.sigma);
        StateVector expected;
        expected.num_qubits = 1;
        expected.amps = {z.m[0][0] * psi.amps[0] + z.m[0][1] * psi.amps[1],
                         z.m[1][0] * psi.amps[0] + z.m[1][1] * psi.amps[1]};

        DispositionProgram program{N, sigma.sigma};
        StateVector got = run_disposition(set, program, psi);

        double err = 0.0;
        for (int s = 0; s < 2; ++s)
            err = std::max(err, std::abs(got.amps[s] - expected.amps[s]));
        report.max_error = std::max(report.max_error, err);
        ++report.cases_run;
        if (err > 1e-9)
            report.failures.push_back("trial " + std::to_string(t) + " assignment " +
                                      std::to_string(bits) + " error " +
                                      std::to_string(err));
    }
    return report;
}

}  // namespace qpc
