// End-to-end acceptance suite. Each criterion prints a single
// PASS/FAIL line; the process exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "qpc/permcircuits.hpp"
#include "qpc/switchnet.hpp"
#include "qpc/verify.hpp"

using namespace qpc;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double time_limit_s,
               const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > time_limit_s) {
        ok = false;
        note += " (exceeded " + std::to_string(time_limit_s) + " s)";
    }
    std::printf("%s  criterion %2d: %s [%.2f s]%s\n", ok ? "PASS" : "FAIL",
                number, name.c_str(), elapsed, note.c_str());
    if (!ok) ++failures;
}

StateVector random_qubit(std::mt19937_64& rng) {
    return apply_unitary2(basis_state(1, 0), haar_random_unitary(rng()), 0);
}

StateVector matrix_times(const Unitary2& u, const StateVector& psi) {
    StateVector out;
    out.num_qubits = 1;
    out.amps = {u.m[0][0] * psi.amps[0] + u.m[0][1] * psi.amps[1],
                u.m[1][0] * psi.amps[0] + u.m[1][1] * psi.amps[1]};
    return out;
}

std::vector<Unitary2> haar_set(int N, std::mt19937_64& rng) {
    std::vector<Unitary2> us;
    for (int j = 0; j < N; ++j) us.push_back(haar_random_unitary(rng()));
    return us;
}

bool table1_reproduction() {
    // bit order (s_1^(1), s_1^(2), s_2^(2))
    const std::vector<std::vector<int>> expected = {
        {0, 1, 2}, {1, 0, 2}, {1, 0, 2}, {0, 1, 2},
        {0, 2, 1}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
    };
    SwitchNetwork net = build_network(3);
    auto table = permutation_table(net);
    if (table.size() != 8) return false;
    for (const auto& [b, perm] : table)
        if (perm.sigma != expected[b]) return false;
    return true;
}

bool switch_counts() {
    for (int N = 2; N <= 12; ++N)
        if (build_network(N).switch_count() !=
            static_cast<std::size_t>(N * (N - 1) / 2))
            return false;
    return true;
}

bool surjectivity() {
    for (int N = 2; N <= 6; ++N)
        if (!check_all_permutations(build_network(N)).surjective) return false;
    return true;
}

bool resource_formulas() {
    for (int N : {2, 4, 8, 16}) {
        int n = 0;
        while ((1 << n) < N) ++n;

        Circuit ncs = build_n_controlled_swap(n);
        if (count_resources(ncs, false).controlled_swap_count != N - 1) return false;

        ResourceReport sel =
            count_resources(lower_controlled_swaps(build_select_circuit(n)), true);
        if (sel.cnot_count != 16LL * (N - 1)) return false;
        if (sel.single_qubit_count != 18LL * (N - 1)) return false;

        ResourceReport disp = count_resources(
            lower_controlled_swaps(build_disposition_circuit(N)), true);
        if (disp.cnot_count != 16LL * N * (N - 1)) return false;
        if (disp.single_qubit_count != 18LL * N * (N - 1)) return false;
        if (disp.control_qubits != N * n) return false;
        if (disp.ancilla_qubits != N - 1) return false;
    }
    return true;
}

bool select_correctness() {
    std::mt19937_64 rng(101);
    for (int N : {2, 4, 8}) {
        for (int set_idx = 0; set_idx < 20; ++set_idx) {
            std::vector<Unitary2> us = haar_set(N, rng);
            StateVector psi = random_qubit(rng);
            for (int i = 0; i < N; ++i) {
                StateVector got = run_select(us, i, psi);
                StateVector expected = matrix_times(us[i], psi);
                for (int s = 0; s < 2; ++s)
                    if (std::abs(got.amps[s] - expected.amps[s]) > 1e-9) return false;
            }
        }
    }
    return true;
}

bool disposition_correctness() {
    std::mt19937_64 rng(103);
    for (int N : {2, 4}) {
        std::vector<Unitary2> us = haar_set(N, rng);
        std::uniform_int_distribution<int> pick(0, N - 1);
        for (int trial = 0; trial < 100; ++trial) {
            DispositionProgram p{N, {}};
            for (int t = 0; t < N; ++t) p.indices.push_back(pick(rng));
            StateVector psi = random_qubit(rng);
            StateVector got = run_disposition(us, p, psi);
            StateVector expected = matrix_times(product_in_order(us, p.indices), psi);
            for (int s = 0; s < 2; ++s)
                if (std::abs(got.amps[s] - expected.amps[s]) > 1e-9) return false;
        }
    }
    // N=2 exhaustively over all 4 dispositions
    std::vector<Unitary2> us = haar_set(2, rng);
    StateVector psi = random_qubit(rng);
    for (const auto& order : enumerate_dispositions(2)) {
        StateVector got = run_disposition(us, {2, order}, psi);
        StateVector expected = matrix_times(product_in_order(us, order), psi);
        for (int s = 0; s < 2; ++s)
            if (std::abs(got.amps[s] - expected.amps[s]) > 1e-9) return false;
    }
    return true;
}

bool coherent_parallelism() {
    std::mt19937_64 rng(107);
    std::vector<Unitary2> us = haar_set(2, rng);
    StateVector psi = random_qubit(rng);
    StateVector control;
    control.num_qubits = 2;
    control.amps = {0.0, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0.0};
    StateVector joint = run_disposition_coherent(us, control, psi);

    // branch |01> (C2 C1 ordering): (i1, i2) = (1, 0) -> U0 U1 psi
    BranchState b01 = conditional_wire0_state(joint, 2, 1, 1);
    BranchState b10 = conditional_wire0_state(joint, 2, 1, 2);
    auto branch_ok = [&](const BranchState& b, const Unitary2& z) {
        if (std::abs(b.weight - 0.5) > 1e-9) return false;
        if (std::abs(b.purity - 1.0) > 1e-9) return false;
        return std::abs(fidelity(b.state, matrix_times(z, psi)) - 1.0) <= 1e-9;
    };
    return branch_ok(b01, us[0] * us[1]) && branch_ok(b10, us[1] * us[0]);
}

bool coherent_switch() {
    std::mt19937_64 rng(109);
    std::vector<Unitary2> us = haar_set(3, rng);
    StateVector psi = random_qubit(rng);
    SwitchNetwork net = build_network(3);

    StateVector control;
    control.num_qubits = 3;
    control.amps.assign(8, cx(1.0 / std::sqrt(8.0)));
    StateVector got = simulate_coherent(net, us, control, psi);

    for (std::uint64_t b = 0; b < 8; ++b) {
        Permutation sigma = evaluate(net, ControlAssignment::from_value(net, b));
        StateVector z = matrix_times(product_in_order(us, sigma.sigma), psi);
        for (int s = 0; s < 2; ++s) {
            cx expected = z.amps[s] / std::sqrt(8.0);
            if (std::abs(got.amps[(b << 1) | static_cast<unsigned>(s)] - expected) >
                1e-10)
                return false;
        }
    }
    return true;
}

bool query_complexity_contrast() {
    for (int N : {2, 4, 8}) {
        ResourceReport disp = count_resources(build_disposition_circuit(N), false);
        for (int j = 0; j < N; ++j)
            if (disp.oracle_uses[j] != N) return false;
        for (const auto& [label, uses] : uses_per_channel(build_network(N)))
            if (uses != 1) return false;
    }
    return true;
}

bool dense_matrix_agreement() {
    std::mt19937_64 rng(113);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        int q = 2 + static_cast<int>(rng() % 5);  // 2..6
        Circuit c;
        c.num_qubits = q;
        std::uniform_int_distribution<int> wire(0, q - 1);
        for (int g = 0; g < 12; ++g) {
            int kind = static_cast<int>(rng() % 3);
            if (kind == 0 || q < 3) {
                c.gates.push_back(Gate::single(haar_random_unitary(rng()), wire(rng)));
            } else if (kind == 1) {
                int a = wire(rng), b = wire(rng);
                if (a == b) b = (b + 1) % q;
                c.gates.push_back(Gate::cnot(a, b));
            } else {
                int a = wire(rng), b = wire(rng), t = wire(rng);
                while (b == a) b = wire(rng);
                while (t == a || t == b) t = wire(rng);
                c.gates.push_back(Gate::cswap(a, b, t));
            }
        }
        StateVector s;
        s.num_qubits = q;
        s.amps.resize(std::size_t{1} << q);
        for (cx& a : s.amps) a = cx(gauss(rng), gauss(rng));
        double nrm = std::sqrt(s.norm_sq());
        for (cx& a : s.amps) a /= nrm;

        std::vector<cx> via_matrix = mat_vec(dense_circuit_matrix(c, {}), s.amps);
        StateVector fast = simulate(c, s);
        for (std::size_t k = 0; k < via_matrix.size(); ++k)
            if (std::abs(via_matrix[k] - fast.amps[k]) > 1e-10) return false;
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "Table 1 reproduction (N=3)", 1.0, table1_reproduction);
    criterion(2, "switch count N(N-1)/2 for N=2..12", 1.0, switch_counts);
    criterion(3, "surjectivity onto S_N for N=2..6", 10.0, surjectivity);
    criterion(4, "resource formulas for N in {2,4,8,16}", 1.0, resource_formulas);
    criterion(5, "select correctness, Haar sets, N in {2,4,8}", 30.0,
              select_correctness);
    criterion(6, "disposition correctness, N in {2,4}", 30.0,
              disposition_correctness);
    criterion(7, "coherent parallelism branches (N=2)", 1.0, coherent_parallelism);
    criterion(8, "coherent switch vs evaluate+product (N=3)", 1.0, coherent_switch);
    criterion(9, "query complexity N vs 1 per channel", 1.0,
              query_complexity_contrast);
    criterion(10, "dense-matrix oracle agreement, 200 circuits", 60.0,
              dense_matrix_agreement);
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
