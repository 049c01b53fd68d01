#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qpc/permcircuits.hpp"
#include "qpc/switchnet.hpp"
#include "qpc/verify.hpp"
#include "test_util.hpp"

using namespace qpc;
using namespace qpc::testutil;

TEST_CASE("dense matrix of simple circuits") {
    Circuit empty;
    empty.num_qubits = 2;
    DenseMatrix m = dense_circuit_matrix(empty, {});
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            CHECK(m[r][c] == (r == c ? cx(1.0) : cx(0.0)));

    // CNOT(0,1): permutation swapping indices 1 and 3
    Circuit cnot;
    cnot.num_qubits = 2;
    cnot.gates = {Gate::cnot(0, 1)};
    m = dense_circuit_matrix(cnot, {});
    CHECK(m[0][0] == cx(1.0));
    CHECK(m[3][1] == cx(1.0));
    CHECK(m[2][2] == cx(1.0));
    CHECK(m[1][3] == cx(1.0));
    CHECK(m[1][1] == cx(0.0));
}

TEST_CASE("dense matrix agrees with the fast simulator") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 50; ++trial) {
        int q = 2 + static_cast<int>(rng() % 5);  // 2..6 qubits
        Circuit c = random_circuit(q, 15, rng);
        StateVector s = random_state(q, rng);
        std::vector<cx> via_matrix = mat_vec(dense_circuit_matrix(c, {}), s.amps);
        StateVector fast = simulate(c, s);
        for (std::size_t k = 0; k < via_matrix.size(); ++k)
            CHECK(std::abs(via_matrix[k] - fast.amps[k]) < 1e-10);
    }
}

TEST_CASE("dense matrix honors oracle bindings") {
    Circuit c;
    c.num_qubits = 1;
    c.gates = {Gate::oracle(0, 0)};
    OracleBindings bindings{{0, pauli_x()}};
    DenseMatrix m = dense_circuit_matrix(c, bindings);
    CHECK(m[0][1] == cx(1.0));
    CHECK(m[1][0] == cx(1.0));
    CHECK_THROWS_AS(dense_circuit_matrix(c, {}), std::invalid_argument);
}

TEST_CASE("enumerate_dispositions") {
    auto d2 = enumerate_dispositions(2);
    CHECK(d2 == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(enumerate_dispositions(3).size() == 27);
    CHECK(enumerate_dispositions(4).size() == 256);
    CHECK_THROWS_AS(enumerate_dispositions(9), std::length_error);
}

TEST_CASE("enumerate_permutations") {
    CHECK(enumerate_permutations(3).size() == 6);
    CHECK(enumerate_permutations(1) == std::vector<std::vector<int>>{{0}});
    CHECK(enumerate_permutations(5).size() == 120);
    CHECK_THROWS_AS(enumerate_permutations(9), std::length_error);
}

TEST_CASE("cross_model_check") {
    EquivalenceReport r2 = cross_model_check(2, 100, 7);
    CHECK(r2.cases_run == 100);
    CHECK(r2.failures.empty());
    CHECK(r2.max_error <= 1e-9);
    CHECK(r2.circuit_uses_per_channel == 2);
    CHECK(r2.switch_uses_per_channel == 1);

    EquivalenceReport r4 = cross_model_check(4, 25, 7);
    CHECK(r4.failures.empty());
    CHECK(r4.circuit_uses_per_channel == 4);

    CHECK_THROWS_AS(cross_model_check(3, 1, 0), std::invalid_argument);
}

TEST_CASE("oracle closure: switch image lies in S_N") {
    for (int N = 2; N <= 5; ++N) {
        SwitchNetwork net = build_network(N);
        auto all = enumerate_permutations(N);
        std::set<std::vector<int>> universe(all.begin(), all.end());
        std::set<std::vector<int>> image;
        std::uint64_t count = std::uint64_t{1} << net.switch_count();
        for (std::uint64_t b = 0; b < count; ++b) {
            Permutation p = evaluate(net, ControlAssignment::from_value(net, b));
            CHECK(universe.count(p.sigma) == 1);
            image.insert(p.sigma);
        }
        CHECK(image == universe);
    }
}

TEST_CASE("disposition circuit realizes all N^N order lists for N=2") {
    std::mt19937_64 rng(89);
    std::vector<Unitary2> us = {haar_random_unitary(rng()), haar_random_unitary(rng())};
    StateVector psi = random_state(1, rng);
    for (const std::vector<int>& order : enumerate_dispositions(2)) {
        DispositionProgram p{2, order};
        StateVector got = run_disposition(us, p, psi);
        StateVector expected = apply_matrix(product_in_order(us, order), psi);
        CHECK(compare_states(got, expected, 1e-9));
    }
    // permutations are a strict subset of dispositions
    CHECK(enumerate_permutations(2).size() < enumerate_dispositions(2).size());
}
