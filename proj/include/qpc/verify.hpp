#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qpc/circuit.hpp"

// Brute-force oracles kept independent of the fast simulation path:
// dense circuit matrices built from per-gate truth tables, exhaustive
// enumeration, and the circuit-vs-switch equivalence check.

namespace qpc {

struct EquivalenceReport {
    long long cases_run = 0;
    double max_error = 0.0;
    std::vector<std::string> failures;
    long long circuit_uses_per_channel = 0;
    long long switch_uses_per_channel = 0;
};

using DenseMatrix = std::vector<std::vector<cx>>;

// Explicit 2^q x 2^q product of per-gate embeddings, later gates
// multiplying on the left. Limited to q <= 12.
DenseMatrix dense_circuit_matrix(const Circuit& circuit, const OracleBindings& bindings);

std::vector<cx> mat_vec(const DenseMatrix& m, const std::vector<cx>& v);

// All N^N index lists of length N, lexicographic. Guarded at N^N <= 1e6.
std::vector<std::vector<int>> enumerate_dispositions(int N);

// All N! bijections, lexicographic. N <= 8.
std::vector<std::vector<int>> enumerate_permutations(int N);

// Random Haar sets and random switch assignments: the permutation read
// off the switch network, replayed as a disposition program, must give
// the same wire-0 state as the direct matrix product.
EquivalenceReport cross_model_check(int N, int trials, std::uint64_t seed);

}  // namespace qpc
