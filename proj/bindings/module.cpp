#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qpc/circuit.hpp"
#include "qpc/permcircuits.hpp"
#include "qpc/qcore.hpp"
#include "qpc/switchnet.hpp"
#include "qpc/verify.hpp"

namespace py = pybind11;
using namespace qpc;

namespace {

std::vector<cx> unitary_rows(const Unitary2& u) {
    return {u.m[0][0], u.m[0][1], u.m[1][0], u.m[1][1]};
}

Unitary2 unitary_from_rows(const std::vector<cx>& entries) {
    if (entries.size() != 4)
        throw std::invalid_argument("expected 4 entries, row-major");
    Unitary2 u{};
    u.m[0][0] = entries[0];
    u.m[0][1] = entries[1];
    u.m[1][0] = entries[2];
    u.m[1][1] = entries[3];
    if (u.unitarity_error() > 1e-10)
        throw std::invalid_argument("matrix is not unitary within 1e-10");
    return u;
}

}  // namespace

PYBIND11_MODULE(_qpc, m) {
    m.doc() = "Programmable gate-connection circuits and switch networks";

    py::class_<StateVector>(m, "StateVector")
        .def_readonly("num_qubits", &StateVector::num_qubits)
        .def_property_readonly("amplitudes",
                               [](const StateVector& s) { return s.amps; })
        .def("norm_sq", &StateVector::norm_sq);

    py::class_<Unitary2>(m, "Unitary2")
        .def(py::init(&unitary_from_rows))
        .def_property_readonly("entries", &unitary_rows)
        .def("adjoint", &Unitary2::adjoint)
        .def_static("identity", &Unitary2::identity)
        .def("__matmul__",
             [](const Unitary2& a, const Unitary2& b) { return a * b; });

    py::class_<Circuit>(m, "Circuit")
        .def_readonly("num_qubits", &Circuit::num_qubits)
        .def_property_readonly("num_gates",
                               [](const Circuit& c) { return c.gates.size(); });

    py::class_<ResourceReport>(m, "ResourceReport")
        .def_readonly("cnot_count", &ResourceReport::cnot_count)
        .def_readonly("single_qubit_count", &ResourceReport::single_qubit_count)
        .def_readonly("toffoli_count", &ResourceReport::toffoli_count)
        .def_readonly("controlled_swap_count", &ResourceReport::controlled_swap_count)
        .def_readonly("control_qubits", &ResourceReport::control_qubits)
        .def_readonly("ancilla_qubits", &ResourceReport::ancilla_qubits)
        .def_readonly("oracle_uses", &ResourceReport::oracle_uses);

    py::class_<SwitchNetwork>(m, "SwitchNetwork")
        .def_readonly("N", &SwitchNetwork::N)
        .def_property_readonly("switch_count", &SwitchNetwork::switch_count);

    py::class_<Permutation>(m, "Permutation")
        .def_readonly("sigma", &Permutation::sigma)
        .def("product_string", &Permutation::product_string);

    m.def("basis_state", &basis_state, py::arg("num_qubits"), py::arg("index"));
    m.def("compare_states", &compare_states);
    m.def("fidelity", &fidelity);
    m.def("haar_random_unitary", &haar_random_unitary, py::arg("seed"));
    m.def("product_in_order", &product_in_order);

    m.def("build_n_controlled_swap", &build_n_controlled_swap, py::arg("n"));
    m.def("build_select_circuit", &build_select_circuit, py::arg("n"));
    m.def("build_disposition_circuit", &build_disposition_circuit, py::arg("N"));
    m.def("routing_permutation", &routing_permutation, py::arg("n"), py::arg("i"));
    m.def("run_select", &run_select);
    m.def(
        "run_disposition",
        [](const std::vector<Unitary2>& us, const std::vector<int>& program,
           const StateVector& psi) {
            DispositionProgram p{static_cast<int>(program.size()), program};
            return run_disposition(us, p, psi);
        },
        py::arg("unitaries"), py::arg("program"), py::arg("psi"));
    m.def("run_disposition_coherent", &run_disposition_coherent);

    m.def("lower_controlled_swaps", &lower_controlled_swaps);
    m.def("count_resources", &count_resources, py::arg("circuit"),
          py::arg("lower_toffoli") = false);

    m.def("build_network", &build_network, py::arg("N"));
    m.def(
        "evaluate",
        [](const SwitchNetwork& net, const std::vector<int>& bits) {
            std::uint64_t v = 0;
            for (std::size_t w = 0; w < bits.size(); ++w)
                if (bits[w]) v |= (std::uint64_t{1} << w);
            return evaluate(net, ControlAssignment::from_value(net, v));
        },
        py::arg("network"), py::arg("bits"));
    m.def("check_all_permutations", [](const SwitchNetwork& net) {
        return check_all_permutations(net).surjective;
    });
    m.def("simulate_coherent", &simulate_coherent);
    m.def("uses_per_channel", &uses_per_channel);
    m.def("cross_model_check", [](int N, int trials, std::uint64_t seed) {
        EquivalenceReport r = cross_model_check(N, trials, seed);
        return py::make_tuple(r.cases_run, r.max_error, r.failures);
    });
}
