// Command-line front end: generation, simulation, verification and
// resource reporting with JSON payloads on stdout.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/input error,
// 3 resource limit.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "qpc/json_io.hpp"
#include "qpc/permcircuits.hpp"
#include "qpc/switchnet.hpp"
#include "qpc/verify.hpp"

using namespace qpc;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const json& payload, const std::string& output_path) {
    std::string text = payload.dump(2);
    if (!output_path.empty()) {
        std::ofstream out(output_path);
        if (!out) throw UsageError("cannot open output file: " + output_path);
        out << text << "\n";
    } else {
        std::cout << text << "\n";
    }
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("parse error in ") + path + ": " + e.what());
    }
    return j;
}

bool is_power_of_two(int N) { return N >= 1 && (N & (N - 1)) == 0; }

int log2_int(int N) {
    int n = 0;
    while ((1 << n) < N) ++n;
    return n;
}

// Table of the N=3 network: assignment bit w drives the w-th switch in
// (k, i) order, i.e. (bit0, bit1, bit2) = (s_1^(1), s_1^(2), s_2^(2)).
const std::vector<std::vector<int>> kTable1Sigma = {
    {0, 1, 2}, {1, 0, 2}, {1, 0, 2}, {0, 1, 2},
    {0, 2, 1}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
};

int cmd_verify_table(int N, const std::string& output_path) {
    if (N < 2 || N > 8) throw UsageError("verify-table requires 2 <= N <= 8");
    SwitchNetwork net = build_network(N);

    json rows = json::array();
    std::map<Permutation, long long> histogram;
    bool table1_match = true;
    for (const auto& [b, perm] : permutation_table(net)) {
        json bits = json::array();
        for (std::size_t w = 0; w < net.switch_count(); ++w)
            bits.push_back(static_cast<int>((b >> w) & 1u));
        rows.push_back(json{{"assignment", bits},
                            {"sigma", perm.sigma},
                            {"product", perm.product_string()}});
        ++histogram[perm];
        if (N == 3 && perm.sigma != kTable1Sigma[b]) table1_match = false;
    }
    SurjectivityReport report = check_all_permutations(net);

    json payload{{"N", N},
                 {"rows", rows},
                 {"assignments", rows.size()},
                 {"distinct_permutations", histogram.size()},
                 {"surjective", report.surjective}};
    if (N == 3) payload["table1_match"] = table1_match;
    emit(payload, output_path);
    bool pass = report.surjective && table1_match;
    return pass ? kExitOk : kExitVerifyFail;
}

int cmd_resources(const std::string& task, int N, const std::string& output_path) {
    json payload{{"task", task}, {"N", N}};
    bool match = true;
    if (task == "select" || task == "disposition") {
        if (!is_power_of_two(N) || N < 2)
            throw UsageError("circuit tasks require N a power of two, N >= 2");
        int n = log2_int(N);
        Circuit c = task == "select" ? build_select_circuit(n)
                                     : build_disposition_circuit(N);
        ResourceReport counted = count_resources(lower_controlled_swaps(c), true);
        long long copies = task == "select" ? 1 : N;
        json expected{{"cnot_count", 16LL * copies * (N - 1)},
                      {"single_qubit_count", 18LL * copies * (N - 1)},
                      {"control_qubits", task == "select" ? n : N * n},
                      {"ancilla_qubits", N - 1},
                      {"oracle_uses_per_channel", copies}};
        payload["counted"] = to_json(counted);
        payload["expected"] = expected;
        match = counted.cnot_count == expected["cnot_count"].get<long long>() &&
                counted.single_qubit_count ==
                    expected["single_qubit_count"].get<long long>() &&
                counted.control_qubits == expected["control_qubits"].get<int>() &&
                counted.ancilla_qubits == expected["ancilla_qubits"].get<int>();
        for (int j = 0; j < N; ++j)
            match = match && counted.oracle_uses[j] == copies;
    } else if (task == "switch") {
        if (N < 2) throw UsageError("switch task requires N >= 2");
        SwitchNetwork net = build_network(N);
        auto uses = uses_per_channel(net);
        json uses_json = json::object();
        for (const auto& [label, count] : uses) {
            uses_json[std::to_string(label)] = count;
            match = match && count == 1;
        }
        payload["counted"] = json{{"switches", net.switch_count()},
                                  {"uses_per_channel", uses_json}};
        payload["expected"] = json{{"switches", N * (N - 1) / 2},
                                   {"uses_per_channel", 1}};
        match = match &&
                static_cast<long long>(net.switch_count()) == 1LL * N * (N - 1) / 2;
    } else {
        throw UsageError("unknown task: " + task);
    }
    payload["match"] = match;
    emit(payload, output_path);
    return match ? kExitOk : kExitVerifyFail;
}

std::vector<Unitary2> load_unitaries(const std::string& path) {
    json j = load_json(path);
    if (!j.is_array() || j.empty()) throw UsageError("unitaries file must be a non-empty array");
    std::vector<Unitary2> us;
    try {
        for (const auto& e : j) us.push_back(unitary2_from_json(e));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return us;
}

// General N: pad the channel set with identities to the next power of
// two. Strict mode rejects program indices that name a padded label.
std::vector<Unitary2> pad_to_power_of_two(std::vector<Unitary2> us) {
    while (!is_power_of_two(static_cast<int>(us.size())))
        us.push_back(Unitary2::identity());
    return us;
}

int cmd_simulate(const std::string& model, const std::string& spec_path,
                 const std::string& unitaries_path, const std::string& input_path,
                 bool branches, bool strict, const std::string& output_path) {
    json spec = load_json(spec_path);
    json input = load_json(input_path);
    std::vector<Unitary2> unitaries = load_unitaries(unitaries_path);
    json payload{{"model", model}};

    auto get_state = [&](const json& j, const char* key) {
        try {
            return state_from_json(j.at(key));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        } catch (const json::out_of_range&) {
            throw UsageError(std::string("input file missing \"") + key + "\"");
        }
    };

    if (model == "switch") {
        int N = spec.value("N", static_cast<int>(unitaries.size()));
        if (N < 2 || static_cast<int>(unitaries.size()) < N)
            throw UsageError("switch model needs N >= 2 unitaries");
        SwitchNetwork net = build_network(N);
        int m = static_cast<int>(net.switch_count());
        if (m > 20) throw ResourceError("control register too large");
        unitaries.resize(N);

        StateVector control;
        if (spec.contains("assignment")) {
            ControlAssignment a = assignment_from_json(net, spec.at("assignment"));
            control = basis_state(m, a.value(net));
        } else if (spec.contains("control_state")) {
            control = state_from_json(spec.at("control_state"));
            if (control.num_qubits != m)
                throw UsageError("control_state must cover one qubit per switch");
        } else {
            throw UsageError("switch spec needs \"assignment\" or \"control_state\"");
        }
        StateVector psi = get_state(input, "psi");
        if (psi.num_qubits != 1) throw UsageError("psi must be a 1-qubit state");

        StateVector out = simulate_coherent(net, unitaries, control, psi);
        payload["num_qubits"] = out.num_qubits;
        payload["state"] = to_json(out);
        if (branches) {
            json branch_list = json::array();
            for (std::uint64_t b = 0; b < control.amps.size(); ++b) {
                if (std::abs(control.amps[b]) < 1e-15) continue;
                Permutation sigma =
                    evaluate(net, ControlAssignment::from_value(net, b));
                Unitary2 z = product_in_order(unitaries, sigma.sigma);
                StateVector bs = apply_unitary2(get_state(input, "psi"), z, 0);
                branch_list.push_back(json{{"control", b},
                                           {"sigma", sigma.sigma},
                                           {"product", sigma.product_string()},
                                           {"state", to_json(bs)}});
            }
            payload["branches"] = branch_list;
        }
        emit(payload, output_path);
        return kExitOk;
    }

    if (model != "circuit") throw UsageError("model must be circuit or switch");

    if (spec.contains("gates")) {
        Circuit c;
        try {
            c = circuit_from_json(spec);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
        if (c.num_qubits > 24) throw ResourceError("circuit too large to simulate");
        StateVector in = get_state(input, "state");
        if (in.num_qubits != c.num_qubits)
            throw UsageError("input state size does not match the circuit");
        OracleBindings bindings;
        for (std::size_t j = 0; j < unitaries.size(); ++j)
            bindings[static_cast<int>(j)] = unitaries[j];
        StateVector out;
        try {
            out = simulate(c, in, bindings);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        payload["num_qubits"] = out.num_qubits;
        payload["state"] = to_json(out);
        emit(payload, output_path);
        return kExitOk;
    }

    int requested = static_cast<int>(unitaries.size());
    std::vector<Unitary2> padded = pad_to_power_of_two(unitaries);
    int N = static_cast<int>(padded.size());
    int n = log2_int(N);
    if (N + N * n > 24) throw ResourceError("disposition circuit too large");

    StateVector psi = get_state(input, "psi");
    if (psi.num_qubits != 1) throw UsageError("psi must be a 1-qubit state");

    if (spec.contains("program")) {
        DispositionProgram program;
        try {
            program = program_from_json(spec.at("program"));
        } catch (const json::exception& e) {
            throw UsageError(e.what());
        }
        // padded programs still have length Npad
        if (program.N == requested && requested != N) {
            program.N = N;
            program.indices.resize(N, 0);
        }
        if (strict)
            for (int idx : program.indices)
                if (idx >= requested)
                    throw UsageError("program references a padded channel label");
        StateVector out;
        try {
            out = run_disposition(padded, program, psi);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        payload["num_qubits"] = 1;
        payload["state"] = to_json(out);
        emit(payload, output_path);
        return kExitOk;
    }

    if (spec.contains("control_state")) {
        StateVector control = state_from_json(spec.at("control_state"));
        if (control.num_qubits != N * n)
            throw UsageError("control_state must cover all control registers");
        StateVector out = run_disposition_coherent(padded, control, psi);
        payload["num_qubits"] = out.num_qubits;
        payload["state"] = to_json(out);
        if (branches) {
            json branch_list = json::array();
            for (std::uint64_t c = 0; c < control.amps.size(); ++c) {
                if (std::abs(control.amps[c]) < 1e-15) continue;
                BranchState bs = conditional_wire0_state(out, N, n, c);
                branch_list.push_back(json{{"control", c},
                                           {"weight", bs.weight},
                                           {"purity", bs.purity},
                                           {"wire0_state", to_json(bs.state)}});
            }
            payload["branches"] = branch_list;
        }
        emit(payload, output_path);
        return kExitOk;
    }

    throw UsageError("circuit spec needs \"gates\", \"program\" or \"control_state\"");
}

int cmd_compare(int N, int trials, std::uint64_t seed, const std::string& output_path) {
    if (N != 2 && N != 4)
        throw UsageError("compare requires N in {2, 4} (circuit model is power-of-two only)");
    EquivalenceReport r = cross_model_check(N, trials, seed);
    json payload{{"N", N},
                 {"trials", trials},
                 {"seed", seed},
                 {"cases_run", r.cases_run},
                 {"max_error", r.max_error},
                 {"failures", r.failures},
                 {"uses_per_channel",
                  json{{"circuit", r.circuit_uses_per_channel},
                       {"switch", r.switch_uses_per_channel}}}};
    emit(payload, output_path);
    return r.failures.empty() ? kExitOk : kExitVerifyFail;
}

int cmd_export(const std::string& task, int N, const std::string& output_path) {
    json payload;
    if (task == "network") {
        if (N < 2) throw UsageError("network export requires N >= 2");
        payload = to_json(build_network(N));
    } else {
        if (!is_power_of_two(N) || N < 2)
            throw UsageError("circuit export requires N a power of two, N >= 2");
        int n = log2_int(N);
        if (task == "ncswap")
            payload = to_json(build_n_controlled_swap(n));
        else if (task == "select")
            payload = to_json(build_select_circuit(n));
        else if (task == "disposition")
            payload = to_json(build_disposition_circuit(N));
        else
            throw UsageError("unknown export task: " + task);
    }
    emit(payload, output_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Programmable gate-connection circuits and switch networks"};
    app.require_subcommand(1);

    int n_value = 3;
    int trials = 100;
    std::uint64_t seed = 7;
    std::string task, model, spec_path, unitaries_path, input_path, output_path;
    bool branches = false, strict = false;

    auto* verify_table = app.add_subcommand("verify-table",
                                            "Enumerate the switch-network permutation table");
    verify_table->add_option("--n", n_value, "Number of channels")->required();
    verify_table->add_option("--output", output_path, "Write the payload to a file");

    auto* resources = app.add_subcommand("resources", "Count gates, qubits and oracle uses");
    resources->add_option("--task", task, "select | disposition | switch")->required();
    resources->add_option("--n", n_value, "Number of channels")->required();
    resources->add_option("--output", output_path, "Write the payload to a file");

    auto* simulate_cmd = app.add_subcommand("simulate", "Simulate a circuit or network");
    simulate_cmd->add_option("--model", model, "circuit | switch")->required();
    simulate_cmd->add_option("--spec", spec_path, "Model spec JSON")->required();
    simulate_cmd->add_option("--unitaries", unitaries_path, "Channel set JSON")->required();
    simulate_cmd->add_option("--input", input_path, "Input state JSON")->required();
    simulate_cmd->add_flag("--branches", branches, "Emit per-control-branch states");
    simulate_cmd->add_flag("--strict", strict, "Reject padded channel labels");
    simulate_cmd->add_option("--output", output_path, "Write the payload to a file");

    auto* compare = app.add_subcommand("compare", "Circuit model vs switch network");
    compare->add_option("--n", n_value, "Number of channels")->required();
    compare->add_option("--trials", trials, "Random trials");
    compare->add_option("--seed", seed, "RNG seed");
    compare->add_option("--output", output_path, "Write the payload to a file");

    auto* export_cmd = app.add_subcommand("export", "Emit circuit or network JSON");
    export_cmd->add_option("--task", task, "ncswap | select | disposition | network")
        ->required();
    export_cmd->add_option("--n", n_value, "Number of channels")->required();
    export_cmd->add_option("--output", output_path, "Write the payload to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (verify_table->parsed()) return cmd_verify_table(n_value, output_path);
        if (resources->parsed()) return cmd_resources(task, n_value, output_path);
        if (simulate_cmd->parsed())
            return cmd_simulate(model, spec_path, unitaries_path, input_path,
                                branches, strict, output_path);
        if (compare->parsed()) return cmd_compare(n_value, trials, seed, output_path);
        if (export_cmd->parsed()) return cmd_export(task, n_value, output_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
