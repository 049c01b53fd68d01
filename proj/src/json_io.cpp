#include "qpc/json_io.hpp"

#include <nlohmann/json.hpp>

namespace qpc {

namespace {

json cx_to_json(const cx& z) { return json::array({z.real(), z.imag()}); }

cx cx_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("complex number must be a [re, im] pair");
    return cx(j[0].get<double>(), j[1].get<double>());
}

const char* kind_name(GateKind k) {
    switch (k) {
        case GateKind::SingleQubit: return "single";
        case GateKind::CNOT: return "cnot";
        case GateKind::Toffoli: return "toffoli";
        case GateKind::ControlledSwap: return "cswap";
        case GateKind::OracleCall: return "oracle";
    }
    return "?";
}

GateKind kind_from_name(const std::string& name) {
    if (name == "single") return GateKind::SingleQubit;
    if (name == "cnot") return GateKind::CNOT;
    if (name == "toffoli") return GateKind::Toffoli;
    if (name == "cswap") return GateKind::ControlledSwap;
    if (name == "oracle") return GateKind::OracleCall;
    throw std::invalid_argument("unknown gate kind: " + name);
}

json port_to_json(const Port& p) {
    json j;
    switch (p.owner) {
        case Port::Owner::ChannelInput:
            j["type"] = "input";
            j["label"] = p.index;
            break;
        case Port::Owner::OutputSlot:
            j["type"] = "slot";
            j["slot"] = p.index;
            break;
        case Port::Owner::Switch:
            j["type"] = "switch";
            j["i"] = p.sw.i;
            j["k"] = p.sw.k;
            j["side"] = p.side == PortSide::In0    ? "in0"
                        : p.side == PortSide::In1  ? "in1"
                        : p.side == PortSide::Out0 ? "out0"
                                                   : "out1";
            break;
    }
    return j;
}

}  // namespace

json to_json(const Unitary2& u) {
    return json::array({json::array({cx_to_json(u.m[0][0]), cx_to_json(u.m[0][1])}),
                        json::array({cx_to_json(u.m[1][0]), cx_to_json(u.m[1][1])})});
}

Unitary2 unitary2_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2)
        throw std::invalid_argument("unitary must be a 2x2 array of [re, im] pairs");
    Unitary2 u{};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) u.m[r][c] = cx_from_json(j[r][c]);
    if (u.unitarity_error() > 1e-10)
        throw std::invalid_argument("matrix is not unitary within 1e-10");
    return u;
}

json to_json(const StateVector& s) {
    json j = json::array();
    for (const cx& a : s.amps) j.push_back(cx_to_json(a));
    return j;
}

StateVector state_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("state must be a non-empty array");
    StateVector s;
    s.amps.reserve(j.size());
    for (const auto& e : j) s.amps.push_back(cx_from_json(e));
    std::size_t dim = s.amps.size();
    int q = 0;
    while ((std::size_t{1} << q) < dim) ++q;
    if ((std::size_t{1} << q) != dim)
        throw std::invalid_argument("state length must be a power of two");
    s.num_qubits = q;
    return s;
}

json to_json(const Circuit& c) {
    json regs = json::object();
    for (const auto& [name, range] : c.registers)
        regs[name] = json::array({range.first, range.second});
    json gates = json::array();
    for (const Gate& g : c.gates) {
        json jg;
        jg["kind"] = kind_name(g.kind);
        jg["wires"] = g.wires;
        if (g.kind == GateKind::SingleQubit) jg["unitary"] = to_json(g.unitary);
        if (g.kind == GateKind::OracleCall) jg["label"] = g.label;
        gates.push_back(std::move(jg));
    }
    return json{{"num_qubits", c.num_qubits}, {"registers", regs}, {"gates", gates}};
}

Circuit circuit_from_json(const json& j) {
    Circuit c;
    c.num_qubits = j.at("num_qubits").get<int>();
    if (c.num_qubits < 1) throw std::invalid_argument("num_qubits must be >= 1");
    if (j.contains("registers"))
        for (const auto& [name, range] : j.at("registers").items())
            c.registers[name] = {range.at(0).get<int>(), range.at(1).get<int>()};
    for (const auto& jg : j.at("gates")) {
        Gate g;
        g.kind = kind_from_name(jg.at("kind").get<std::string>());
        g.wires = jg.at("wires").get<std::vector<int>>();
        if (g.kind == GateKind::SingleQubit)
            g.unitary = unitary2_from_json(jg.at("unitary"));
        if (g.kind == GateKind::OracleCall) g.label = jg.at("label").get<int>();
        validate_gate(g, c.num_qubits);
        c.gates.push_back(std::move(g));
    }
    return c;
}

json to_json(const ResourceReport& r) {
    json uses = json::object();
    for (const auto& [label, count] : r.oracle_uses)
        uses[std::to_string(label)] = count;
    return json{{"cnot_count", r.cnot_count},
                {"single_qubit_count", r.single_qubit_count},
                {"toffoli_count", r.toffoli_count},
                {"controlled_swap_count", r.controlled_swap_count},
                {"control_qubits", r.control_qubits},
                {"ancilla_qubits", r.ancilla_qubits},
                {"oracle_uses", uses}};
}

json to_json(const SwitchNetwork& net) {
    json switches = json::array();
    for (SwitchId sw : net.switches)
        switches.push_back(json{{"i", sw.i}, {"k", sw.k}});
    json wiring = json::array();
    for (const WireLink& link : net.wiring)
        wiring.push_back(json{{"from", port_to_json(link.from)},
                              {"to", port_to_json(link.to)}});
    return json{{"N", net.N}, {"switches", switches}, {"wiring", wiring}};
}

ControlAssignment assignment_from_json(const SwitchNetwork& net, const json& j) {
    ControlAssignment a;
    for (const auto& [key, val] : j.at("bits").items()) {
        auto dot = key.find('.');
        if (dot == std::string::npos)
            throw std::invalid_argument("assignment key must be \"i.k\"");
        SwitchId sw{std::stoi(key.substr(0, dot)), std::stoi(key.substr(dot + 1))};
        int bit = val.get<int>();
        if (bit != 0 && bit != 1)
            throw std::invalid_argument("assignment bits must be 0 or 1");
        a.bits[sw] = bit;
    }
    for (SwitchId sw : net.switches)
        if (!a.bits.count(sw))
            throw std::invalid_argument("assignment missing switch " +
                                        std::to_string(sw.i) + "." + std::to_string(sw.k));
    return a;
}

DispositionProgram program_from_json(const json& j) {
    DispositionProgram p;
    p.N = j.at("N").get<int>();
    p.indices = j.at("indices").get<std::vector<int>>();
    return p;
}

}  // namespace qpc
