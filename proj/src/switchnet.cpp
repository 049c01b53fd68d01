#include "qpc/switchnet.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <tuple>

namespace qpc {

namespace {

Port channel_port(int label) {
    Port p;
    p.owner = Port::Owner::ChannelInput;
    p.index = label;
    return p;
}

Port slot_port(int slot) {
    Port p;
    p.owner = Port::Owner::OutputSlot;
    p.index = slot;
    return p;
}

Port switch_port(SwitchId sw, PortSide side) {
    Port p;
    p.owner = Port::Owner::Switch;
    p.sw = sw;
    p.side = side;
    return p;
}

// Destination of out0: down-chain continuation or, on row 1, the row
// chain (slot 0 at the last column).
Port out0_dest(SwitchId sw, int N) {
    if (sw.i >= 2) return switch_port({sw.i - 1, sw.k}, PortSide::In1);
    if (sw.k < N - 1) return switch_port({1, sw.k + 1}, PortSide::In0);
    return slot_port(0);
}

// Destination of out1: the diagonal, or slot i at the last column.
Port out1_dest(SwitchId sw, int N) {
    if (sw.k < N - 1) return switch_port({sw.i + 1, sw.k + 1}, PortSide::In0);
    return slot_port(sw.i);
}

}  // namespace

ControlAssignment ControlAssignment::from_value(const SwitchNetwork& net,
                                                std::uint64_t value) {
    ControlAssignment a;
    for (std::size_t w = 0; w < net.switches.size(); ++w)
        a.bits[net.switches[w]] = static_cast<int>((value >> w) & 1u);
    return a;
}

std::uint64_t ControlAssignment::value(const SwitchNetwork& net) const {
    std::uint64_t v = 0;
    for (std::size_t w = 0; w < net.switches.size(); ++w) {
        auto it = bits.find(net.switches[w]);
        if (it == bits.end())
            throw std::invalid_argument("assignment missing a switch bit");
        if (it->second) v |= (std::uint64_t{1} << w);
    }
    return v;
}

std::string Permutation::product_string() const {
    std::string s;
    for (auto it = sigma.rbegin(); it != sigma.rend(); ++it) {
        if (!s.empty()) s += ' ';
        s += "U" + std::to_string(*it);
    }
    return s;
}

SwitchNetwork build_network(int N) {
    if (N < 2) throw std::invalid_argument("build_network: N must be >= 2");
    SwitchNetwork net;
    net.N = N;
    for (int k = 1; k <= N - 1; ++k)
        for (int i = 1; i <= k; ++i) net.switches.push_back({i, k});
    std::sort(net.switches.begin(), net.switches.end(),
              [](SwitchId a, SwitchId b) { return std::tie(a.k, a.i) < std::tie(b.k, b.i); });

    net.wiring.push_back({channel_port(0), switch_port({1, 1}, PortSide::In0)});
    for (int k = 1; k <= N - 1; ++k)
        net.wiring.push_back({channel_port(k), switch_port({k, k}, PortSide::In1)});
    for (SwitchId sw : net.switches) {
        net.wiring.push_back({switch_port(sw, PortSide::Out0), out0_dest(sw, N)});
        net.wiring.push_back({switch_port(sw, PortSide::Out1), out1_dest(sw, N)});
    }
    return net;
}

Permutation evaluate(const SwitchNetwork& network, const ControlAssignment& assignment) {
    int N = network.N;
    // in_labels[(i,k)][port]; propagation in (k ascending, i descending)
    // order: the down-chain flows toward row 1, the row/diagonal edges
    // toward column k+1.
    std::map<SwitchId, std::array<int, 2>> in_labels;
    auto deposit = [&](const Port& to, int label) {
        if (to.owner == Port::Owner::Switch)
            in_labels[to.sw][to.side == PortSide::In0 ? 0 : 1] = label;
    };

    std::vector<int> slots(N, -1);
    auto route = [&](SwitchId sw, int out_port, int label) {
        Port dest = out_port == 0 ? out0_dest(sw, N) : out1_dest(sw, N);
        if (dest.owner == Port::Owner::OutputSlot)
            slots[dest.index] = label;
        else
            deposit(dest, label);
    };

    deposit(switch_port({1, 1}, PortSide::In0), 0);
    for (int k = 1; k <= N - 1; ++k) deposit(switch_port({k, k}, PortSide::In1), k);

    for (int k = 1; k <= N - 1; ++k)
        for (int i = k; i >= 1; --i) {
            SwitchId sw{i, k};
            auto bit = assignment.bits.find(sw);
            if (bit == assignment.bits.end())
                throw std::invalid_argument("evaluate: assignment missing a switch bit");
            int c = bit->second;
            const auto& in = in_labels.at(sw);
            // output p carries input p^c
            route(sw, 0, in[0 ^ c]);
            route(sw, 1, in[1 ^ c]);
        }

    Permutation p;
    p.sigma = slots;
    return p;
}

std::vector<std::pair<std::uint64_t, Permutation>> permutation_table(
    const SwitchNetwork& network) {
    if (network.N > 8)
        throw std::length_error("permutation_table: N > 8 not enumerable");
    std::uint64_t count = std::uint64_t{1} << network.switch_count();
    std::vector<std::pair<std::uint64_t, Permutation>> table;
    table.reserve(count);
    for (std::uint64_t b = 0; b < count; ++b)
        table.emplace_back(b, evaluate(network, ControlAssignment::from_value(network, b)));
    return table;
}

SurjectivityReport check_all_permutations(const SwitchNetwork& network) {
    SurjectivityReport r;
    long long factorial = 1;
    for (int j = 2; j <= network.N; ++j) factorial *= j;
    for (const auto& [b, perm] : permutation_table(network)) ++r.histogram[perm];
    r.surjective = static_cast<long long>(r.histogram.size()) == factorial;
    return r;
}

StateVector simulate_coherent(const SwitchNetwork& network,
                              const std::vector<Unitary2>& unitaries,
                              const StateVector& control_state,
                              const StateVector& psi) {
    int N = network.N;
    int m = static_cast<int>(network.switch_count());
    if (static_cast<int>(unitaries.size()) != N)
        throw std::invalid_argument("simulate_coherent: need N unitaries");
    if (control_state.num_qubits != m)
        throw std::invalid_argument("simulate_coherent: control register must have one qubit per switch");
    if (psi.num_qubits != 1)
        throw std::invalid_argument("simulate_coherent: psi must be 1 qubit");

    StateVector out;
    out.num_qubits = m + 1;
    out.amps.assign(std::size_t{1} << (m + 1), cx(0.0));
    for (std::uint64_t b = 0; b < control_state.amps.size(); ++b) {
        cx alpha = control_state.amps[b];
        if (alpha == cx(0.0)) continue;
        Permutation sigma = evaluate(network, ControlAssignment::from_value(network, b));
        Unitary2 z = product_in_order(unitaries, sigma.sigma);
        for (int s = 0; s < 2; ++s) {
            cx amp = z.m[s][0] * psi.amps[0] + z.m[s][1] * psi.amps[1];
            out.amps[(b << 1) | static_cast<unsigned>(s)] += alpha * amp;
        }
    }
    return out;
}

std::map<int, long long> uses_per_channel(const SwitchNetwork& network) {
    std::map<int, long long> uses;
    for (const WireLink& link : network.wiring)
        if (link.from.owner == Port::Owner::ChannelInput) ++uses[link.from.index];
    return uses;
}

}  // namespace qpc
