#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qpc/qcore.hpp"

// Triangular network of binary switches S_i^(k), 1 <= i <= k <= N-1.
// Each switch has two inputs and two outputs; its control bit c maps
// input j to output j^c (0 = pass, 1 = cross). Channel U_j enters the
// network once; output slot j carries the channel applied at position
// j of the cascade (slot 0 first), so slot labels sigma give the
// product U_{sigma(N-1)} ... U_{sigma(0)}.
//
// Port orientation: in0 receives the forward-side edge (from U_0, the
// row chain or the diagonal), in1 the down-chain edge (from U_k or
// S_{i+1}^(k)); out0 feeds the lower-indexed destination, out1 the
// higher-indexed one.

namespace qpc {

struct SwitchId {
    int i = 0;
    int k = 0;
    auto operator<=>(const SwitchId&) const = default;
};

enum class PortSide { In0, In1, Out0, Out1 };

struct Port {
    enum class Owner { ChannelInput, Switch, OutputSlot };
    Owner owner = Owner::Switch;
    SwitchId sw;     // Switch only
    int index = 0;   // channel label or slot index
    PortSide side = PortSide::In0;
};

struct WireLink {
    Port from;
    Port to;
};

struct SwitchNetwork {
    int N = 0;
    std::vector<SwitchId> switches;  // sorted by (k, i)
    std::vector<WireLink> wiring;

    std::size_t switch_count() const { return switches.size(); }
};

// One control bit per switch.
struct ControlAssignment {
    std::map<SwitchId, int> bits;

    // bit w of value drives the w-th switch in (k, i) order
    static ControlAssignment from_value(const SwitchNetwork& net, std::uint64_t value);
    std::uint64_t value(const SwitchNetwork& net) const;
};

struct Permutation {
    std::vector<int> sigma;  // slot j carries channel sigma(j)

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return sigma < o.sigma; }
    std::string product_string() const;  // "U2 U0 U1" style, slot N-1 leftmost
};

SwitchNetwork build_network(int N);

Permutation evaluate(const SwitchNetwork& network, const ControlAssignment& assignment);

// Exhaustive table over all 2^m assignments, enumeration order =
// binary counting with bit w driving the w-th switch in (k, i) order.
std::vector<std::pair<std::uint64_t, Permutation>> permutation_table(
    const SwitchNetwork& network);

struct SurjectivityReport {
    bool surjective = false;
    std::map<Permutation, long long> histogram;
};

SurjectivityReport check_all_permutations(const SwitchNetwork& network);

// Joint output over m+1 wires: wire 0 is the target qubit, wire w+1 is
// the control of the w-th switch in (k, i) order. Per control basis
// state b the target undergoes the slot product of evaluate(b).
StateVector simulate_coherent(const SwitchNetwork& network,
                              const std::vector<Unitary2>& unitaries,
                              const StateVector& control_state,
                              const StateVector& psi);

std::map<int, long long> uses_per_channel(const SwitchNetwork& network);

}  // namespace qpc
