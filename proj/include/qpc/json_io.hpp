#pragma once

#include <nlohmann/json_fwd.hpp>

#include "qpc/circuit.hpp"
#include "qpc/permcircuits.hpp"
#include "qpc/switchnet.hpp"

// JSON wire formats. Complex numbers are [re, im] pairs throughout.
//
//   Unitary2:   [[[re,im],[re,im]], [[re,im],[re,im]]]   (row-major)
//   State:      [[re,im], ...]                           (2^q entries)
//   Circuit:    {"num_qubits": q, "registers": {name: [lo, hi]},
//                "gates": [{"kind", "wires", "unitary"?, "label"?}]}
//   Network:    {"N": n, "switches": [{"i", "k"}],
//                "wiring": [{"from": port, "to": port}]}
//   Assignment: {"bits": {"i.k": 0|1}}
//   Program:    {"N": n, "indices": [i1, ..., iN]}

namespace qpc {

using json = nlohmann::json;

json to_json(const Unitary2& u);
Unitary2 unitary2_from_json(const json& j);

json to_json(const StateVector& s);
StateVector state_from_json(const json& j);

json to_json(const Circuit& c);
Circuit circuit_from_json(const json& j);

json to_json(const ResourceReport& r);

json to_json(const SwitchNetwork& net);
ControlAssignment assignment_from_json(const SwitchNetwork& net, const json& j);

DispositionProgram program_from_json(const json& j);

}  // namespace qpc
