#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "prefix_synth/arrival_profile.hpp"
#include "prefix_synth/prefix_graph.hpp"

namespace prefix_synth {

enum class GateKind : std::uint8_t {
  input,
  and_gate,
  or_gate,
  xor_gate,
  not_gate,
  repeater,
  output,
};

/// Which named signal an input or output node carries:
///   generate g_i, propagate p_i, carry c_i, propagate prefix P_i
///   (= p_i & ... & p_1), sum s_i.
enum class SignalRole : std::uint8_t { none, generate, propagate, carry, prop_prefix, sum };

struct SignalName {
  SignalRole role = SignalRole::none;
  std::int32_t index = 0;

  std::string str() const;
  static SignalName parse(const std::string& s);
  bool operator==(const SignalName&) const = default;
  auto operator<=>(const SignalName&) const = default;
};

struct LogicNode {
  GateKind kind = GateKind::input;
  std::int32_t in0 = -1;
  std::int32_t in1 = -1;
  SignalName name;  // meaningful for inputs and outputs

  int fanin() const { return (in0 >= 0 ? 1 : 0) + (in1 >= 0 ? 1 : 0); }
  bool operator==(const LogicNode&) const = default;
};

/// Audit record for every size/fan-out/delay bound assertion.
struct CircuitStats {
  int delay = 0;       // max over outputs of path depth + start arrival
  int size = 0;        // gate count (and/or/xor/not/repeater)
  int max_fanout = 0;  // max out-degree over all nodes
  int depth = 0;       // max gates on a directed path

  bool operator==(const CircuitStats&) const = default;
};

/// Gate-level circuit. Nodes are stored in topological order: every
/// predecessor id is smaller than the node's own id. Inputs have no
/// predecessors, outputs have exactly one and no successors.
class LogicCircuit {
public:
  LogicCircuit() = default;
  explicit LogicCircuit(int n) : n_(n) {}

  /// Input pair count n (g_1,p_1 .. g_n,p_n); 0 for freeform circuits.
  int num_input_pairs() const { return n_; }

  std::int32_t add_input(SignalName name);
  std::int32_t add_gate(GateKind kind, std::int32_t a, std::int32_t b = -1);
  std::int32_t add_output(SignalName name, std::int32_t pred);

  const std::vector<LogicNode>& nodes() const { return nodes_; }
  const LogicNode& node(std::int32_t id) const {
    return nodes_[static_cast<size_t>(id)];
  }
  const std::vector<std::int32_t>& outputs() const { return outputs_; }

  int size() const { return gate_count_; }

private:
  int n_ = 0;
  int gate_count_ = 0;
  std::vector<LogicNode> nodes_;
  std::vector<std::int32_t> outputs_;
};

/// Replaces every prefix gate with the three-gate gadget
///   p = p_l & p_r, g = g_l | (p_l & g_r)
/// and every input z_i with the pair (g_i, p_i). Each declared output
/// [1, i] is exposed as the pair (c_{i+1}, P_i). Gate count is exactly
/// 3 * (number of prefix gates).
LogicCircuit expand_to_logic(const PrefixGraph& g);
LogicCircuit expand_to_logic(const PrefixTree& t);

/// Longest-path delay: both g_i and p_i carry arrival time t_i; every gate
/// adds one unit. Linear time. Throws if the profile size does not match.
int logic_delay(const LogicCircuit& c, const ArrivalProfile& a);

/// Exact gate count, maximum out-degree, depth, and delay (the latter needs
/// the profile; `stats` uses zero arrival times for inputs without one).
CircuitStats stats(const LogicCircuit& c, const ArrivalProfile& a);
CircuitStats stats(const LogicCircuit& c);

/// Evaluates the circuit on a full input assignment (input name -> bit).
/// Returns output name -> bit. Throws std::invalid_argument on a missing
/// assignment.
std::map<std::string, bool> evaluate(const LogicCircuit& c,
                                     const std::map<std::string, bool>& assignment);

/// 64 assignments at once, one per bit lane. `values[id]` holds the lane
/// values of node id; input lanes must be filled by the caller for every
/// input id before the call, gate and output lanes are computed in place.
void simulate_lanes(const LogicCircuit& c, std::vector<std::uint64_t>& values);

}  // namespace prefix_synth
