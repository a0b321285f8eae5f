#include "prefix_synth/logic_circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace prefix_synth {

std::string SignalName::str() const {
  switch (role) {
    case SignalRole::none: return "";
    case SignalRole::generate: return "g" + std::to_string(index);
    case SignalRole::propagate: return "p" + std::to_string(index);
    case SignalRole::carry: return "c" + std::to_string(index);
    case SignalRole::prop_prefix: return "P" + std::to_string(index);
    case SignalRole::sum: return "s" + std::to_string(index);
  }
  return "";
}

SignalName SignalName::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("SignalName: cannot parse '" + s + "'");
  SignalRole role;
  switch (s[0]) {
    case 'g': role = SignalRole::generate; break;
    case 'p': role = SignalRole::propagate; break;
    case 'c': role = SignalRole::carry; break;
    case 'P': role = SignalRole::prop_prefix; break;
    case 's': role = SignalRole::sum; break;
    default: throw std::invalid_argument("SignalName: cannot parse '" + s + "'");
  }
  const int index = std::stoi(s.substr(1));
  if (index < 1) throw std::invalid_argument("SignalName: index must be >= 1");
  return SignalName{role, index};
}

std::int32_t LogicCircuit::add_input(SignalName name) {
  const auto id = static_cast<std::int32_t>(nodes_.size());
  LogicNode v;
  v.kind = GateKind::input;
  v.name = name;
  nodes_.push_back(v);
  return id;
}

std::int32_t LogicCircuit::add_gate(GateKind kind, std::int32_t a, std::int32_t b) {
  const auto id = static_cast<std::int32_t>(nodes_.size());
  if (kind == GateKind::input || kind == GateKind::output) {
    throw std::invalid_argument("add_gate: not a gate kind");
  }
  const bool unary = kind == GateKind::not_gate || kind == GateKind::repeater;
  if (a < 0 || a >= id || (!unary && (b < 0 || b >= id)) || (unary && b >= 0)) {
    throw std::invalid_argument("add_gate: bad predecessors");
  }
  LogicNode v;
  v.kind = kind;
  v.in0 = a;
  v.in1 = b;
  nodes_.push_back(v);
  ++gate_count_;
  return id;
}

std::int32_t LogicCircuit::add_output(SignalName name, std::int32_t pred) {
  const auto id = static_cast<std::int32_t>(nodes_.size());
  if (pred < 0 || pred >= id) throw std::invalid_argument("add_output: bad predecessor");
  LogicNode v;
  v.kind = GateKind::output;
  v.in0 = pred;
  v.name = name;
  nodes_.push_back(v);
  outputs_.push_back(id);
  return id;
}

namespace {

// Expands prefix gates into gadgets; per graph node, the ids of its
// (generate, propagate) signals.
struct SignalPair {
  std::int32_t g = -1;
  std::int32_t p = -1;
};

std::vector<SignalPair> expand_gadgets(const PrefixGraph& graph, LogicCircuit& c) {
  const auto& nodes = graph.nodes();
  std::vector<SignalPair> sig(nodes.size());
  for (int i = 1; i <= graph.num_inputs(); ++i) {
    sig[static_cast<size_t>(i - 1)].g =
        c.add_input(SignalName{SignalRole::generate, i});
    sig[static_cast<size_t>(i - 1)].p =
        c.add_input(SignalName{SignalRole::propagate, i});
  }
  for (size_t id = graph.num_inputs(); id < nodes.size(); ++id) {
    const PrefixNode& v = nodes[id];
    const SignalPair l = sig[static_cast<size_t>(v.left)];
    const SignalPair r = sig[static_cast<size_t>(v.right)];
    const std::int32_t a = c.add_gate(GateKind::and_gate, l.p, r.p);
    const std::int32_t b = c.add_gate(GateKind::and_gate, l.p, r.g);
    const std::int32_t o = c.add_gate(GateKind::or_gate, l.g, b);
    sig[id] = SignalPair{o, a};
  }
  return sig;
}

}  // namespace

LogicCircuit expand_to_logic(const PrefixGraph& g) {
  const auto report = validate_spans(g, false);
  if (!report.ok()) {
    throw std::invalid_argument("expand_to_logic: invalid span structure: " +
                                report.violation->reason);
  }
  LogicCircuit c(g.num_inputs());
  const auto sig = expand_gadgets(g, c);
  for (int i = 1; i <= g.num_inputs(); ++i) {
    const std::int32_t out = g.output(i);
    if (out < 0) continue;
    c.add_output(SignalName{SignalRole::carry, i + 1}, sig[static_cast<size_t>(out)].g);
    c.add_output(SignalName{SignalRole::prop_prefix, i}, sig[static_cast<size_t>(out)].p);
  }
  return c;
}

LogicCircuit expand_to_logic(const PrefixTree& t) {
  return expand_to_logic(t.graph);
}

namespace {

std::vector<int> input_arrivals(const LogicCircuit& c, const ArrivalProfile* a) {
  std::vector<int> arrival(c.nodes().size(), 0);
  if (a == nullptr) return arrival;
  for (std::int32_t id = 0; id < static_cast<std::int32_t>(c.nodes().size()); ++id) {
    const LogicNode& v = c.node(id);
    if (v.kind != GateKind::input) continue;
    if (v.name.index < 1 || v.name.index > a->n()) {
      throw std::invalid_argument("logic_delay: input index outside profile");
    }
    arrival[static_cast<size_t>(id)] = a->at(v.name.index);
  }
  return arrival;
}

// Longest path with per-node accumulators; `level` counts gates, `delay`
// adds the start arrival time.
struct PathInfo {
  std::vector<int> delay;
  std::vector<int> depth;
};

PathInfo longest_paths(const LogicCircuit& c, const ArrivalProfile* a) {
  const auto& nodes = c.nodes();
  PathInfo info{input_arrivals(c, a), std::vector<int>(nodes.size(), 0)};
  for (size_t id = 0; id < nodes.size(); ++id) {
    const LogicNode& v = nodes[id];
    if (v.kind == GateKind::input) continue;
    int d = info.delay[static_cast<size_t>(v.in0)];
    int dep = info.depth[static_cast<size_t>(v.in0)];
    if (v.in1 >= 0) {
      d = std::max(d, info.delay[static_cast<size_t>(v.in1)]);
      dep = std::max(dep, info.depth[static_cast<size_t>(v.in1)]);
    }
    const int inc = v.kind == GateKind::output ? 0 : 1;
    info.delay[id] = d + inc;
    info.depth[id] = dep + inc;
  }
  return info;
}

}  // namespace

int logic_delay(const LogicCircuit& c, const ArrivalProfile& a) {
  if (c.num_input_pairs() != 0 && a.n() != c.num_input_pairs()) {
    throw std::invalid_argument("logic_delay: profile size mismatch");
  }
  const PathInfo info = longest_paths(c, &a);
  int best = 0;
  for (const std::int32_t out : c.outputs()) {
    best = std::max(best, info.delay[static_cast<size_t>(out)]);
  }
  return best;
}

CircuitStats stats(const LogicCircuit& c, const ArrivalProfile& a) {
  CircuitStats s;
  s.size = c.size();
  const PathInfo info = longest_paths(c, &a);
  for (const std::int32_t out : c.outputs()) {
    s.delay = std::max(s.delay, info.delay[static_cast<size_t>(out)]);
  }
  s.depth = *std::max_element(info.depth.begin(), info.depth.end());
  std::vector<int> out_degree(c.nodes().size(), 0);
  for (const LogicNode& v : c.nodes()) {
    if (v.in0 >= 0) ++out_degree[static_cast<size_t>(v.in0)];
    if (v.in1 >= 0) ++out_degree[static_cast<size_t>(v.in1)];
  }
  s.max_fanout = out_degree.empty()
                     ? 0
                     : *std::max_element(out_degree.begin(), out_degree.end());
  return s;
}

CircuitStats stats(const LogicCircuit& c) {
  CircuitStats s;
  s.size = c.size();
  const PathInfo info = longest_paths(c, nullptr);
  for (const std::int32_t out : c.outputs()) {
    s.delay = std::max(s.delay, info.delay[static_cast<size_t>(out)]);
  }
  s.depth = info.depth.empty() ? 0
                               : *std::max_element(info.depth.begin(), info.depth.end());
  std::vector<int> out_degree(c.nodes().size(), 0);
  for (const LogicNode& v : c.nodes()) {
    if (v.in0 >= 0) ++out_degree[static_cast<size_t>(v.in0)];
    if (v.in1 >= 0) ++out_degree[static_cast<size_t>(v.in1)];
  }
  s.max_fanout = out_degree.empty()
                     ? 0
                     : *std::max_element(out_degree.begin(), out_degree.end());
  return s;
}

void simulate_lanes(const LogicCircuit& c, std::vector<std::uint64_t>& values) {
  const auto& nodes = c.nodes();
  if (values.size() != nodes.size()) {
    throw std::invalid_argument("simulate_lanes: value vector size mismatch");
  }
  for (size_t id = 0; id < nodes.size(); ++id) {
    const LogicNode& v = nodes[id];
    switch (v.kind) {
      case GateKind::input:
        break;
      case GateKind::and_gate:
        values[id] = values[static_cast<size_t>(v.in0)] &
                     values[static_cast<size_t>(v.in1)];
        break;
      case GateKind::or_gate:
        values[id] = values[static_cast<size_t>(v.in0)] |
                     values[static_cast<size_t>(v.in1)];
        break;
      case GateKind::xor_gate:
        values[id] = values[static_cast<size_t>(v.in0)] ^
                     values[static_cast<size_t>(v.in1)];
        break;
      case GateKind::not_gate:
        values[id] = ~values[static_cast<size_t>(v.in0)];
        break;
      case GateKind::repeater:
      case GateKind::output:
        values[id] = values[static_cast<size_t>(v.in0)];
        break;
    }
  }
}

std::map<std::string, bool> evaluate(const LogicCircuit& c,
                                     const std::map<std::string, bool>& assignment) {
  std::vector<std::uint64_t> values(c.nodes().size(), 0);
  for (std::int32_t id = 0; id < static_cast<std::int32_t>(c.nodes().size()); ++id) {
    const LogicNode& v = c.node(id);
    if (v.kind != GateKind::input) continue;
    const auto it = assignment.find(v.name.str());
    if (it == assignment.end()) {
      throw std::invalid_argument("evaluate: missing assignment for " + v.name.str());
    }
    values[static_cast<size_t>(id)] = it->second ? ~0ull : 0ull;
  }
  simulate_lanes(c, values);
  std::map<std::string, bool> result;
  for (const std::int32_t out : c.outputs()) {
    result[c.node(out).name.str()] = (values[static_cast<size_t>(out)] & 1ull) != 0;
  }
  return result;
}

}  // namespace prefix_synth
