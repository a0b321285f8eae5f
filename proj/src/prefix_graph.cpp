#include "prefix_synth/prefix_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace prefix_synth {

PrefixGraph::PrefixGraph(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("PrefixGraph: n must be >= 1");
  nodes_.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    PrefixNode in;
    in.lo = i;
    in.hi = i;
    nodes_.push_back(in);
  }
  outputs_.assign(static_cast<size_t>(n), -1);
}

std::int32_t PrefixGraph::add_gate(std::int32_t left, std::int32_t right,
                                   PrefixRole role) {
  const auto id = static_cast<std::int32_t>(nodes_.size());
  if (left < 0 || right < 0 || left >= id || right >= id) {
    throw std::invalid_argument("add_gate: child id out of range");
  }
  const PrefixNode& l = nodes_[static_cast<size_t>(left)];
  const PrefixNode& r = nodes_[static_cast<size_t>(right)];
  if (r.hi + 1 != l.lo) {
    throw std::invalid_argument("add_gate: child spans not adjacent");
  }
  PrefixNode gate;
  gate.left = left;
  gate.right = right;
  gate.lo = r.lo;
  gate.hi = l.hi;
  gate.role = role;
  nodes_.push_back(gate);
  return id;
}

void PrefixGraph::mark_output(std::int32_t node) {
  const PrefixNode& v = nodes_.at(static_cast<size_t>(node));
  if (v.lo != 1) throw std::invalid_argument("mark_output: span must start at 1");
  outputs_[static_cast<size_t>(v.hi - 1)] = node;
}

bool PrefixGraph::has_all_outputs() const {
  return std::all_of(outputs_.begin(), outputs_.end(),
                     [](std::int32_t v) { return v >= 0; });
}

ValidationReport validate_spans(const PrefixGraph& g, bool require_all_prefixes) {
  const auto& nodes = g.nodes();
  const int n = g.num_inputs();
  for (std::int32_t id = 0; id < static_cast<std::int32_t>(nodes.size()); ++id) {
    const PrefixNode& v = nodes[static_cast<size_t>(id)];
    if (id < n) {
      if (!v.is_input() || v.lo != id + 1 || v.hi != id + 1) {
        return {SpanViolation{id, "input node must span its own index"}};
      }
      continue;
    }
    if (v.is_input()) {
      return {SpanViolation{id, "gate without predecessors"}};
    }
    if (v.left >= id || v.right >= id || v.left < 0 || v.right < 0) {
      return {SpanViolation{id, "gate predecessors must precede it"}};
    }
    const PrefixNode& l = nodes[static_cast<size_t>(v.left)];
    const PrefixNode& r = nodes[static_cast<size_t>(v.right)];
    if (r.hi + 1 != l.lo) {
      return {SpanViolation{id, "left child must span the indices directly above the right child"}};
    }
    if (v.lo != r.lo || v.hi != l.hi) {
      return {SpanViolation{id, "gate span must be the union of its child spans"}};
    }
  }
  for (int i = 1; i <= n; ++i) {
    const std::int32_t out = g.output(i);
    if (out < 0) {
      if (require_all_prefixes) {
        return {SpanViolation{-1, "missing output for prefix [1, " + std::to_string(i) + "]"}};
      }
      continue;
    }
    const PrefixNode& v = g.node(out);
    if (v.lo != 1 || v.hi != i) {
      return {SpanViolation{out, "output node does not span [1, " + std::to_string(i) + "]"}};
    }
  }
  return {};
}

std::vector<int> prefix_delays(const PrefixGraph& g, const ArrivalProfile& a) {
  if (a.n() != g.num_inputs()) {
    throw std::invalid_argument("prefix_delays: profile size mismatch");
  }
  const auto& nodes = g.nodes();
  std::vector<int> delay(nodes.size());
  for (size_t id = 0; id < nodes.size(); ++id) {
    const PrefixNode& v = nodes[id];
    delay[id] = v.is_input()
                    ? a.at(v.lo)
                    : std::max(delay[static_cast<size_t>(v.right)] + 2,
                               delay[static_cast<size_t>(v.left)] + 1);
  }
  return delay;
}

int prefix_delay(const PrefixGraph& g, const ArrivalProfile& a) {
  const auto delay = prefix_delays(g, a);
  return *std::max_element(delay.begin(), delay.end());
}

int prefix_delay(const PrefixTree& t, const ArrivalProfile& a) {
  return prefix_delay(t.graph, a);
}

int prefix_depth(const PrefixGraph& g) {
  const auto& nodes = g.nodes();
  std::vector<int> depth(nodes.size(), 0);
  int best = 0;
  for (size_t id = 0; id < nodes.size(); ++id) {
    const PrefixNode& v = nodes[id];
    if (!v.is_input()) {
      depth[id] = 1 + std::max(depth[static_cast<size_t>(v.left)],
                               depth[static_cast<size_t>(v.right)]);
      best = std::max(best, depth[id]);
    }
  }
  return best;
}

int prefix_max_fanout(const PrefixGraph& g) {
  std::vector<int> out_degree(g.nodes().size(), 0);
  for (const PrefixNode& v : g.nodes()) {
    if (v.is_input()) continue;
    ++out_degree[static_cast<size_t>(v.left)];
    ++out_degree[static_cast<size_t>(v.right)];
  }
  return *std::max_element(out_degree.begin(), out_degree.end());
}

}  // namespace prefix_synth
