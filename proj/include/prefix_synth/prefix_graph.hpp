#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prefix_synth/arrival_profile.hpp"

namespace prefix_synth {

/// Construction role of a prefix gate, used for DOT coloring of the
/// sqrt-decomposition adder (group carry trees / recursive sub-adders /
/// combining gates).
enum class PrefixRole : std::uint8_t { none, group, recursion, combine };

/// One node of a prefix graph. Inputs have no predecessors; a gate combines
/// its left child (higher input indices) with its right child (lower
/// indices), so the node spans the contiguous interval [lo, hi].
struct PrefixNode {
  std::int32_t left = -1;
  std::int32_t right = -1;
  std::int32_t lo = 0;
  std::int32_t hi = 0;
  PrefixRole role = PrefixRole::none;

  bool is_input() const { return left < 0; }
};

/// DAG of prefix gates over inputs z_1..z_n. Node ids 0..n-1 are the inputs
/// (id i-1 holds z_i); gates follow in topological order (children always
/// precede parents). Output slot i, when set, names the node computing
/// z_i o ... o z_1.
class PrefixGraph {
public:
  /// Empty shell (0 inputs); only useful as a moved-from or to-be-assigned
  /// value.
  PrefixGraph() = default;

  explicit PrefixGraph(int n);

  int num_inputs() const { return n_; }
  int num_gates() const { return static_cast<int>(nodes_.size()) - n_; }

  /// Appends a gate combining nodes `left` (higher indices) and `right`
  /// (lower indices). Children must already exist; spans must be adjacent
  /// with right immediately below left.
  std::int32_t add_gate(std::int32_t left, std::int32_t right,
                        PrefixRole role = PrefixRole::none);

  /// Declares `node` as the output for prefix length i = node.hi; requires
  /// node.lo == 1.
  void mark_output(std::int32_t node);

  const std::vector<PrefixNode>& nodes() const { return nodes_; }
  const PrefixNode& node(std::int32_t id) const {
    return nodes_[static_cast<size_t>(id)];
  }

  /// Node computing z_i o ... o z_1, or -1 if not declared.
  std::int32_t output(int i) const { return outputs_[static_cast<size_t>(i - 1)]; }
  const std::vector<std::int32_t>& outputs() const { return outputs_; }
  bool has_all_outputs() const;

  bool operator==(const PrefixGraph&) const = default;

private:
  int n_ = 0;
  std::vector<PrefixNode> nodes_;
  std::vector<std::int32_t> outputs_;  // outputs_[i-1] = node for span [1, i]
};

/// A prefix tree is a prefix graph computing the single carry z_n o ... o z_1
/// in which every node feeds at most one gate. `graph` carries exactly one
/// declared output, [1, n], at `root`.
struct PrefixTree {
  PrefixGraph graph;
  std::int32_t root = -1;
};

struct SpanViolation {
  std::int32_t node = -1;
  std::string reason;
};

/// Structural validation result; `ok()` is false iff a violation was found.
/// The first offending node is reported.
struct ValidationReport {
  std::optional<SpanViolation> violation;
  bool ok() const { return !violation.has_value(); }
};

/// Checks the contiguous-span invariants: every gate's left child spans
/// [m+1, hi] and right child [lo, m] for its own span [lo, hi], inputs span
/// [i, i], and declared outputs start at 1. With `require_all_prefixes`,
/// additionally checks that every prefix [1, i] has a declared output.
ValidationReport validate_spans(const PrefixGraph& g, bool require_all_prefixes);

/// Propagated prefix-gate delay: inputs carry their arrival times and a gate
/// with left/right input delays t_l, t_r has delay max(t_r + 2, t_l + 1).
/// Returns the maximum over all nodes. The logic-circuit delay D of the
/// expansion satisfies d <= D <= d + 1.
int prefix_delay(const PrefixGraph& g, const ArrivalProfile& a);
int prefix_delay(const PrefixTree& t, const ArrivalProfile& a);

/// Per-node prefix-metric delays in node-id order.
std::vector<int> prefix_delays(const PrefixGraph& g, const ArrivalProfile& a);

/// Number of gates on the longest directed path (prefix-gate depth).
int prefix_depth(const PrefixGraph& g);

/// Maximum out-degree over all nodes of the prefix DAG.
int prefix_max_fanout(const PrefixGraph& g);

}  // namespace prefix_synth
