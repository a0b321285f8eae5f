#pragma once

#include <span>
#include <vector>

namespace prefix_synth {

/// Per-input arrival times t_1..t_n. Input 1 is the least significant
/// (rightmost) operand position everywhere in this library; the prefix
/// operator is not commutative, so this orientation is load-bearing.
class ArrivalProfile {
public:
  explicit ArrivalProfile(std::vector<int> times);

  int n() const { return static_cast<int>(times_.size()); }

  /// Arrival time of input i, 1-based.
  int at(int i) const { return times_[static_cast<size_t>(i - 1)]; }

  std::span<const int> times() const { return times_; }

  int max_time() const;
  int min_time() const;

  bool operator==(const ArrivalProfile&) const = default;

private:
  std::vector<int> times_;
};

}  // namespace prefix_synth
