#pragma once

#include <span>

#include "prefix_synth/arrival_profile.hpp"
#include "prefix_synth/fibmath.hpp"
#include "prefix_synth/prefix_graph.hpp"

namespace prefix_synth {

/// Exact rational, used for the capping exponent gamma.
struct Rational {
  long long num = 3;
  long long den = 1;

  /// Parses "3", "5/2" or a decimal like "2.5".
  static Rational parse(const std::string& s);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

enum class CapMode : std::uint8_t {
  automatic,  // cap when n >= 1024
  on,
  off,
};

struct CarrySynthOptions {
  CapMode cap = CapMode::automatic;
  Rational gamma{3, 1};
};

struct CappedProfile {
  ArrivalProfile profile;
  int shift = 0;  // add back to delays computed against `profile`
};

/// Raises every arrival time to at least max_t - ceil(gamma * log_phi n) and
/// shifts the whole profile down to a zero minimum. Keeps the numbers in the
/// synthesis small; raising non-critical inputs never changes the bound and
/// the recorded shift restores original-scale delays.
CappedProfile cap_profile(const ArrivalProfile& a, Rational gamma = {3, 1});

struct CarrySynthResult {
  PrefixTree tree;
  int k = 0;          // delay budget; expanded logic delay is <= k
  int shift = 0;      // nonzero only when capping rewrote the profile
  bool capped = false;
};

/// Constructs a prefix tree for the carry bit z_n o ... o z_1 whose expanded
/// logic circuit has delay at most k, where F_k is the first Fibonacci number
/// >= sum(F_{t_i+3} - 1). The Fibonacci tree is never materialized: the
/// recursion splits the leaf interval of size F_k into F_{k-1} | F_{k-2}
/// parts and locates the straddling input by binary search over prefix sums
/// of the leaf weights. O(n log n) big-integer comparisons.
CarrySynthResult synthesize_carry(const ArrivalProfile& a,
                                  const CarrySynthOptions& opts = {});

/// Tree over inputs 1..times.size() only, no capping; used as the adder
/// subroutine where the caller handles index offsets.
PrefixTree synthesize_carry_tree(std::span<const int> times);

/// floor(log_phi sum(phi^{t_i})) + 4; the synthesized k never exceeds it.
int delay_upper_bound(const ArrivalProfile& a);

/// ceil(log_phi sum(phi^{t_i})) - 1, clamped below by max_i t_i (an input's
/// arrival time is itself a lower bound on the output delay).
int delay_lower_bound(const ArrivalProfile& a);

}  // namespace prefix_synth
