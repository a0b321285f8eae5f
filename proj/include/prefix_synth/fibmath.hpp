#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <vector>

namespace prefix_synth {

using BigInt = boost::multiprecision::cpp_int;

/// Lazily extended table of Fibonacci numbers, F_0 = 0, F_1 = 1.
/// Construction and lookups are cheap; own one per call site that needs
/// exact Fibonacci arithmetic. All values are exact integers.
class FibCache {
public:
  FibCache();

  /// F_k for k >= 0.
  const BigInt& fib(int k);

  /// Leaf demand of an input with arrival time t: F_{t+3} - 1 (always >= 1).
  BigInt leaf_weight(int t);

  /// Smallest k with F_k >= x, for x >= 1. The F_1 = F_2 = 1 tie resolves
  /// to k = 2, so the result is always a usable tree-depth budget.
  int min_fib_index_at_least(const BigInt& x);

private:
  std::vector<BigInt> table_;
};

/// Exact value a + b*phi with integer coefficients, where
/// phi = (1 + sqrt 5)/2. Since phi^t = F_t * phi + F_{t-1}, any sum of
/// nonnegative integer powers of phi is representable, and comparisons
/// against phi^m reduce to integer arithmetic. No floating point anywhere.
class PhiPowerSum {
public:
  PhiPowerSum() = default;

  /// Adds phi^t for t >= 0.
  void add_power(int t, FibCache& fib);

  /// Sign of (sum - phi^m), m >= 0. Returns -1, 0, or +1.
  int compare_with_phi_power(int m, FibCache& fib) const;

  /// Largest m >= 0 with phi^m <= sum. Requires sum >= 1.
  int floor_log_phi(FibCache& fib) const;

  /// Smallest m >= 0 with phi^m >= sum. Requires sum >= 1.
  int ceil_log_phi(FibCache& fib) const;

  bool empty() const { return coeff_phi_ == 0 && coeff_one_ == 0; }

private:
  BigInt coeff_phi_;  // coefficient of phi
  BigInt coeff_one_;  // integer part
};

struct DelayBounds {
  int lower;  // max(0, ceil(log_phi sum) - 1)
  int upper;  // floor(log_phi sum) + 4
};

/// Exact lower/upper delay bounds from the arrival-time profile, derived by
/// bracketing sum(phi^{t_i}) between consecutive powers of phi.
/// Throws std::invalid_argument on an empty profile.
DelayBounds phi_log_bounds(std::span<const int> arrival_times);

/// Smallest m with phi^(m*gamma_den) >= n^gamma_num, i.e. the exact value of
/// ceil(gamma * log_phi n) for rational gamma = gamma_num/gamma_den.
/// Requires n >= 1 and gamma_num, gamma_den >= 1; returns 0 for n = 1.
int ceil_gamma_log_phi(long long n, long long gamma_num, long long gamma_den);

}  // namespace prefix_synth
