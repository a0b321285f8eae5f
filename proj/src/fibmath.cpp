#include "prefix_synth/fibmath.hpp"

#include <stdexcept>

namespace prefix_synth {

namespace {

// Sign of u + v*sqrt(5). Exact: sqrt(5) is irrational, so the value is zero
// only when u = v = 0.
int sign_quadratic(const BigInt& u, const BigInt& v) {
  if (v == 0) return u == 0 ? 0 : (u > 0 ? 1 : -1);
  if (v > 0) {
    if (u >= 0) return 1;
    return 5 * v * v > u * u ? 1 : -1;
  }
  if (u <= 0) return -1;
  return u * u > 5 * v * v ? 1 : -1;
}

// Sign of a*phi + b = ((a + 2b) + a*sqrt(5)) / 2.
int sign_phi_linear(const BigInt& a, const BigInt& b) {
  return sign_quadratic(a + 2 * b, a);
}

}  // namespace

FibCache::FibCache() : table_{BigInt(0), BigInt(1)} {}

const BigInt& FibCache::fib(int k) {
  if (k < 0) throw std::invalid_argument("fib: negative index");
  while (static_cast<int>(table_.size()) <= k) {
    const auto n = table_.size();
    table_.push_back(table_[n - 1] + table_[n - 2]);
  }
  return table_[static_cast<size_t>(k)];
}

BigInt FibCache::leaf_weight(int t) {
  if (t < 0) throw std::invalid_argument("leaf_weight: negative arrival time");
  return fib(t + 3) - 1;
}

int FibCache::min_fib_index_at_least(const BigInt& x) {
  if (x < 1) throw std::invalid_argument("min_fib_index_at_least: x must be >= 1");
  if (x == 1) return 2;
  // Exponential search for an upper bracket, then binary search. fib() keeps
  // the table warm so repeated queries are cheap.
  int hi = 2;
  while (fib(hi) < x) hi *= 2;
  int lo = hi / 2;  // fib(lo) < x <= fib(hi)
  while (lo + 1 < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (fib(mid) < x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

void PhiPowerSum::add_power(int t, FibCache& fib) {
  if (t < 0) throw std::invalid_argument("add_power: negative exponent");
  // phi^t = F_t * phi + F_{t-1}, with F_{-1} = 1 covering t = 0.
  coeff_phi_ += fib.fib(t);
  coeff_one_ += t == 0 ? BigInt(1) : fib.fib(t - 1);
}

int PhiPowerSum::compare_with_phi_power(int m, FibCache& fib) const {
  if (m < 0) throw std::invalid_argument("compare_with_phi_power: negative exponent");
  const BigInt a = coeff_phi_ - fib.fib(m);
  const BigInt b = coeff_one_ - (m == 0 ? BigInt(1) : fib.fib(m - 1));
  return sign_phi_linear(a, b);
}

int PhiPowerSum::floor_log_phi(FibCache& fib) const {
  if (compare_with_phi_power(0, fib) < 0) {
    throw std::domain_error("floor_log_phi: sum must be >= 1");
  }
  int hi = 1;
  while (compare_with_phi_power(hi, fib) >= 0) hi *= 2;
  int lo = hi / 2;  // phi^lo <= sum < phi^hi
  while (lo + 1 < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (compare_with_phi_power(mid, fib) >= 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

int PhiPowerSum::ceil_log_phi(FibCache& fib) const {
  const int fl = floor_log_phi(fib);
  return compare_with_phi_power(fl, fib) == 0 ? fl : fl + 1;
}

DelayBounds phi_log_bounds(std::span<const int> arrival_times) {
  if (arrival_times.empty()) {
    throw std::invalid_argument("phi_log_bounds: empty profile");
  }
  FibCache fib;
  PhiPowerSum sum;
  for (const int t : arrival_times) sum.add_power(t, fib);
  const int fl = sum.floor_log_phi(fib);
  const int cl = sum.compare_with_phi_power(fl, fib) == 0 ? fl : fl + 1;
  DelayBounds bounds{};
  bounds.lower = cl - 1 < 0 ? 0 : cl - 1;
  bounds.upper = fl + 4;
  return bounds;
}

int ceil_gamma_log_phi(long long n, long long gamma_num, long long gamma_den) {
  if (n < 1) throw std::invalid_argument("ceil_gamma_log_phi: n must be >= 1");
  if (gamma_num < 1 || gamma_den < 1) {
    throw std::invalid_argument("ceil_gamma_log_phi: gamma must be positive");
  }
  if (n == 1) return 0;
  FibCache fib;
  const BigInt target = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(gamma_num));
  // Smallest m with phi^(m*q) >= n^p. phi^j >= x iff F_j*phi + F_{j-1} - x >= 0.
  const auto ge_target = [&](long long m) {
    const BigInt a = fib.fib(static_cast<int>(m * gamma_den));
    const BigInt b = fib.fib(static_cast<int>(m * gamma_den - 1)) - target;
    return sign_phi_linear(a, b) >= 0;
  };
  long long hi = 1;
  while (!ge_target(hi)) hi *= 2;
  long long lo = hi / 2;  // phi^(lo*q) < target <= phi^(hi*q), lo may be 0
  while (lo + 1 < hi) {
    const long long mid = lo + (hi - lo) / 2;
    if (ge_target(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return static_cast<int>(hi);
}

}  // namespace prefix_synth
