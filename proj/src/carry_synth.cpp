#include "prefix_synth/carry_synth.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

namespace prefix_synth {

Rational Rational::parse(const std::string& s) {
  const auto bad = [&] {
    return std::invalid_argument("Rational: cannot parse '" + s + "'");
  };
  if (s.empty()) throw bad();
  Rational r;
  try {
    if (const auto slash = s.find('/'); slash != std::string::npos) {
      r.num = std::stoll(s.substr(0, slash));
      r.den = std::stoll(s.substr(slash + 1));
    } else if (const auto dot = s.find('.'); dot != std::string::npos) {
      const std::string frac = s.substr(dot + 1);
      if (frac.empty() || frac.size() > 9) throw bad();
      r.den = 1;
      for (size_t i = 0; i < frac.size(); ++i) r.den *= 10;
      r.num = std::stoll(s.substr(0, dot)) * r.den + std::stoll(frac);
    } else {
      r.num = std::stoll(s);
      r.den = 1;
    }
  } catch (const std::logic_error&) {
    throw bad();
  }
  if (r.den < 1 || r.num < 1) throw bad();
  return r;
}

CappedProfile cap_profile(const ArrivalProfile& a, Rational gamma) {
  if (gamma.num <= gamma.den) {
    throw std::invalid_argument("cap_profile: gamma must be > 1");
  }
  const int n = a.n();
  const int max_t = a.max_time();
  const int delta = ceil_gamma_log_phi(n, gamma.num, gamma.den);
  const int floor_t = max_t > delta ? max_t - delta : 0;
  std::vector<int> capped(static_cast<size_t>(n));
  int min_t = max_t;
  for (int i = 1; i <= n; ++i) {
    capped[static_cast<size_t>(i - 1)] = std::max(a.at(i), floor_t);
    min_t = std::min(min_t, capped[static_cast<size_t>(i - 1)]);
  }
  for (int& t : capped) t -= min_t;
  return CappedProfile{ArrivalProfile(std::move(capped)), min_t};
}

namespace {

// One pending subproblem of the implicit Fibonacci-tree recursion: the input
// indices [lo, hi] share a Fibonacci tree with budget k. Boundary indices may
// already have ceded part of their leaf allotment to a sibling subtree;
// cnt_lo / cnt_hi carry their remaining counts (interior counts are
// pristine leaf weights).
struct Split {
  int lo;
  int hi;
  int k;
  BigInt cnt_lo;
  BigInt cnt_hi;
  std::int32_t* slot;  // receives the id of the node computing [lo, hi]
};

// Gate awaiting both child node ids. Lives in a deque so that slot pointers
// into it stay valid while children are under construction.
struct PendingGate {
  std::int32_t* slot;
  std::int32_t left = -1;
  std::int32_t right = -1;
};

class CarryBuilder {
public:
  CarryBuilder(std::span<const int> times, FibCache& fib)
      : times_(times), fib_(fib), graph_(static_cast<int>(times.size())) {
    weight_prefix_.reserve(times.size() + 1);
    weight_prefix_.emplace_back(0);
    for (const int t : times) {
      weight_prefix_.push_back(weight_prefix_.back() + fib_.leaf_weight(t));
    }
  }

  const BigInt& total_weight() const { return weight_prefix_.back(); }

  PrefixTree build(int k) {
    std::int32_t root = -1;
    const int n = static_cast<int>(times_.size());
    stack_.push_back(Split{1, n, k, weight(1), weight(n), &root});
    while (!stack_.empty()) {
      Split s = std::move(stack_.back());
      stack_.pop_back();
      step(std::move(s));
    }
    graph_.mark_output(root);
    return PrefixTree{std::move(graph_), root};
  }

private:
  BigInt weight(int i) const {
    return weight_prefix_[static_cast<size_t>(i)] -
           weight_prefix_[static_cast<size_t>(i - 1)];
  }

  // Remaining leaf count of index i within subproblem s.
  BigInt count(const Split& s, int i) const {
    if (i == s.lo) return s.cnt_lo;
    if (i == s.hi) return s.cnt_hi;
    return weight(i);
  }

  // Sum of remaining counts over [s.lo, m]; 0 for m < s.lo.
  BigInt sum_to(const Split& s, int m) const {
    if (m < s.lo) return 0;
    BigInt sum = weight_prefix_[static_cast<size_t>(m)] -
                 weight_prefix_[static_cast<size_t>(s.lo - 1)] -
                 (weight(s.lo) - s.cnt_lo);
    if (m == s.hi) sum -= weight(s.hi) - s.cnt_hi;
    return sum;
  }

  void step(Split s) {
    if (s.lo == s.hi) {
      *s.slot = s.lo - 1;  // input node id
      flush_ready_gates();
      return;
    }
    const BigInt total = sum_to(s, s.hi);
    // If all leaves fit into the right subtree, the left subtree of the
    // implicit Fibonacci tree consists of deleted leftover leaves and the
    // root contracts away: descend into the right subtree, budget k-2.
    while (s.k >= 4 && total <= fib_.fib(s.k - 2)) s.k -= 2;

    // The right subtree holds the first F_{k-2} leaves (lowest indices);
    // exactly one input j straddles the boundary. f counts j's leaves that
    // lie in the right subtree, 0 < f <= count(j).
    const BigInt right_cap = fib_.fib(s.k - 2);
    const int j = find_straddler(s, right_cap);
    const BigInt f = right_cap - sum_to(s, j - 1);

    // j joins the right side iff its right-subtree leaves already cover a
    // whole Fibonacci subtree of size F_{t_j+1}; ties go right.
    bool go_right = f >= fib_.fib(times_[static_cast<size_t>(j - 1)] + 1);
    // A partition that empties one side is never kept: the boundary index
    // moves to the other side instead.
    if (go_right && j == s.hi) go_right = false;
    if (!go_right && j == s.lo) go_right = true;

    pending_.push_back(PendingGate{s.slot});
    PendingGate& gate = pending_.back();

    Split right{s.lo, go_right ? j : j - 1, s.k - 2, s.cnt_lo, 0, &gate.right};
    right.cnt_hi = go_right ? f
                            : (right.hi == s.lo ? s.cnt_lo : weight(right.hi));
    if (right.lo == right.hi) right.cnt_lo = right.cnt_hi;

    Split left{go_right ? j + 1 : j, s.hi, s.k - 1, 0, s.cnt_hi, &gate.left};
    left.cnt_lo = go_right ? (left.lo == s.hi ? s.cnt_hi : weight(left.lo))
                           : count(s, j) - f;
    if (left.lo == left.hi) left.cnt_hi = left.cnt_lo;

    stack_.push_back(std::move(left));
    stack_.push_back(std::move(right));
  }

  // First index m in [lo, hi] whose running count sum reaches the
  // right-subtree capacity. Exists because the total exceeds the capacity.
  int find_straddler(const Split& s, const BigInt& right_cap) const {
    int lo = s.lo;
    int hi = s.hi;
    while (lo < hi) {
      const int mid = lo + (hi - lo) / 2;
      if (sum_to(s, mid) >= right_cap) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    return lo;
  }

  // Emits gates whose subtrees are complete. Post-order emission keeps the
  // node array topologically sorted.
  void flush_ready_gates() {
    while (!pending_.empty() && pending_.back().left >= 0 &&
           pending_.back().right >= 0) {
      const PendingGate g = pending_.back();
      pending_.pop_back();
      *g.slot = graph_.add_gate(g.left, g.right);
    }
  }

  std::span<const int> times_;
  FibCache& fib_;
  PrefixGraph graph_;
  std::vector<BigInt> weight_prefix_;
  std::vector<Split> stack_;
  std::deque<PendingGate> pending_;
};

}  // namespace

PrefixTree synthesize_carry_tree(std::span<const int> times) {
  FibCache fib;
  CarryBuilder builder(times, fib);
  const int k = fib.min_fib_index_at_least(builder.total_weight());
  return builder.build(k);
}

CarrySynthResult synthesize_carry(const ArrivalProfile& a,
                                  const CarrySynthOptions& opts) {
  const bool cap = opts.cap == CapMode::on ||
                   (opts.cap == CapMode::automatic && a.n() >= 1024);
  CarrySynthResult result;
  FibCache fib;
  if (cap) {
    const CappedProfile capped = cap_profile(a, opts.gamma);
    CarryBuilder builder(capped.profile.times(), fib);
    const int k = fib.min_fib_index_at_least(builder.total_weight());
    result.tree = builder.build(k);
    result.k = k + capped.shift;
    result.shift = capped.shift;
    result.capped = true;
  } else {
    CarryBuilder builder(a.times(), fib);
    const int k = fib.min_fib_index_at_least(builder.total_weight());
    result.tree = builder.build(k);
    result.k = k;
  }
  return result;
}

int delay_upper_bound(const ArrivalProfile& a) {
  return phi_log_bounds(a.times()).upper;
}

int delay_lower_bound(const ArrivalProfile& a) {
  return std::max(phi_log_bounds(a.times()).lower, a.max_time());
}

}  // namespace prefix_synth
