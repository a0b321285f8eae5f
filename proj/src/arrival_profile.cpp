#include "prefix_synth/arrival_profile.hpp"

#include <algorithm>
#include <stdexcept>

namespace prefix_synth {

ArrivalProfile::ArrivalProfile(std::vector<int> times) : times_(std::move(times)) {
  if (times_.empty()) {
    throw std::invalid_argument("ArrivalProfile: at least one input required");
  }
  for (const int t : times_) {
    if (t < 0) throw std::invalid_argument("ArrivalProfile: negative arrival time");
  }
}

int ArrivalProfile::max_time() const {
  return *std::max_element(times_.begin(), times_.end());
}

int ArrivalProfile::min_time() const {
  return *std::min_element(times_.begin(), times_.end());
}

}  // namespace prefix_synth
