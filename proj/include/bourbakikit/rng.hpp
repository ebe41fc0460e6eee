#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace bbk {

// Deterministic bounded sampler. mt19937_64 output is specified bit for bit,
// and the rejection step below avoids distribution classes whose streams vary
// across standard libraries.
class BoundedRng {
 public:
  explicit BoundedRng(std::uint64_t seed) : eng_(seed) {}

  long uniform(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / span * span;
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return lo + static_cast<long>(v % span);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace bbk
