#pragma once

#include <cstdint>

namespace workdeficit {

// Counter-based generator: every draw is a pure function of (seed, stream,
// counter), so consumers seeded with distinct streams reproduce the same
// values no matter how work is scheduled across threads.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  double uniform();                      // [0, 1)
  double uniform(double lo, double hi);  // [lo, hi)
  double normal();                       // standard normal (Box-Muller)

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace workdeficit
