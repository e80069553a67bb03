#pragma once

#include <cstdint>
#include <random>

namespace mlq {

// Reproducible random stream: identical (seed, stream_id) give identical draws,
// distinct stream_ids give statistically independent streams. Replicated
// simulations parallelize by assigning one stream per replica.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  // uniform on the open interval (0,1); never returns 0 or 1
  double uniform();
  // unit-rate exponential
  double exponential();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 gen_;
};

}  // namespace mlq
