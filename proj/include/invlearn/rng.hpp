#pragma once

#include <cstdint>

namespace invlearn {

// Counter-based generator (xoshiro256** seeded by splitmix64). Streams with the
// same (seed, replication_index) reproduce the same sequence bit for bit, and
// the splitmix scrambling keeps distinct replications decorrelated.
class RandomStream {
 public:
  RandomStream() : RandomStream(0, 0) {}
  RandomStream(std::uint64_t seed, std::uint64_t replication_index);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t replication_index() const { return replication_; }

  std::uint64_t next_u64();

  // uniform in [0, 1) with 53-bit resolution
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // uniform in the open interval (0, 1); safe as input to inverse CDFs
  double next_open01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::uint64_t seed_;
  std::uint64_t replication_;
  std::uint64_t s_[4];
};

}  // namespace invlearn
