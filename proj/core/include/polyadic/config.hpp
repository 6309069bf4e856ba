#pragma once

#include <cstdint>

namespace polyadic {

struct RunConfig {
  // Maximum number of probes a single exhaustive scan may perform.
  std::uint64_t budget = 10'000'000;
  // Worker threads for exhaustive scans. Results do not depend on it.
  unsigned jobs = 1;
  // Seed for sampled checks.
  std::uint64_t seed = 20240601;
};

}  // namespace polyadic
