#pragma once

// One-shot verification battery over every module, producing a deterministic
// comparable payload (config echoed, findings included) and a separate
// timing block that is excluded from comparisons.

#include <cstdint>
#include <string>
#include <vector>

namespace boxlab {

struct VerifyAllReport {
  std::string payload;  // byte-identical across runs with the same config
  std::string timing;   // wall-clock data, never compared
  bool all_ok = false;
  std::vector<std::string> findings;
};

VerifyAllReport run_verify_all(std::uint64_t max_vertices);

}  // namespace boxlab
