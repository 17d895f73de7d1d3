#pragma once

#include <cstddef>
#include <cstdint>

namespace hnn {

  // Resource caps shared by the rewriting engines. Exceeding any of them
  // raises CapExceeded; nothing is ever silently truncated.
  struct Limits {
    std::size_t  max_syllables = 10'000;
    std::int64_t max_exponent  = std::int64_t{1} << 62;
    // Largest left t-power a sandwich may be lifted to during comparison.
    unsigned max_lift = 32;

    bool operator==(Limits const&) const = default;
  };

}  // namespace hnn
