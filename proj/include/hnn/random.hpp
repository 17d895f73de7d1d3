#pragma once

// Platform-stable pseudo-randomness. std::mt19937_64's output sequence is
// fixed by the standard, while the std distributions are not, so sampling is
// done here by hand.

#include <cstdint>
#include <random>

namespace hnn {

  // splitmix64 finaliser; used to derive independent per-trial seeds.
  constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z               = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z               = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  class Rng {
   public:
    explicit Rng(std::uint64_t seed) : _engine(seed) {}

    // Uniform on [0, n), n > 0.
    std::uint64_t below(std::uint64_t n) {
      std::uint64_t const limit = UINT64_MAX - UINT64_MAX % n;
      std::uint64_t       r;
      do {
        r = _engine();
      } while (r >= limit);
      return r % n;
    }

    // Uniform on [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
      auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
      return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo)
                                       + below(span + 1));
    }

    bool coin() {
      return (_engine() >> 63) != 0;
    }

    std::uint64_t next() {
      return _engine();
    }

   private:
    std::mt19937_64 _engine;
  };

}  // namespace hnn
