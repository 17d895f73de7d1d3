#pragma once

// Independent check for rewriting in H(p,q,k): a representation into the
// affine group of F_P, P = 2^61 - 1,
//
//   a -> x + 1,  b -> x + beta,  s -> lambda x,
//
// with lambda, beta chosen so that s^-1 a^p s = a^q b^k holds, i.e.
// p / lambda = q + k beta. Equal elements of H have equal images, so any
// disagreement exposes an unsound rewrite. The representation is not
// faithful; it is a necessary condition only.

#include <cstdint>

#include "hnn/base.hpp"
#include "hnn/random.hpp"
#include "hnn/words.hpp"

namespace oracle {

  using u64  = std::uint64_t;
  using u128 = unsigned __int128;

  inline constexpr u64 P = (u64{1} << 61) - 1;

  inline u64 mulm(u64 x, u64 y) {
    return static_cast<u64>((static_cast<u128>(x) * y) % P);
  }
  inline u64 addm(u64 x, u64 y) {
    return (x + y) % P;
  }
  inline u64 from_int(std::int64_t v) {
    std::int64_t r = v % static_cast<std::int64_t>(P);
    return static_cast<u64>(r < 0 ? r + static_cast<std::int64_t>(P) : r);
  }
  inline u64 powm(u64 x, u64 e) {
    u64 r = 1;
    while (e) {
      if (e & 1) {
        r = mulm(r, x);
      }
      x = mulm(x, x);
      e >>= 1;
    }
    return r;
  }
  inline u64 invm(u64 x) {
    return powm(x, P - 2);
  }

  // x -> alpha x + beta, composed left to right as matrices.
  struct Affine {
    u64 alpha = 1;
    u64 beta  = 0;

    bool operator==(Affine const&) const = default;
  };

  inline Affine operator*(Affine l, Affine r) {
    return {mulm(l.alpha, r.alpha), addm(mulm(l.alpha, r.beta), l.beta)};
  }

  inline Affine inverse(Affine m) {
    u64 ia = invm(m.alpha);
    return {ia, mulm(P - ia, m.beta) % P};
  }

  inline Affine power(Affine m, std::int64_t n) {
    if (n < 0) {
      m = inverse(m);
    }
    u64    e = n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
    Affine r;
    while (e) {
      if (e & 1) {
        r = r * m;
      }
      m = m * m;
      e >>= 1;
    }
    return r;
  }

  class AffineRep {
   public:
    AffineRep(hnn::HnnParams const& params, std::uint64_t seed) {
      hnn::Rng rng(seed);
      u64      p = from_int(params.p());
      u64      q = from_int(params.q());
      u64      k = from_int(params.k());
      if (params.k() != 0) {
        _lambda = 2 + rng.below(P - 3);
        // beta = (p / lambda - q) / k
        _beta = mulm(addm(mulm(p, invm(_lambda)), P - q), invm(k));
      } else {
        _lambda = mulm(p, invm(q));
        _beta   = 2 + rng.below(P - 3);
      }
    }

    Affine gen(hnn::Gen g) const {
      switch (g) {
        case hnn::Gen::a:
          return {1, 1};
        case hnn::Gen::b:
          return {1, _beta};
        case hnn::Gen::s:
          return {_lambda, 0};
        default:
          return {};
      }
    }

    Affine operator()(hnn::Word const& w) const {
      Affine r;
      for (auto const& l : w) {
        r = r * power(gen(l.gen), l.exp);
      }
      return r;
    }

   private:
    u64 _lambda = 1;
    u64 _beta   = 0;
  };

}  // namespace oracle
