#pragma once

// The base group C = <a, b> = Z^2 of H(p,q,k) and its associated cyclic
// subgroups A = <a^p> and B = <a^q b^k>.

#include <cstdint>
#include <string>

namespace hnn {

  // a^x b^y.
  struct BaseElem {
    std::int64_t x = 0;
    std::int64_t y = 0;

    bool is_identity() const noexcept {
      return x == 0 && y == 0;
    }

    bool operator==(BaseElem const&) const = default;
    auto operator<=>(BaseElem const&) const = default;
  };

  BaseElem operator+(BaseElem lhs, BaseElem rhs);
  BaseElem operator-(BaseElem lhs, BaseElem rhs);
  BaseElem operator-(BaseElem c);
  BaseElem operator*(std::int64_t m, BaseElem c);

  // Parameters of H(p,q,k) = < a, b, s | b^-1 a b = a, s^-1 a^p s = a^q b^k >.
  class HnnParams {
   public:
    // Throws ContractError unless p >= 1 and (q, k) != (0, 0).
    HnnParams(std::int64_t p, std::int64_t q, std::int64_t k);

    // The group H of the non-Hopfian construction, (2, 4, 0).
    static HnnParams paper() {
      return {2, 4, 0};
    }

    std::int64_t p() const noexcept {
      return _p;
    }
    std::int64_t q() const noexcept {
      return _q;
    }
    std::int64_t k() const noexcept {
      return _k;
    }

    // Generator of A, i.e. (p, 0).
    BaseElem a_gen() const noexcept {
      return {_p, 0};
    }
    // Generator of B, i.e. (q, k).
    BaseElem b_gen() const noexcept {
      return {_q, _k};
    }

    std::string to_string() const;

    bool operator==(HnnParams const&) const = default;

   private:
    std::int64_t _p, _q, _k;
  };

  // c = m * generator + rep, rep the canonical coset representative.
  struct Decomposition {
    std::int64_t m;
    BaseElem     rep;

    bool operator==(Decomposition const&) const = default;
  };

  bool member_A(BaseElem c, HnnParams const& params);
  bool member_B(BaseElem c, HnnParams const& params);

  // rep.x in [0, p), rep.y = c.y.
  Decomposition decompose_A(BaseElem c, HnnParams const& params);
  // rep.y in [0, |k|) when k != 0, otherwise rep = (x, 0) with x in [0, |q|).
  Decomposition decompose_B(BaseElem c, HnnParams const& params);

  // Image of a^{mp} under conjugation by s: (mq, mk).
  BaseElem theta(std::int64_t m, HnnParams const& params);
  // Inverse of theta; throws ContractError when c is not in B.
  std::int64_t theta_inv(BaseElem c, HnnParams const& params);

}  // namespace hnn
