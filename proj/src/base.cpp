#include "hnn/base.hpp"

#include "checked.hpp"
#include "hnn/errors.hpp"

namespace hnn {

  using detail::checked_add;
  using detail::checked_mul;
  using detail::checked_neg;
  using detail::checked_sub;
  using detail::floor_mod;

  BaseElem operator+(BaseElem lhs, BaseElem rhs) {
    return {checked_add(lhs.x, rhs.x), checked_add(lhs.y, rhs.y)};
  }

  BaseElem operator-(BaseElem lhs, BaseElem rhs) {
    return {checked_sub(lhs.x, rhs.x), checked_sub(lhs.y, rhs.y)};
  }

  BaseElem operator-(BaseElem c) {
    return {checked_neg(c.x), checked_neg(c.y)};
  }

  BaseElem operator*(std::int64_t m, BaseElem c) {
    return {checked_mul(m, c.x), checked_mul(m, c.y)};
  }

  HnnParams::HnnParams(std::int64_t p, std::int64_t q, std::int64_t k)
      : _p(p), _q(q), _k(k) {
    if (p < 1) {
      throw ContractError("H(p,q,k) requires p >= 1, got p = "
                          + std::to_string(p));
    }
    if (q == 0 && k == 0) {
      throw ContractError(
          "H(p,q,k) requires (q,k) != (0,0): the associated subgroup "
          "<a^q b^k> must be infinite cyclic");
    }
  }

  std::string HnnParams::to_string() const {
    return "(" + std::to_string(_p) + "," + std::to_string(_q) + ","
           + std::to_string(_k) + ")";
  }

  bool member_A(BaseElem c, HnnParams const& params) {
    return c.y == 0 && c.x % params.p() == 0;
  }

  bool member_B(BaseElem c, HnnParams const& params) {
    return decompose_B(c, params).rep.is_identity();
  }

  Decomposition decompose_A(BaseElem c, HnnParams const& params) {
    std::int64_t r = floor_mod(c.x, params.p());
    return {(c.x - r) / params.p(), {r, c.y}};
  }

  Decomposition decompose_B(BaseElem c, HnnParams const& params) {
    std::int64_t const q = params.q();
    std::int64_t const k = params.k();
    if (k != 0) {
      std::int64_t ry = floor_mod(c.y, k);
      std::int64_t m  = checked_sub(c.y, ry) / k;
      return {m, {checked_sub(c.x, checked_mul(m, q)), ry}};
    }
    // k == 0 forces q != 0.
    std::int64_t rx = floor_mod(c.x, q);
    std::int64_t m  = checked_sub(c.x, rx) / q;
    return {m, {rx, c.y}};
  }

  BaseElem theta(std::int64_t m, HnnParams const& params) {
    return m * params.b_gen();
  }

  std::int64_t theta_inv(BaseElem c, HnnParams const& params) {
    auto d = decompose_B(c, params);
    if (!d.rep.is_identity()) {
      throw ContractError("theta_inv: element is not in the subgroup <a^q b^k>");
    }
    return d.m;
  }

}  // namespace hnn
