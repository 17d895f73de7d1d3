#include <optional>

#include "doctest.h"
#include "hnn/base.hpp"
#include "hnn/errors.hpp"

using namespace hnn;

namespace {
  // Brute-force search for m with c - m * g in the canonical box.
  std::optional<Decomposition> search(BaseElem c, BaseElem g, bool by_y,
                                      std::int64_t modulus) {
    for (std::int64_t m = -400; m <= 400; ++m) {
      BaseElem rep{c.x - m * g.x, c.y - m * g.y};
      std::int64_t coord = by_y ? rep.y : rep.x;
      if (coord >= 0 && coord < modulus) {
        return Decomposition{m, rep};
      }
    }
    return std::nullopt;
  }

  bool search_member(BaseElem c, BaseElem g) {
    for (std::int64_t m = -400; m <= 400; ++m) {
      if (c.x == m * g.x && c.y == m * g.y) {
        return true;
      }
    }
    return false;
  }
}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(HnnParams(0, 4, 0), ContractError);
  CHECK_THROWS_AS(HnnParams(-1, 4, 0), ContractError);
  CHECK_THROWS_AS(HnnParams(2, 0, 0), ContractError);
  CHECK_NOTHROW(HnnParams(1, 0, 3));
  CHECK(HnnParams::paper() == HnnParams(2, 4, 0));
}

TEST_CASE("membership: examples") {
  auto P = HnnParams::paper();
  CHECK(member_A({4, 0}, P));
  CHECK_FALSE(member_A({1, 0}, P));
  CHECK_FALSE(member_A({2, 1}, P));
  CHECK(member_B({6, 2}, HnnParams(2, 3, 1)));
  CHECK_FALSE(member_B({6, 1}, HnnParams(2, 3, 1)));
  CHECK(member_B({-8, 0}, P));
  CHECK_FALSE(member_B({2, 0}, P));
}

TEST_CASE("decompositions: examples") {
  CHECK(decompose_A({5, 3}, HnnParams::paper()) == Decomposition{2, {1, 3}});
  CHECK(decompose_B({5, 2}, HnnParams(2, 3, 1)) == Decomposition{2, {-1, 0}});
  CHECK(decompose_B({0, 0}, HnnParams::paper()) == Decomposition{0, {0, 0}});
  CHECK(decompose_A({-3, 0}, HnnParams::paper()) == Decomposition{-2, {1, 0}});
}

TEST_CASE("theta: examples") {
  auto P = HnnParams::paper();
  CHECK(theta(1, P) == BaseElem{4, 0});
  CHECK(theta_inv({4, 0}, P) == 1);
  CHECK(theta(0, HnnParams(3, 5, 2)) == BaseElem{0, 0});
  CHECK_THROWS_AS(theta_inv({2, 0}, P), ContractError);
}

TEST_CASE("decompositions match brute force on |x|,|y| <= 50") {
  for (auto params : {HnnParams(2, 4, 0), HnnParams(2, 3, 1), HnnParams(3, 5, 2),
                      HnnParams(1, -3, 0), HnnParams(4, 2, -3),
                      HnnParams(5, 0, 2)}) {
    CAPTURE(params.to_string());
    std::int64_t const qk_mod =
        params.k() != 0 ? std::abs(params.k()) : std::abs(params.q());
    for (std::int64_t x = -50; x <= 50; ++x) {
      for (std::int64_t y = -50; y <= 50; ++y) {
        BaseElem c{x, y};
        auto     da = decompose_A(c, params);
        auto     db = decompose_B(c, params);
        REQUIRE(da.m * params.a_gen() + da.rep == c);
        REQUIRE(db.m * params.b_gen() + db.rep == c);
        REQUIRE(da == *search(c, params.a_gen(), false, params.p()));
        REQUIRE(db == *search(c, params.b_gen(), params.k() != 0, qk_mod));
        REQUIRE(member_A(c, params) == da.rep.is_identity());
        REQUIRE(member_B(c, params) == db.rep.is_identity());
        REQUIRE(member_A(c, params) == search_member(c, params.a_gen()));
        REQUIRE(member_B(c, params) == search_member(c, params.b_gen()));
        REQUIRE(decompose_B(c + params.b_gen(), params).rep == db.rep);
        REQUIRE(decompose_A(c + params.a_gen(), params).rep == da.rep);
        if (member_B(c, params)) {
          REQUIRE(theta(theta_inv(c, params), params) == c);
        }
      }
    }
    for (std::int64_t m = -100; m <= 100; ++m) {
      REQUIRE(theta_inv(theta(m, params), params) == m);
    }
  }
}

TEST_CASE("base arithmetic is checked") {
  BaseElem big{INT64_MAX, 0};
  CHECK_THROWS_AS((big + BaseElem{1, 0}), OverflowError);
  CHECK_THROWS_AS(3 * big, OverflowError);
}
