#include <vector>

#include "doctest.h"
#include "hnn/errors.hpp"
#include "hnn/random.hpp"
#include "hnn/words.hpp"
#include "support/generators.hpp"

using namespace hnn;

namespace {
  // Reference free reduction: expand to unit letters, cancel with a stack,
  // then regroup.
  Word reference_reduce(std::vector<Letter> const& raw) {
    std::vector<Letter> units;
    for (auto const& l : raw) {
      int step = l.exp > 0 ? 1 : -1;
      for (std::int64_t i = 0; i != l.exp; i += step) {
        if (!units.empty() && units.back().gen == l.gen
            && units.back().exp == -step) {
          units.pop_back();
        } else {
          units.push_back({l.gen, step});
        }
      }
    }
    std::vector<Letter> grouped;
    for (auto const& u : units) {
      if (!grouped.empty() && grouped.back().gen == u.gen) {
        grouped.back().exp += u.exp;
      } else {
        grouped.push_back(u);
      }
    }
    // `grouped` is already reduced; free_reduce only repackages it.
    return free_reduce(grouped);
  }
}  // namespace

TEST_CASE("parse_word: examples") {
  CHECK(parse_word("s^-1 a s a^-2")
        == Word{{Gen::s, -1}, {Gen::a, 1}, {Gen::s, 1}, {Gen::a, -2}});
  CHECK(parse_word("a^0").empty());
  CHECK(parse_word("a a^2 b b^-1") == Word{{Gen::a, 3}});
  CHECK(parse_word("").empty());
  CHECK(parse_word("  1 ").empty());
  CHECK(parse_word("s^-1a^+2s") == Word{{Gen::s, -1}, {Gen::a, 2}, {Gen::s, 1}});
}

TEST_CASE("parse_word: errors carry positions") {
  auto position_of = [](char const* text) -> std::size_t {
    try {
      parse_word(text);
    } catch (ParseError const& e) {
      return e.position();
    }
    return std::size_t(-1);
  };
  CHECK(position_of("a x") == 2);
  CHECK(position_of("A") == 0);  // uppercase is not an inverse
  CHECK(position_of("a^") == 2);
  CHECK(position_of("a^-") == 2);
  CHECK(position_of("a^2)") == 3);
  CHECK(position_of("a ^ 2") == 2);
  CHECK(position_of("1 a") == 0);
  CHECK(position_of("a^99999999999999999999") == 2);
  CHECK_THROWS_AS(parse_word("s t", Alphabet::h()), AlphabetError);
  CHECK_NOTHROW(parse_word("s t", Alphabet::g()));
}

TEST_CASE("free_reduce: examples") {
  CHECK(free_reduce(std::vector<Letter>{{Gen::a, 1}, {Gen::a, -1}}).empty());
  CHECK(free_reduce(std::vector<Letter>{
                        {Gen::s, 1}, {Gen::s, 1}, {Gen::b, 2}, {Gen::b, -2},
                        {Gen::s, -2}})
            .empty());
  CHECK(free_reduce(std::vector<Letter>{{Gen::a, 2}, {Gen::b, 0}, {Gen::a, 3}})
        == Word{{Gen::a, 5}});
}

TEST_CASE("free_reduce agrees with unit-letter cancellation") {
  Rng rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Letter> raw;
    std::size_t         n = rng.below(12);
    for (std::size_t i = 0; i < n; ++i) {
      raw.push_back({static_cast<Gen>(rng.below(4)), rng.uniform(-3, 3)});
    }
    Word w = free_reduce(raw);
    CHECK(w == reference_reduce(raw));
    for (std::size_t i = 0; i < w.size(); ++i) {
      CHECK(w[i].exp != 0);
      if (i > 0) {
        CHECK(w[i].gen != w[i - 1].gen);
      }
    }
  }
}

TEST_CASE("invert, concat, word_length: examples") {
  CHECK(invert(Word{{Gen::s, -1}, {Gen::a, 1}})
        == Word{{Gen::a, -1}, {Gen::s, 1}});
  CHECK(concat(Word{{Gen::a, 1}}, Word{{Gen::a, -1}}).empty());
  CHECK(word_length(parse_word("s^-1 a s a^-2")) == 5);
  CHECK(exponent_sum(parse_word("t a t^-2 s t^3"), Gen::t) == 2);
  CHECK(power(parse_word("a s"), -2) == parse_word("s^-1 a^-1 s^-1 a^-1"));
}

TEST_CASE("word laws on random words") {
  Rng rng(12);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Letter> raw;
    std::size_t         n = rng.below(10);
    for (std::size_t i = 0; i < n; ++i) {
      raw.push_back({static_cast<Gen>(rng.below(4)), rng.uniform(-5, 5)});
    }
    Word w = free_reduce(raw);
    CHECK(free_reduce(w.letters()) == w);
    CHECK(invert(invert(w)) == w);
    CHECK(concat(w, invert(w)).empty());
    CHECK(parse_word(to_string(w)) == w);
  }
}

TEST_CASE("printer format") {
  CHECK(to_string(Word{}) == "1");
  CHECK(to_string(parse_word("s^-1 b s s")) == "s^-1 b s^2");
}

TEST_CASE("exponent overflow is reported") {
  CHECK_THROWS_AS(parse_word("a^9223372036854775807 a"), OverflowError);
  CHECK_NOTHROW(parse_word("a^9223372036854775807 a^-1"));
}
