#pragma once

// Free-group words over the generators a, b, s, t.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hnn {

  enum class Gen : std::uint8_t { a, b, s, t };

  char gen_name(Gen g) noexcept;

  // Set of generators a word may use.
  class Alphabet {
   public:
    constexpr Alphabet(std::initializer_list<Gen> gens) noexcept {
      for (Gen g : gens) {
        _mask |= bit(g);
      }
    }

    constexpr bool contains(Gen g) const noexcept {
      return (_mask & bit(g)) != 0;
    }

    static constexpr Alphabet h() noexcept {
      return {Gen::a, Gen::b, Gen::s};
    }
    static constexpr Alphabet g() noexcept {
      return {Gen::a, Gen::b, Gen::s, Gen::t};
    }

   private:
    static constexpr std::uint8_t bit(Gen g) noexcept {
      return static_cast<std::uint8_t>(1u << static_cast<unsigned>(g));
    }
    std::uint8_t _mask = 0;
  };

  struct Letter {
    Gen          gen;
    std::int64_t exp;

    bool operator==(Letter const&) const = default;
  };

  // A freely reduced word: no zero exponents and no two adjacent letters on
  // the same generator. The empty word is the identity.
  class Word {
   public:
    Word() = default;
    // Free-reduces `letters`.
    explicit Word(std::vector<Letter> letters);
    Word(std::initializer_list<Letter> letters);

    std::span<Letter const> letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Letter const& operator[](std::size_t i) const {
      return _letters[i];
    }
    auto begin() const noexcept {
      return _letters.begin();
    }
    auto end() const noexcept {
      return _letters.end();
    }

    bool uses(Gen g) const noexcept;

    bool operator==(Word const&) const = default;

   private:
    friend Word free_reduce(std::span<Letter const> raw);
    std::vector<Letter> _letters;
  };

  Word free_reduce(std::span<Letter const> raw);
  Word invert(Word const& w);
  Word concat(Word const& lhs, Word const& rhs);
  Word power(Word const& w, std::int64_t n);
  // Sum of |exp| over all letters.
  std::uint64_t word_length(Word const& w);
  // Signed sum of the exponents of `g`.
  std::int64_t exponent_sum(Word const& w, Gen g);

  // word := unit* ; unit := gen ('^' signed-integer)?  The single token "1"
  // also denotes the identity so that printed output always re-parses.
  Word parse_word(std::string_view text, Alphabet alphabet = Alphabet::g());

  // Units separated by single spaces, "^e" only when e != 1, "1" for the
  // identity.
  std::string to_string(Word const& w);

}  // namespace hnn
