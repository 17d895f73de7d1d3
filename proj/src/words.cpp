#include "hnn/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "hnn/errors.hpp"
#include "checked.hpp"

namespace hnn {

  char gen_name(Gen g) noexcept {
    switch (g) {
      case Gen::a:
        return 'a';
      case Gen::b:
        return 'b';
      case Gen::s:
        return 's';
      case Gen::t:
        return 't';
    }
    return '?';
  }

  Word::Word(std::vector<Letter> letters)
      : _letters(free_reduce(letters)._letters) {}

  Word::Word(std::initializer_list<Letter> letters)
      : Word(std::vector<Letter>(letters)) {}

  bool Word::uses(Gen g) const noexcept {
    for (auto const& l : _letters) {
      if (l.gen == g) {
        return true;
      }
    }
    return false;
  }

  Word free_reduce(std::span<Letter const> raw) {
    // A single left-to-right stack pass reaches the fixed point: merging
    // into the top can only expose the letter below it.
    std::vector<Letter> out;
    out.reserve(raw.size());
    for (auto const& l : raw) {
      if (l.exp == 0) {
        continue;
      }
      if (!out.empty() && out.back().gen == l.gen) {
        out.back().exp = detail::checked_add(out.back().exp, l.exp);
        if (out.back().exp == 0) {
          out.pop_back();
        }
      } else {
        out.push_back(l);
      }
    }
    Word w;
    w._letters = std::move(out);
    return w;
  }

  Word invert(Word const& w) {
    std::vector<Letter> out(w.begin(), w.end());
    std::reverse(out.begin(), out.end());
    for (auto& l : out) {
      l.exp = detail::checked_neg(l.exp);
    }
    return free_reduce(out);
  }

  Word concat(Word const& lhs, Word const& rhs) {
    std::vector<Letter> out(lhs.begin(), lhs.end());
    out.insert(out.end(), rhs.begin(), rhs.end());
    return free_reduce(out);
  }

  Word power(Word const& w, std::int64_t n) {
    if (n == 0 || w.empty()) {
      return {};
    }
    Word         base  = n > 0 ? w : invert(w);
    std::int64_t count = n > 0 ? n : detail::checked_neg(n);
    if (base.size() == 1) {
      return Word{{base[0].gen, detail::checked_mul(base[0].exp, count)}};
    }
    std::vector<Letter> raw;
    raw.reserve(base.size() * static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
      raw.insert(raw.end(), base.begin(), base.end());
    }
    return free_reduce(raw);
  }

  std::uint64_t word_length(Word const& w) {
    std::uint64_t n = 0;
    for (auto const& l : w) {
      n += l.exp < 0 ? static_cast<std::uint64_t>(-(l.exp + 1)) + 1
                     : static_cast<std::uint64_t>(l.exp);
    }
    return n;
  }

  std::int64_t exponent_sum(Word const& w, Gen g) {
    std::int64_t n = 0;
    for (auto const& l : w) {
      if (l.gen == g) {
        n = detail::checked_add(n, l.exp);
      }
    }
    return n;
  }

  namespace {
    bool is_space(char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    }

    bool gen_from_char(char c, Gen& g) {
      switch (c) {
        case 'a':
          g = Gen::a;
          return true;
        case 'b':
          g = Gen::b;
          return true;
        case 's':
          g = Gen::s;
          return true;
        case 't':
          g = Gen::t;
          return true;
        default:
          return false;
      }
    }
  }  // namespace

  Word parse_word(std::string_view text, Alphabet alphabet) {
    std::size_t first = 0;
    std::size_t last  = text.size();
    while (first < last && is_space(text[first])) {
      ++first;
    }
    while (last > first && is_space(text[last - 1])) {
      --last;
    }
    if (text.substr(first, last - first) == "1") {
      return {};
    }

    std::vector<Letter> raw;
    std::size_t         i = first;
    while (i < last) {
      char c = text[i];
      if (is_space(c)) {
        ++i;
        continue;
      }
      Gen g;
      if (!gen_from_char(c, g)) {
        throw ParseError(std::string("unknown generator '") + c + "'", i);
      }
      if (!alphabet.contains(g)) {
        throw AlphabetError(std::string("generator '") + c
                            + "' is not allowed here (position "
                            + std::to_string(i) + ")");
      }
      ++i;
      std::int64_t exp = 1;
      if (i < last && text[i] == '^') {
        ++i;
        std::size_t start = i;
        if (i < last && (text[i] == '-' || text[i] == '+')) {
          ++i;
        }
        std::size_t digits = i;
        while (i < last && std::isdigit(static_cast<unsigned char>(text[i]))) {
          ++i;
        }
        if (i == digits) {
          throw ParseError("malformed exponent", start);
        }
        char const* b   = text.data() + (text[start] == '+' ? start + 1 : start);
        auto [ptr, ec] = std::from_chars(b, text.data() + i, exp);
        if (ec != std::errc{}) {
          throw ParseError("exponent out of range", start);
        }
      }
      raw.push_back({g, exp});
    }
    return free_reduce(raw);
  }

  std::string to_string(Word const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& l : w) {
      if (!out.empty()) {
        out += ' ';
      }
      out += gen_name(l.gen);
      if (l.exp != 1) {
        out += '^';
        out += std::to_string(l.exp);
      }
    }
    return out;
  }

}  // namespace hnn
