#include "hnn/hnn_word.hpp"

#include <algorithm>

#include "checked.hpp"
#include "hnn/errors.hpp"
#include "hnn/random.hpp"

namespace hnn {

  struct HWordAccess {
    static HWord make(HnnParams const& params, BaseElem prefix,
                      std::vector<Syllable> tail, bool reduced, bool normal) {
      HWord h(params);
      h._prefix  = prefix;
      h._tail    = std::move(tail);
      h._reduced = reduced || h._tail.empty();
      h._normal  = normal || h._tail.empty();
      return h;
    }
  };

  HWord::HWord(HnnParams params, BaseElem prefix, std::vector<Syllable> tail)
      : _params(params), _prefix(prefix), _tail(std::move(tail)) {
    for (auto const& syl : _tail) {
      if (syl.eps != 1 && syl.eps != -1) {
        throw ContractError("syllable sign must be +1 or -1");
      }
    }
    _reduced = _normal = _tail.empty();
  }

  namespace {
    void append_base(std::vector<Letter>& out, BaseElem c) {
      if (c.x != 0) {
        out.push_back({Gen::a, c.x});
      }
      if (c.y != 0) {
        out.push_back({Gen::b, c.y});
      }
    }

    void check_base(BaseElem c, Limits const& limits) {
      auto too_big = [&](std::int64_t v) {
        return v > limits.max_exponent || v < -limits.max_exponent;
      };
      if (too_big(c.x) || too_big(c.y)) {
        throw CapExceeded("base exponent exceeds cap "
                          + std::to_string(limits.max_exponent));
      }
    }

    void check_length(std::size_t n, Limits const& limits) {
      if (n > limits.max_syllables) {
        throw CapExceeded("s-syllable count " + std::to_string(n)
                          + " exceeds cap "
                          + std::to_string(limits.max_syllables));
      }
    }

    void check_same_params(HWord const& lhs, HWord const& rhs) {
      if (!(lhs.params() == rhs.params())) {
        throw ContractError("words belong to different groups "
                            + lhs.params().to_string() + " vs "
                            + rhs.params().to_string());
      }
    }

    // If s^left c s^right is a pinch, the base element it collapses to.
    bool pinch_value(int left, BaseElem c, int right, HnnParams const& params,
                     BaseElem& out) {
      if (left == -1 && right == 1 && member_A(c, params)) {
        out = theta(decompose_A(c, params).m, params);
        return true;
      }
      if (left == 1 && right == -1 && member_B(c, params)) {
        out = theta_inv(c, params) * params.a_gen();
        return true;
      }
      return false;
    }

    // Incremental Britton reduction. The stack is always pinch-free, so the
    // only pinch a new syllable can create is with the top of the stack;
    // eliminating it is exactly the leftmost-first order.
    class Reducer {
     public:
      Reducer(HnnParams const& params, Limits const& limits)
          : _params(params), _limits(limits) {}

      void start(HWord const& h) {
        if (!(h.params() == _params)) {
          throw ContractError("parameter mismatch");
        }
        if (h.is_reduced()) {
          _prefix = h.prefix();
          _stack  = h.tail();
        } else {
          _prefix = {};
          _stack.clear();
          append(h);
        }
      }

      void append(HWord const& h) {
        last() = last() + h.prefix();
        check_base(last(), _limits);
        for (auto const& syl : h.tail()) {
          push(syl);
        }
      }

      void push(Syllable syl) {
        BaseElem r;
        if (!_stack.empty()
            && pinch_value(_stack.back().eps, _stack.back().c, syl.eps, _params,
                           r)) {
          _stack.pop_back();
          last() = last() + r + syl.c;
          check_base(last(), _limits);
          return;
        }
        check_base(syl.c, _limits);
        _stack.push_back(syl);
        check_length(_stack.size(), _limits);
      }

      HWord finish() {
        return HWordAccess::make(_params, _prefix, std::move(_stack), true,
                                 false);
      }

     private:
      BaseElem& last() {
        return _stack.empty() ? _prefix : _stack.back().c;
      }

      HnnParams             _params;
      Limits const&         _limits;
      BaseElem              _prefix;
      std::vector<Syllable> _stack;
    };
  }  // namespace

  Word HWord::to_word() const {
    std::vector<Letter> raw;
    raw.reserve(2 + 3 * _tail.size());
    append_base(raw, _prefix);
    for (auto const& syl : _tail) {
      raw.push_back({Gen::s, syl.eps});
      append_base(raw, syl.c);
    }
    return free_reduce(raw);
  }

  std::string to_string(HWord const& h) {
    return to_string(h.to_word());
  }

  HWord from_word(Word const& w, HnnParams const& params,
                  Limits const& limits) {
    BaseElem              prefix;
    std::vector<Syllable> tail;
    auto current = [&]() -> BaseElem& {
      return tail.empty() ? prefix : tail.back().c;
    };
    for (auto const& l : w) {
      switch (l.gen) {
        case Gen::a:
          current().x = detail::checked_add(current().x, l.exp);
          break;
        case Gen::b:
          current().y = detail::checked_add(current().y, l.exp);
          break;
        case Gen::s: {
          int eps = l.exp > 0 ? 1 : -1;
          check_length(tail.size() + word_length(Word{{Gen::s, l.exp}}),
                       limits);
          for (std::int64_t i = 0; i != l.exp; i += eps) {
            tail.push_back({eps, {}});
          }
          break;
        }
        case Gen::t:
          throw AlphabetError("the stable letter t does not belong to H");
      }
    }
    return HWord(params, prefix, std::move(tail));
  }

  HWord from_base(BaseElem c, HnnParams const& params) {
    return HWordAccess::make(params, c, {}, true, true);
  }

  HWord britton_reduce(HWord const& h, Limits const& limits) {
    if (h.is_reduced()) {
      return h;
    }
    Reducer r(h.params(), limits);
    r.start(h);
    return r.finish();
  }

  HWord britton_reduce_by(HWord const& h, PinchChooser const& choose,
                          Limits const& limits) {
    HnnParams const&      params = h.params();
    BaseElem              prefix = h.prefix();
    std::vector<Syllable> tail   = h.tail();
    std::vector<std::size_t> pinches;
    while (true) {
      pinches.clear();
      for (std::size_t i = 0; i + 1 < tail.size(); ++i) {
        BaseElem r;
        if (pinch_value(tail[i].eps, tail[i].c, tail[i + 1].eps, params, r)) {
          pinches.push_back(i);
        }
      }
      if (pinches.empty()) {
        break;
      }
      std::size_t i = pinches[choose(pinches.size()) % pinches.size()];
      BaseElem    r;
      pinch_value(tail[i].eps, tail[i].c, tail[i + 1].eps, params, r);
      BaseElem& before = i == 0 ? prefix : tail[i - 1].c;
      before           = before + r + tail[i + 1].c;
      check_base(before, limits);
      tail.erase(tail.begin() + static_cast<std::ptrdiff_t>(i),
                 tail.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    }
    return HWordAccess::make(params, prefix, std::move(tail), true, false);
  }

  HWord normal_form(HWord const& h, Limits const& limits) {
    if (h.is_normal()) {
      return h;
    }
    HWord                 reduced = britton_reduce(h, limits);
    HnnParams const&      params  = reduced.params();
    BaseElem              prefix  = reduced.prefix();
    std::vector<Syllable> tail    = reduced.tail();
    // Right to left: s (a^q b^k)^m = a^{mp} s and s^-1 a^{mp} = (a^q b^k)^m s^-1
    // move the subgroup part of each syllable into its left neighbour. Adding
    // an element of A (resp. B) to the neighbour cannot create a pinch.
    for (std::size_t i = tail.size(); i-- > 0;) {
      BaseElem& before = i == 0 ? prefix : tail[i - 1].c;
      if (tail[i].eps == 1) {
        auto d    = decompose_B(tail[i].c, params);
        tail[i].c = d.rep;
        before    = before + d.m * params.a_gen();
      } else {
        auto d    = decompose_A(tail[i].c, params);
        tail[i].c = d.rep;
        before    = before + theta(d.m, params);
      }
      check_base(before, limits);
    }
    return HWordAccess::make(params, prefix, std::move(tail), true, true);
  }

  HWord multiply(HWord const& lhs, HWord const& rhs, Limits const& limits) {
    check_same_params(lhs, rhs);
    Reducer r(lhs.params(), limits);
    r.start(lhs);
    r.append(rhs);
    return r.finish();
  }

  HWord inverse(HWord const& h) {
    std::vector<Syllable> tail;
    tail.reserve(h.tail().size());
    auto const& src = h.tail();
    // (c0 s^e1 c1 ... s^en cn)^-1 = (-cn) s^-en (-c_{n-1}) ... s^-e1 (-c0)
    for (std::size_t i = src.size(); i-- > 0;) {
      BaseElem next = i == 0 ? h.prefix() : src[i - 1].c;
      tail.push_back({-src[i].eps, -next});
    }
    BaseElem prefix = src.empty() ? -h.prefix() : -src.back().c;
    // Reversal maps pinches to pinches, so reducedness is preserved.
    return HWordAccess::make(h.params(), prefix, std::move(tail),
                             h.is_reduced(), false);
  }

  HWord power(HWord const& h, std::int64_t n, Limits const& limits) {
    HWord base   = britton_reduce(n >= 0 ? h : inverse(h), limits);
    HWord result = from_base({}, h.params());
    // Unsigned magnitude so that n = INT64_MIN is handled.
    std::uint64_t e = n >= 0 ? static_cast<std::uint64_t>(n)
                             : static_cast<std::uint64_t>(-(n + 1)) + 1;
    if (base.tail().empty()) {
      if (e > static_cast<std::uint64_t>(INT64_MAX)) {
        throw OverflowError("64-bit exponent overflow in power");
      }
      return from_base(static_cast<std::int64_t>(e) * base.prefix(), h.params());
    }
    while (e != 0) {
      if (e & 1) {
        result = multiply(result, base, limits);
      }
      e >>= 1;
      if (e != 0) {
        base = multiply(base, base, limits);
      }
    }
    return result;
  }

  bool eq_h(HWord const& lhs, HWord const& rhs, Limits const& limits) {
    check_same_params(lhs, rhs);
    HWord l = normal_form(lhs, limits);
    HWord r = normal_form(rhs, limits);
    return l.prefix() == r.prefix() && l.tail() == r.tail();
  }

  bool eq_h_via_product(HWord const& lhs, HWord const& rhs,
                        Limits const& limits) {
    check_same_params(lhs, rhs);
    HWord q = multiply(britton_reduce(lhs, limits), inverse(rhs), limits);
    // Britton's Lemma: a reduced word with an s-letter is nontrivial.
    return q.tail().empty() && q.prefix().is_identity();
  }

  bool is_trivial_h(HWord const& h, Limits const& limits) {
    HWord r = britton_reduce(h, limits);
    return r.tail().empty() && r.prefix().is_identity();
  }

  std::size_t s_length(HWord const& h, Limits const& limits) {
    return britton_reduce(h, limits).tail().size();
  }

  HWord random_reduced(std::uint64_t seed, std::size_t n, std::int64_t bound,
                       HnnParams const& params) {
    if (bound < 1) {
      throw ContractError("random_reduced requires bound >= 1");
    }
    Rng  rng(seed);
    auto sample = [&]() -> BaseElem {
      std::int64_t x = rng.uniform(-bound, bound);
      std::int64_t y = rng.uniform(-bound, bound);
      return {x, y};
    };
    std::vector<Syllable> tail(n);
    for (auto& syl : tail) {
      syl.eps = rng.coin() ? 1 : -1;
    }
    BaseElem prefix = sample();
    while (n == 0 && prefix.is_identity()) {
      prefix = sample();
    }
    for (std::size_t i = 0; i < n; ++i) {
      BaseElem r;
      do {
        tail[i].c = sample();
      } while (i + 1 < n
               && pinch_value(tail[i].eps, tail[i].c, tail[i + 1].eps, params,
                              r));
    }
    return HWordAccess::make(params, prefix, std::move(tail), true, false);
  }

}  // namespace hnn
