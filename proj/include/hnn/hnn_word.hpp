#pragma once

// Word problem in H(p,q,k) viewed as an HNN-extension of C = Z^2 with stable
// letter s and associated subgroups A = <a^p>, B = <a^q b^k>.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hnn/base.hpp"
#include "hnn/limits.hpp"
#include "hnn/words.hpp"

namespace hnn {

  // s^eps c, eps = +1 or -1.
  struct Syllable {
    int      eps;
    BaseElem c;

    bool operator==(Syllable const&) const = default;
  };

  // c0 s^e1 c1 ... s^en cn. The flags record what the producing operation
  // established: `reduced` means there is no pinch s^-1 (A) s or s (B) s^-1;
  // `normal` additionally means every c_i, i >= 1, is the canonical
  // transversal representative (of A after s^-1, of B after s).
  class HWord {
   public:
    explicit HWord(HnnParams params) : _params(params) {}

    // An arbitrary syllable sequence; flags are cleared unless the tail is
    // empty.
    HWord(HnnParams params, BaseElem prefix, std::vector<Syllable> tail);

    HnnParams const& params() const noexcept {
      return _params;
    }
    BaseElem prefix() const noexcept {
      return _prefix;
    }
    std::vector<Syllable> const& tail() const noexcept {
      return _tail;
    }
    bool is_reduced() const noexcept {
      return _reduced;
    }
    bool is_normal() const noexcept {
      return _normal;
    }

    // Letter-for-letter spelling.
    Word to_word() const;

    // Component-wise (syntactic) equality; use eq_h for group equality.
    bool operator==(HWord const&) const = default;

   private:
    friend struct HWordAccess;

    HnnParams             _params;
    BaseElem              _prefix;
    std::vector<Syllable> _tail;
    bool                  _reduced = true;
    bool                  _normal  = true;
  };

  std::string to_string(HWord const& h);

  // Syllable decomposition; throws AlphabetError if w contains t.
  HWord from_word(Word const& w, HnnParams const& params,
                  Limits const& limits = {});
  HWord from_base(BaseElem c, HnnParams const& params);

  // Removes the leftmost pinch until none remains.
  HWord britton_reduce(HWord const& h, Limits const& limits = {});

  // Given the number of pinches currently present, returns the index of the
  // one to eliminate next.
  using PinchChooser = std::function<std::size_t(std::size_t)>;

  // Britton reduction with the elimination order delegated to `choose`.
  // Quadratic; meant for checking order independence.
  HWord britton_reduce_by(HWord const& h, PinchChooser const& choose,
                          Limits const& limits = {});

  HWord normal_form(HWord const& h, Limits const& limits = {});

  // Reduced product and inverse.
  HWord multiply(HWord const& lhs, HWord const& rhs, Limits const& limits = {});
  HWord inverse(HWord const& h);
  HWord power(HWord const& h, std::int64_t n, Limits const& limits = {});

  // Equality in H through normal forms; throws ContractError when the
  // parameters differ.
  bool eq_h(HWord const& lhs, HWord const& rhs, Limits const& limits = {});
  // Equality in H by reducing lhs * rhs^-1 and applying Britton's Lemma.
  bool eq_h_via_product(HWord const& lhs, HWord const& rhs,
                        Limits const& limits = {});
  bool is_trivial_h(HWord const& h, Limits const& limits = {});
  // Number of s-syllables after reduction.
  std::size_t s_length(HWord const& h, Limits const& limits = {});

  // A non-identity Britton-reduced word of s-length exactly n with base
  // exponents in [-bound, bound]; deterministic in seed.
  HWord random_reduced(std::uint64_t seed, std::size_t n, std::int64_t bound,
                       HnnParams const& params);

}  // namespace hnn
