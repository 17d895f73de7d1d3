#pragma once

// Endomorphisms of H(p,q,k) given by the images of a, b and s.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hnn/hnn_word.hpp"

namespace hnn {

  class Endo {
   public:
    // Images must be words over {a, b, s}. Construction runs the relator
    // check and records the outcome in verified().
    Endo(Word image_a, Word image_b, Word image_s, HnnParams params,
         Limits const& limits = {});

    static Endo identity(HnnParams params);
    // a -> a^2, b -> b, s -> s^-1 b s^2 on H(2,4,0).
    static Endo phi_paper();
    // a -> a^2, b -> b, s -> s on H(2,4,0).
    static Endo psi_paper();

    Word const& image(Gen g) const;
    // Britton-reduced image as an element of H.
    HWord const& reduced_image(Gen g) const;

    HnnParams const& params() const noexcept {
      return _params;
    }
    bool verified() const noexcept {
      return _verified;
    }

    // Same generator images (as words) and parameters.
    bool operator==(Endo const& other) const {
      return _params == other._params && _images == other._images;
    }

   private:
    HnnParams          _params;
    std::vector<Word>  _images;
    std::vector<HWord> _reduced;
    bool               _verified = false;
  };

  // Letter-by-letter substitution in the free group, without any reduction in
  // H. Throws CapExceeded when the result would exceed limits.max_syllables
  // letters.
  Word substitute(Endo const& e, Word const& w, Limits const& limits = {});

  // Image in H, Britton-reduced. Requires e.verified().
  HWord apply_endo(Endo const& e, Word const& w, Limits const& limits = {});
  HWord apply_endo(Endo const& e, HWord const& h, Limits const& limits = {});

  // Images of the two defining relators, reduced in H.
  std::vector<HWord> relator_images(Endo const& e, Limits const& limits = {});
  bool check_homomorphism(Endo const& e, Limits const& limits = {});

  // outer after inner: x -> outer(inner(x)).
  Endo compose(Endo const& outer, Endo const& inner, Limits const& limits = {});
  bool check_commute(Endo const& e1, Endo const& e2, Limits const& limits = {});

  using GenWordMap = std::map<Gen, Word>;

  // phi(x) = psi(witnesses[x]) in H for x in {a, b, s}. Throws ContractError
  // if a witness is missing.
  bool check_containment(Endo const& phi, Endo const& psi,
                         GenWordMap const& witnesses, Limits const& limits = {});

  struct FuzzConfig {
    std::uint64_t trials = 1000;
    std::uint64_t seed   = 0;
    std::size_t   n_max  = 8;
    std::int64_t  bound  = 6;

    bool operator==(FuzzConfig const&) const = default;
  };

  struct FuzzReport {
    FuzzConfig          config;
    std::uint64_t       seeded_words    = 0;
    std::uint64_t       words_checked   = 0;
    std::uint64_t       counterexamples = 0;
    std::optional<Word> first_counterexample;

    bool clean() const noexcept {
      return counterexamples == 0;
    }
  };

  // Looks for a nontrivial element of H with trivial image. The `seeded`
  // words are tried first (trivial ones are ignored); then config.trials
  // random reduced words of s-length uniform on [1, n_max].
  FuzzReport injectivity_fuzz(Endo const& e, FuzzConfig const& config,
                              std::span<Word const> seeded = {},
                              Limits const&         limits = {});

  struct ProofReplay {
    std::size_t              checks = 0;
    std::vector<std::string> failures;

    bool ok() const noexcept {
      return failures.empty();
    }
  };

  // Replays the case analysis behind the injectivity of phi_paper(): for the
  // subwords s^-1 a^L s^-1, s a^L s, s^-1 a^M s and s a^N s^-1 checks that
  // the free-group image is the displayed word, that it contains a pinch
  // exactly when claimed, and that the stated pinch replacement yields an
  // equal pinch-free word. Also checks that s^e a^j b^k s^f with k != 0 maps
  // to a pinch-free word. Throws ContractError if M has an even value, N a
  // multiple of 4, or L contains 0.
  ProofReplay verify_proof_identities(std::span<std::int64_t const> L_range,
                                      std::span<std::int64_t const> M_range,
                                      std::span<std::int64_t const> N_range,
                                      Limits const& limits = {});

}  // namespace hnn
