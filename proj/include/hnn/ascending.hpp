#pragma once

// The ascending HNN-extension G = < H, t | t^-1 h t = phi(h) > of H(p,q,k)
// along an injective endomorphism phi.
//
// Every element of G can be written t^u h t^-v with u, v >= 0 and h in H.
// The relations h t = t phi(h) and t^-1 h = phi(h) t^-1 let any word be
// pushed into this shape. The shape is not unique: (u, h, v) and
// (u + 1, phi(h), v + 1) denote the same element. Equality is therefore
// decided by lifting both sides to a common u and comparing middles in H,
// which is faithful precisely because phi is injective.

#include <cstdint>
#include <optional>
#include <string>

#include "hnn/endo.hpp"

namespace hnn {

  // t^u h t^-v; h is Britton-reduced.
  struct GElem {
    std::int64_t u = 0;
    HWord        h;
    std::int64_t v = 0;
  };

  class Ascending {
   public:
    // Throws ContractError if phi is not a verified homomorphism.
    explicit Ascending(Endo phi, Limits limits = {});

    Endo const& phi() const noexcept {
      return _phi;
    }
    Limits const& limits() const noexcept {
      return _limits;
    }

    // Injectivity of phi cannot be decided here; callers may attach fuzz
    // evidence. If that evidence holds a counterexample, the object models
    // a proper quotient of G and non_injective_warning() is set.
    void attach_injectivity_evidence(FuzzReport report);
    std::optional<FuzzReport> const& injectivity_evidence() const noexcept {
      return _evidence;
    }
    bool non_injective_warning() const noexcept {
      return _evidence && !_evidence->clean();
    }

    GElem identity() const;
    GElem from_h(HWord const& h) const;

    // phi^n(h), reduced and normal-formed after every application.
    HWord phi_power(HWord const& h, std::int64_t n) const;

    GElem push_letter(GElem g, Letter l) const;
    GElem push_word(Word const& w) const;
    GElem push_word(std::string_view text) const;

    GElem mul(GElem const& lhs, GElem const& rhs) const;
    GElem inv(GElem const& g) const;
    // (u, h, v) -> (u + n, phi^n(h), v + n).
    GElem lift(GElem const& g, std::int64_t n) const;

    bool eq(GElem const& lhs, GElem const& rhs) const;
    bool is_trivial(GElem const& g) const;

    // t^u <normal form of h> t^-v in the word grammar.
    Word        to_word(GElem const& g) const;
    std::string to_string(GElem const& g) const;

   private:
    void check_elem(GElem const& g) const;

    Endo                      _phi;
    Limits                    _limits;
    std::optional<FuzzReport> _evidence;
  };

  // A random word over {a, b, s, t}: `letters` letters, exponents +-1 or +-2
  // on a, b, s and +-1 on t, with at most `max_t` t-letters.
  Word random_g_word(std::uint64_t seed, std::size_t letters,
                     std::size_t max_t = 3);

  // The extension of psi to G fixing t: (u, h, v) -> (u, psi(h), v).
  class PsiTilde {
   public:
    Endo const& psi() const noexcept {
      return _psi;
    }
    GElem operator()(GElem const& g) const;

   private:
    friend PsiTilde extend_psi(Endo const& psi, Ascending const& G);
    PsiTilde(Endo psi, Ascending const& G) : _psi(std::move(psi)), _G(&G) {}

    Endo             _psi;
    Ascending const* _G;
  };

  // Throws ContractError unless psi is a verified endomorphism of the same H
  // commuting with phi, which is what makes the extension well defined.
  PsiTilde extend_psi(Endo const& psi, Ascending const& G);

  // psi~(push(preimages[x])) = x in G for every x in {a, b, s, t}. Throws
  // ContractError on a missing entry.
  bool check_surjective(Ascending const& G, PsiTilde const& psi_tilde,
                        GenWordMap const& preimages);

}  // namespace hnn
