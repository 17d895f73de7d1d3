#include "hnn/ascending.hpp"

#include <algorithm>

#include "checked.hpp"
#include "hnn/errors.hpp"
#include "hnn/random.hpp"

namespace hnn {

  Ascending::Ascending(Endo phi, Limits limits)
      : _phi(std::move(phi)), _limits(limits) {
    if (!_phi.verified()) {
      throw ContractError(
          "the defining map of an ascending HNN-extension must be a "
          "homomorphism");
    }
  }

  void Ascending::attach_injectivity_evidence(FuzzReport report) {
    _evidence = std::move(report);
  }

  void Ascending::check_elem(GElem const& g) const {
    if (g.u < 0 || g.v < 0) {
      throw ContractError("sandwich exponents must be nonnegative");
    }
    if (!(g.h.params() == _phi.params())) {
      throw ContractError("middle word belongs to a different group");
    }
  }

  GElem Ascending::identity() const {
    return {0, from_base({}, _phi.params()), 0};
  }

  GElem Ascending::from_h(HWord const& h) const {
    return {0, britton_reduce(h, _limits), 0};
  }

  HWord Ascending::phi_power(HWord const& h, std::int64_t n) const {
    if (n > static_cast<std::int64_t>(_limits.max_lift)) {
      throw CapExceeded("phi power " + std::to_string(n) + " exceeds lift cap "
                        + std::to_string(_limits.max_lift));
    }
    HWord out = britton_reduce(h, _limits);
    for (std::int64_t i = 0; i < n; ++i) {
      out = normal_form(apply_endo(_phi, out, _limits), _limits);
    }
    return out;
  }

  GElem Ascending::push_letter(GElem g, Letter l) const {
    if (l.gen == Gen::t) {
      if (l.exp < 0) {
        g.v = detail::checked_sub(g.v, l.exp);
        return g;
      }
      // t^u h t^-v t^e: cancel against t^-v first, then h t = t phi(h).
      std::int64_t cancel = std::min(g.v, l.exp);
      std::int64_t rest   = l.exp - cancel;
      g.v -= cancel;
      if (rest > 0) {
        g.u = detail::checked_add(g.u, rest);
        g.h = phi_power(g.h, rest);
      }
      return g;
    }
    // t^-v x = phi^v(x) t^-v
    HWord x = phi_power(from_word(Word{{l.gen, 1}}, _phi.params(), _limits),
                        g.v);
    g.h     = multiply(g.h, power(x, l.exp, _limits), _limits);
    return g;
  }

  GElem Ascending::push_word(Word const& w) const {
    GElem g = identity();
    for (auto const& l : w) {
      g = push_letter(std::move(g), l);
    }
    return g;
  }

  GElem Ascending::push_word(std::string_view text) const {
    return push_word(parse_word(text, Alphabet::g()));
  }

  GElem Ascending::mul(GElem const& lhs, GElem const& rhs) const {
    check_elem(lhs);
    check_elem(rhs);
    std::int64_t d = detail::checked_sub(lhs.v, rhs.u);
    if (d >= 0) {
      return {lhs.u, multiply(lhs.h, phi_power(rhs.h, d), _limits),
              detail::checked_add(rhs.v, d)};
    }
    return {detail::checked_sub(lhs.u, d),
            multiply(phi_power(lhs.h, -d), rhs.h, _limits), rhs.v};
  }

  GElem Ascending::inv(GElem const& g) const {
    check_elem(g);
    return {g.v, inverse(g.h), g.u};
  }

  GElem Ascending::lift(GElem const& g, std::int64_t n) const {
    check_elem(g);
    if (n < 0) {
      throw ContractError("lift depth must be nonnegative");
    }
    return {detail::checked_add(g.u, n), phi_power(g.h, n),
            detail::checked_add(g.v, n)};
  }

  bool Ascending::eq(GElem const& lhs, GElem const& rhs) const {
    check_elem(lhs);
    check_elem(rhs);
    // The t-exponent sum u - v is invariant.
    if (detail::checked_sub(lhs.u, lhs.v) != detail::checked_sub(rhs.u, rhs.v)) {
      return false;
    }
    std::int64_t const top = std::max(lhs.u, rhs.u);
    if (top > static_cast<std::int64_t>(_limits.max_lift)) {
      throw CapExceeded("comparison needs a lift to t^" + std::to_string(top)
                        + ", beyond the cap "
                        + std::to_string(_limits.max_lift));
    }
    HWord l = phi_power(lhs.h, top - lhs.u);
    HWord r = phi_power(rhs.h, top - rhs.u);
    return eq_h(l, r, _limits);
  }

  bool Ascending::is_trivial(GElem const& g) const {
    return eq(g, identity());
  }

  Word Ascending::to_word(GElem const& g) const {
    Word mid = normal_form(g.h, _limits).to_word();
    return concat(concat(Word{{Gen::t, g.u}}, mid), Word{{Gen::t, -g.v}});
  }

  std::string Ascending::to_string(GElem const& g) const {
    return hnn::to_string(to_word(g));
  }

  Word random_g_word(std::uint64_t seed, std::size_t letters,
                     std::size_t max_t) {
    Rng                 rng(seed);
    std::vector<Letter> raw;
    std::size_t         t_used = 0;
    for (std::size_t i = 0; i < letters; ++i) {
      auto g = static_cast<Gen>(rng.below(t_used < max_t ? 4 : 3));
      if (g == Gen::t) {
        ++t_used;
      }
      std::int64_t e = g == Gen::t ? 1 : rng.uniform(1, 2);
      raw.push_back({g, rng.coin() ? e : -e});
    }
    return free_reduce(raw);
  }

  GElem PsiTilde::operator()(GElem const& g) const {
    return {g.u, apply_endo(_psi, g.h, _G->limits()), g.v};
  }

  PsiTilde extend_psi(Endo const& psi, Ascending const& G) {
    if (!psi.verified()) {
      throw ContractError("psi is not a homomorphism");
    }
    if (!(psi.params() == G.phi().params())) {
      throw ContractError("psi and phi act on different groups");
    }
    if (!check_commute(G.phi(), psi, G.limits())) {
      throw ContractError(
          "psi does not commute with phi, so fixing t does not extend it to G");
    }
    return PsiTilde(psi, G);
  }

  bool check_surjective(Ascending const& G, PsiTilde const& psi_tilde,
                        GenWordMap const& preimages) {
    for (Gen g : {Gen::a, Gen::b, Gen::s, Gen::t}) {
      auto it = preimages.find(g);
      if (it == preimages.end()) {
        throw ContractError(std::string("missing surjectivity preimage for ")
                            + gen_name(g));
      }
      GElem image = psi_tilde(G.push_word(it->second));
      if (!G.eq(image, G.push_word(Word{{g, 1}}))) {
        return false;
      }
    }
    return true;
  }

}  // namespace hnn
