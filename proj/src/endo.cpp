#include "hnn/endo.hpp"

#include "hnn/errors.hpp"
#include "hnn/random.hpp"

namespace hnn {

  namespace {
    std::size_t index(Gen g) {
      if (g == Gen::t) {
        throw AlphabetError("endomorphisms of H have no image for t");
      }
      return static_cast<std::size_t>(g);
    }

    void require_verified(Endo const& e) {
      if (!e.verified()) {
        throw ContractError(
            "endomorphism does not send the defining relators to 1");
      }
    }

    HWord apply_unchecked(Endo const& e, HWord const& h, Limits const& limits) {
      auto base_image = [&](BaseElem c) {
        return multiply(power(e.reduced_image(Gen::a), c.x, limits),
                        power(e.reduced_image(Gen::b), c.y, limits), limits);
      };
      HWord       result = base_image(h.prefix());
      HWord const s_inv  = inverse(e.reduced_image(Gen::s));
      for (auto const& syl : h.tail()) {
        result = multiply(result,
                          syl.eps == 1 ? e.reduced_image(Gen::s) : s_inv, limits);
        result = multiply(result, base_image(syl.c), limits);
      }
      return result;
    }

    HWord apply_unchecked(Endo const& e, Word const& w, Limits const& limits) {
      HWord result = from_base({}, e.params());
      for (auto const& l : w) {
        result = multiply(result, power(e.reduced_image(l.gen), l.exp, limits),
                          limits);
      }
      return result;
    }
  }  // namespace

  Endo::Endo(Word image_a, Word image_b, Word image_s, HnnParams params,
             Limits const& limits)
      : _params(params),
        _images{std::move(image_a), std::move(image_b), std::move(image_s)} {
    for (auto const& w : _images) {
      _reduced.push_back(britton_reduce(from_word(w, _params, limits), limits));
    }
    _verified = check_homomorphism(*this, limits);
  }

  Endo Endo::identity(HnnParams params) {
    return Endo(Word{{Gen::a, 1}}, Word{{Gen::b, 1}}, Word{{Gen::s, 1}}, params);
  }

  Endo Endo::phi_paper() {
    return Endo(Word{{Gen::a, 2}}, Word{{Gen::b, 1}},
                Word{{Gen::s, -1}, {Gen::b, 1}, {Gen::s, 2}},
                HnnParams::paper());
  }

  Endo Endo::psi_paper() {
    return Endo(Word{{Gen::a, 2}}, Word{{Gen::b, 1}}, Word{{Gen::s, 1}},
                HnnParams::paper());
  }

  Word const& Endo::image(Gen g) const {
    return _images[index(g)];
  }

  HWord const& Endo::reduced_image(Gen g) const {
    return _reduced[index(g)];
  }

  Word substitute(Endo const& e, Word const& w, Limits const& limits) {
    std::vector<Letter> raw;
    for (auto const& l : w) {
      Word img = e.image(l.gen);
      if (img.size() > 1 && word_length(Word{{l.gen, l.exp}}) * img.size()
                                > limits.max_syllables) {
        throw CapExceeded("substitution result exceeds "
                          + std::to_string(limits.max_syllables) + " letters");
      }
      Word part = power(img, l.exp);
      raw.insert(raw.end(), part.begin(), part.end());
      if (raw.size() > limits.max_syllables) {
        throw CapExceeded("substitution result exceeds "
                          + std::to_string(limits.max_syllables) + " letters");
      }
    }
    return free_reduce(raw);
  }

  HWord apply_endo(Endo const& e, Word const& w, Limits const& limits) {
    require_verified(e);
    return apply_unchecked(e, w, limits);
  }

  HWord apply_endo(Endo const& e, HWord const& h, Limits const& limits) {
    require_verified(e);
    if (!(h.params() == e.params())) {
      throw ContractError("word and endomorphism belong to different groups");
    }
    return apply_unchecked(e, h, limits);
  }

  std::vector<HWord> relator_images(Endo const& e, Limits const& limits) {
    HnnParams const& params = e.params();
    HWord const&     ea     = e.reduced_image(Gen::a);
    HWord const&     eb     = e.reduced_image(Gen::b);
    HWord const&     es     = e.reduced_image(Gen::s);

    // e(b)^-1 e(a) e(b) e(a)^-1
    HWord commutator = multiply(
        multiply(multiply(inverse(eb), ea, limits), eb, limits), inverse(ea),
        limits);

    // e(s)^-1 e(a)^p e(s) (e(a)^q e(b)^k)^-1
    HWord rhs = multiply(power(ea, params.q(), limits),
                         power(eb, params.k(), limits), limits);
    HWord conj = multiply(
        multiply(multiply(inverse(es), power(ea, params.p(), limits), limits),
                 es, limits),
        inverse(rhs), limits);
    return {commutator, conj};
  }

  bool check_homomorphism(Endo const& e, Limits const& limits) {
    for (auto const& r : relator_images(e, limits)) {
      if (!is_trivial_h(r, limits)) {
        return false;
      }
    }
    return true;
  }

  Endo compose(Endo const& outer, Endo const& inner, Limits const& limits) {
    if (!(outer.params() == inner.params())) {
      throw ContractError("cannot compose endomorphisms of different groups");
    }
    require_verified(outer);
    require_verified(inner);
    std::vector<Word> imgs;
    for (Gen g : {Gen::a, Gen::b, Gen::s}) {
      imgs.push_back(
          normal_form(apply_unchecked(outer, inner.reduced_image(g), limits),
                      limits)
              .to_word());
    }
    return Endo(imgs[0], imgs[1], imgs[2], outer.params(), limits);
  }

  bool check_commute(Endo const& e1, Endo const& e2, Limits const& limits) {
    Endo const lhs = compose(e1, e2, limits);
    Endo const rhs = compose(e2, e1, limits);
    for (Gen g : {Gen::a, Gen::b, Gen::s}) {
      if (!eq_h(lhs.reduced_image(g), rhs.reduced_image(g), limits)) {
        return false;
      }
    }
    return true;
  }

  bool check_containment(Endo const& phi, Endo const& psi,
                         GenWordMap const& witnesses, Limits const& limits) {
    if (!(phi.params() == psi.params())) {
      throw ContractError("endomorphisms of different groups");
    }
    for (Gen g : {Gen::a, Gen::b, Gen::s}) {
      auto it = witnesses.find(g);
      if (it == witnesses.end()) {
        throw ContractError(std::string("missing containment witness for ")
                            + gen_name(g));
      }
      if (!eq_h(phi.reduced_image(g), apply_endo(psi, it->second, limits),
                limits)) {
        return false;
      }
    }
    return true;
  }

  FuzzReport injectivity_fuzz(Endo const& e, FuzzConfig const& config,
                              std::span<Word const> seeded,
                              Limits const&         limits) {
    require_verified(e);
    if (config.n_max < 1 || config.bound < 1) {
      throw ContractError("fuzzing requires n_max >= 1 and bound >= 1");
    }
    FuzzReport report;
    report.config = config;

    auto check = [&](HWord const& h) {
      ++report.words_checked;
      if (is_trivial_h(apply_endo(e, h, limits), limits)) {
        if (report.counterexamples++ == 0) {
          report.first_counterexample = normal_form(h, limits).to_word();
        }
      }
    };

    for (auto const& w : seeded) {
      HWord h = from_word(w, e.params(), limits);
      if (is_trivial_h(h, limits)) {
        continue;
      }
      ++report.seeded_words;
      check(h);
    }
    for (std::uint64_t i = 0; i < config.trials; ++i) {
      std::uint64_t const trial_seed = mix_seed(config.seed, i);
      Rng                 rng(trial_seed);
      std::size_t n = 1 + static_cast<std::size_t>(rng.below(config.n_max));
      check(random_reduced(mix_seed(trial_seed, 0), n, config.bound,
                           e.params()));
    }
    return report;
  }

  namespace {
    // Free-group words spelled from letters; zero-exponent letters vanish.
    Word spell(std::initializer_list<Letter> letters) {
      return Word(std::vector<Letter>(letters));
    }

    struct ReplayContext {
      Endo const&   phi;
      Limits const& limits;
      ProofReplay&  out;

      HWord h(Word const& w) const {
        return from_word(w, phi.params(), limits);
      }

      bool has_pinch(Word const& w) const {
        HWord raw = h(w);
        return britton_reduce(raw, limits).tail().size() != raw.tail().size();
      }

      void expect(bool ok, std::string const& what) {
        ++out.checks;
        if (!ok) {
          out.failures.push_back(what);
        }
      }

      // `sub` maps letter-for-letter to `displayed`; `displayed` has a pinch
      // iff `pinched`; if so `replaced` is an equal pinch-free word.
      void replay(std::string const& label, Word const& sub,
                  Word const& displayed, bool pinched, Word const& replaced) {
        expect(substitute(phi, sub, limits) == displayed,
               label + ": image of " + to_string(sub) + " is not "
                   + to_string(displayed));
        expect(has_pinch(displayed) == pinched,
               label + ": pinch presence in " + to_string(displayed)
                   + " differs from the claim");
        if (pinched) {
          expect(eq_h(h(replaced), h(displayed), limits),
                 label + ": replacement " + to_string(replaced)
                     + " is not equal to " + to_string(displayed));
          expect(!has_pinch(replaced),
                 label + ": replacement " + to_string(replaced)
                     + " still has a pinch");
        }
      }
    };
  }  // namespace

  ProofReplay verify_proof_identities(std::span<std::int64_t const> L_range,
                                      std::span<std::int64_t const> M_range,
                                      std::span<std::int64_t const> N_range,
                                      Limits const&                 limits) {
    for (auto L : L_range) {
      if (L == 0) {
        throw ContractError("L must be nonzero");
      }
    }
    for (auto M : M_range) {
      if (M % 2 == 0) {
        throw ContractError("M must be odd so that a^M is not in <a^2>");
      }
    }
    for (auto N : N_range) {
      if (N % 4 == 0) {
        throw ContractError("N must not be a multiple of 4");
      }
    }

    Endo const    phi = Endo::phi_paper();
    ProofReplay   out;
    ReplayContext ctx{phi, limits, out};
    Gen const     a = Gen::a, b = Gen::b, s = Gen::s;

    for (auto L : L_range) {
      std::string label = "L=" + std::to_string(L);
      // s^-1 a^L s^-1 -> s^-2 b^-1 s a^2L s^-2 b^-1 s
      ctx.replay(label + " s^-1 a^L s^-1", spell({{s, -1}, {a, L}, {s, -1}}),
                 spell({{s, -2}, {b, -1}, {s, 1}, {a, 2 * L}, {s, -2}, {b, -1},
                        {s, 1}}),
                 L % 2 == 0,
                 spell({{s, -2}, {b, -1}, {a, L}, {s, -1}, {b, -1}, {s, 1}}));
      // s a^L s -> s^-1 b s^2 a^2L s^-1 b s^2
      ctx.replay(label + " s a^L s", spell({{s, 1}, {a, L}, {s, 1}}),
                 spell({{s, -1}, {b, 1}, {s, 2}, {a, 2 * L}, {s, -1}, {b, 1},
                        {s, 2}}),
                 L % 2 == 0,
                 spell({{s, -1}, {b, 1}, {s, 1}, {a, L}, {b, 1}, {s, 2}}));
    }
    for (auto M : M_range) {
      // s^-1 a^M s -> s^-2 b^-1 s a^2M s^-1 b s^2, never pinched
      ctx.replay("M=" + std::to_string(M) + " s^-1 a^M s",
                 spell({{s, -1}, {a, M}, {s, 1}}),
                 spell({{s, -2}, {b, -1}, {s, 1}, {a, 2 * M}, {s, -1}, {b, 1},
                        {s, 2}}),
                 false, {});
    }
    for (auto N : N_range) {
      // s a^N s^-1 -> s^-1 b s^2 a^2N s^-2 b^-1 s
      ctx.replay("N=" + std::to_string(N) + " s a^N s^-1",
                 spell({{s, 1}, {a, N}, {s, -1}}),
                 spell({{s, -1}, {b, 1}, {s, 2}, {a, 2 * N}, {s, -2}, {b, -1},
                        {s, 1}}),
                 N % 2 == 0,
                 spell({{s, -1}, {b, 1}, {s, 1}, {a, N}, {s, -1}, {b, -1},
                        {s, 1}}));
    }

    // A middle syllable with a nonzero b-exponent never produces a pinch.
    std::vector<std::int64_t> js(L_range.begin(), L_range.end());
    js.push_back(0);
    for (auto j : js) {
      for (std::int64_t k : {-2, -1, 1, 2}) {
        for (int e1 : {-1, 1}) {
          for (int e2 : {-1, 1}) {
            Word sub = spell({{s, e1}, {a, j}, {b, k}, {s, e2}});
            Word img = substitute(phi, sub, limits);
            ctx.expect(!ctx.has_pinch(img),
                       "b-syllable " + to_string(sub) + " maps to "
                           + to_string(img) + " which has a pinch");
          }
        }
      }
    }
    return out;
  }

}  // namespace hnn
