#include "hnn/certify.hpp"

#include <functional>
#include <optional>

#include "hnn/errors.hpp"
#include "hnn/random.hpp"

namespace hnn {

  std::string to_string(CheckStatus s) {
    switch (s) {
      case CheckStatus::pass:
        return "pass";
      case CheckStatus::fail:
        return "fail";
      case CheckStatus::fuzz_pass:
        return "fuzz-pass";
      case CheckStatus::skipped:
        return "skipped";
    }
    return "fail";
  }

  CheckStatus check_status_from_string(std::string const& s) {
    if (s == "pass") {
      return CheckStatus::pass;
    }
    if (s == "fail") {
      return CheckStatus::fail;
    }
    if (s == "fuzz-pass") {
      return CheckStatus::fuzz_pass;
    }
    if (s == "skipped") {
      return CheckStatus::skipped;
    }
    throw ContractError("unknown check status '" + s + "'");
  }

  GenWordMap paper_containment_witnesses() {
    return {{Gen::a, Word{{Gen::a, 1}}},
            {Gen::b, Word{{Gen::b, 1}}},
            {Gen::s, Word{{Gen::s, -1}, {Gen::b, 1}, {Gen::s, 2}}}};
  }

  GenWordMap paper_surjectivity_preimages() {
    return {{Gen::a, Word{{Gen::t, 1}, {Gen::a, 1}, {Gen::t, -1}}},
            {Gen::b, Word{{Gen::b, 1}}},
            {Gen::s, Word{{Gen::s, 1}}},
            {Gen::t, Word{{Gen::t, 1}}}};
  }

  Word paper_kernel_witness() {
    return Word{{Gen::s, -1}, {Gen::a, 1}, {Gen::s, 1}, {Gen::a, -2}};
  }

  CertifyInput paper_certify_input() {
    return {Endo::phi_paper(),
            Endo::psi_paper(),
            paper_containment_witnesses(),
            paper_surjectivity_preimages(),
            paper_kernel_witness(),
            FuzzConfig{},
            200,
            Limits{}};
  }

  bool aggregate(std::vector<CheckResult> const& checks) {
    for (auto const& c : checks) {
      if (c.status == CheckStatus::fail) {
        return false;
      }
    }
    return true;
  }

  ojson word_map_to_json(GenWordMap const& m) {
    ojson j = ojson::object();
    for (auto const& [g, w] : m) {
      j[std::string(1, gen_name(g))] = to_string(w);
    }
    return j;
  }

  namespace {
    ojson endo_to_json(EndoImages const& e) {
      ojson j;
      j["a"] = to_string(e.a);
      j["b"] = to_string(e.b);
      j["s"] = to_string(e.s);
      return j;
    }

    EndoImages endo_from_json(ojson const& j) {
      auto h = [&](char const* key) {
        return parse_word(j.at(key).get<std::string>(), Alphabet::h());
      };
      return {h("a"), h("b"), h("s")};
    }

    std::string nf(HWord const& h, Limits const& limits) {
      return to_string(normal_form(h, limits));
    }

    struct Runner {
      Limits const&            limits;
      std::vector<CheckResult> checks;

      void run(char const* name, std::function<CheckResult()> const& body) {
        CheckResult r;
        try {
          r = body();
        } catch (Error const& e) {
          r.status   = CheckStatus::fail;
          r.evidence = ojson::object();
          r.evidence["error"] = e.what();
        }
        r.name = name;
        checks.push_back(std::move(r));
      }
    };

    CheckResult homomorphism_check(Endo const& e, Limits const& limits) {
      ojson ev;
      ojson rel = ojson::array();
      for (auto const& r : relator_images(e, limits)) {
        rel.push_back(nf(r, limits));
      }
      ev["relator_images"] = rel;
      return {"", e.verified() ? CheckStatus::pass : CheckStatus::fail, ev};
    }

    ojson fuzz_to_json(FuzzReport const& r) {
      ojson ev;
      ev["trials"]          = r.config.trials;
      ev["seed"]            = r.config.seed;
      ev["n_max"]           = r.config.n_max;
      ev["bound"]           = r.config.bound;
      ev["seeded_words"]    = r.seeded_words;
      ev["words_checked"]   = r.words_checked;
      ev["counterexamples"] = r.counterexamples;
      ev["counterexample"]  = r.first_counterexample
                                  ? ojson(to_string(*r.first_counterexample))
                                  : ojson(nullptr);
      return ev;
    }
  }  // namespace

  Certificate certify_non_hopfian(CertifyInput const& in) {
    Limits const&    limits = in.limits;
    HnnParams const& params = in.phi.params();
    if (!(in.psi.params() == params)) {
      throw ContractError("phi and psi act on different groups");
    }

    Certificate cert;
    cert.params         = params;
    cert.phi            = EndoImages::of(in.phi);
    cert.psi            = EndoImages::of(in.psi);
    cert.witness_kernel = in.kernel_witness;
    cert.seed           = in.fuzz.seed;

    Runner run{limits, {}};

    run.run(check_names[0], [&] { return homomorphism_check(in.phi, limits); });
    run.run(check_names[1], [&] { return homomorphism_check(in.psi, limits); });

    run.run(check_names[2], [&] {
      Word const seeded[] = {in.kernel_witness};
      auto report = injectivity_fuzz(in.phi, in.fuzz, seeded, limits);
      return CheckResult{
          "", report.clean() ? CheckStatus::fuzz_pass : CheckStatus::fail,
          fuzz_to_json(report)};
    });

    run.run(check_names[3], [&] {
      ojson ev;
      if (!(params == HnnParams::paper()) || !(in.phi == Endo::phi_paper())) {
        ev["reason"] = "the case analysis is specific to H(2,4,0) with "
                       "a -> a^2, b -> b, s -> s^-1 b s^2; other maps rely "
                       "on the injectivity fuzz alone";
        return CheckResult{"", CheckStatus::skipped, ev};
      }
      std::vector<std::int64_t> L, M{-5, -3, -1, 1, 3, 5},
          N{-6, -5, -3, -2, -1, 1, 2, 3, 5, 6};
      for (std::int64_t l = -5; l <= 5; ++l) {
        if (l != 0) {
          L.push_back(l);
        }
      }
      auto replay        = verify_proof_identities(L, M, N, limits);
      ev["L"]            = L;
      ev["M"]            = M;
      ev["N"]            = N;
      ev["identities"]   = replay.checks;
      ev["failures"]     = replay.failures;
      return CheckResult{
          "", replay.ok() ? CheckStatus::pass : CheckStatus::fail, ev};
    });

    run.run(check_names[4], [&] {
      HWord w     = from_word(in.kernel_witness, params, limits);
      HWord image = apply_endo(in.psi, w, limits);
      bool  w_nontrivial = !is_trivial_h(w, limits);
      bool  image_trivial = is_trivial_h(image, limits);
      ojson ev;
      ev["witness"]             = to_string(in.kernel_witness);
      ev["witness_normal_form"] = nf(w, limits);
      ev["image_normal_form"]   = nf(image, limits);
      ev["witness_nontrivial"]  = w_nontrivial;
      ev["image_trivial"]       = image_trivial;
      return CheckResult{"",
                         w_nontrivial && image_trivial ? CheckStatus::pass
                                                       : CheckStatus::fail,
                         ev};
    });

    run.run(check_names[5], [&] {
      Endo  pp = compose(in.phi, in.psi, limits);
      Endo  qq = compose(in.psi, in.phi, limits);
      ojson ev = ojson::object();
      bool  ok = true;
      for (Gen g : {Gen::a, Gen::b, Gen::s}) {
        bool same = eq_h(pp.reduced_image(g), qq.reduced_image(g), limits);
        ok        = ok && same;
        ojson e;
        e["phi_psi"] = to_string(pp.image(g));
        e["psi_phi"] = to_string(qq.image(g));
        e["equal"]   = same;
        ev[std::string(1, gen_name(g))] = e;
      }
      return CheckResult{"", ok ? CheckStatus::pass : CheckStatus::fail, ev};
    });

    run.run(check_names[6], [&] {
      bool  ok = check_containment(in.phi, in.psi, in.containment_witnesses,
                                   limits);
      ojson ev;
      ev["witnesses"] = word_map_to_json(in.containment_witnesses);
      ojson images    = ojson::object();
      for (auto const& [g, w] : in.containment_witnesses) {
        if (g == Gen::t) {
          continue;
        }
        ojson e;
        e["phi"] = nf(in.phi.reduced_image(g), limits);
        e["psi"] = nf(apply_endo(in.psi, w, limits), limits);
        images[std::string(1, gen_name(g))] = e;
      }
      ev["images"] = images;
      return CheckResult{"", ok ? CheckStatus::pass : CheckStatus::fail, ev};
    });

    // A failure to build G (or psi~) is attributed to every check that
    // needs it.
    std::optional<Ascending> G_store;
    std::string              G_error;
    try {
      G_store.emplace(in.phi, limits);
    } catch (Error const& e) {
      G_error = e.what();
    }
    auto group = [&]() -> Ascending const& {
      if (!G_store) {
        throw ContractError(G_error);
      }
      return *G_store;
    };

    run.run(check_names[7], [&] {
      Ascending const& G = group();
      PsiTilde psi_t = extend_psi(in.psi, G);
      ojson    ev;
      // Defining relations t^-1 x t = phi(x) of G must hold for the images:
      // t^-1 psi(x) t = psi(phi(x)).
      bool  relations_ok = true;
      ojson rel          = ojson::object();
      GElem t            = G.push_word(Word{{Gen::t, 1}});
      GElem t_inv        = G.inv(t);
      for (Gen g : {Gen::a, Gen::b, Gen::s}) {
        GElem x   = G.from_h(in.psi.reduced_image(g));
        GElem lhs = G.mul(G.mul(t_inv, x), t);
        GElem rhs = G.from_h(apply_endo(in.psi, in.phi.reduced_image(g), limits));
        bool  ok  = G.eq(lhs, rhs);
        relations_ok = relations_ok && ok;
        rel[std::string(1, gen_name(g))] = ok;
      }
      ev["relations"] = rel;
      ev["h_relators_preserved"] = in.psi.verified();

      std::uint64_t failures = 0;
      ojson         first    = nullptr;
      for (std::uint64_t i = 0; i < in.samples; ++i) {
        std::uint64_t sd = mix_seed(in.fuzz.seed, (1ULL << 40) + i);
        Word  w1 = random_g_word(mix_seed(sd, 0), 6, 2);
        Word  w2 = random_g_word(mix_seed(sd, 1), 6, 2);
        GElem g1 = G.push_word(w1);
        GElem g2 = G.push_word(w2);
        if (!G.eq(psi_t(G.mul(g1, g2)), G.mul(psi_t(g1), psi_t(g2)))) {
          if (failures++ == 0) {
            first = ojson::array({to_string(w1), to_string(w2)});
          }
        }
      }
      ev["multiplicativity_samples"]  = in.samples;
      ev["multiplicativity_failures"] = failures;
      ev["first_failure"]             = first;
      bool ok = relations_ok && in.psi.verified() && failures == 0;
      return CheckResult{"", ok ? CheckStatus::pass : CheckStatus::fail, ev};
    });

    run.run(check_names[8], [&] {
      Ascending const& G = group();
      PsiTilde psi_t = extend_psi(in.psi, G);
      bool     ok    = check_surjective(G, psi_t, in.surjectivity_preimages);
      ojson    ev;
      ev["preimages"] = word_map_to_json(in.surjectivity_preimages);
      ojson images    = ojson::object();
      for (auto const& [g, w] : in.surjectivity_preimages) {
        images[std::string(1, gen_name(g))] =
            G.to_string(psi_t(G.push_word(w)));
      }
      ev["images"] = images;
      return CheckResult{"", ok ? CheckStatus::pass : CheckStatus::fail, ev};
    });

    run.run(check_names[9], [&] {
      Ascending const& G = group();
      PsiTilde psi_t   = extend_psi(in.psi, G);
      GElem    w       = G.push_word(in.kernel_witness);
      GElem    image   = psi_t(w);
      bool     w_nontrivial  = !G.is_trivial(w);
      bool     image_trivial = G.is_trivial(image);
      ojson    ev;
      ev["witness"]            = G.to_string(w);
      ev["image"]              = G.to_string(image);
      ev["witness_nontrivial"] = w_nontrivial;
      ev["image_trivial"]      = image_trivial;
      return CheckResult{"",
                         w_nontrivial && image_trivial ? CheckStatus::pass
                                                       : CheckStatus::fail,
                         ev};
    });

    cert.checks  = std::move(run.checks);
    cert.overall = aggregate(cert.checks);
    return cert;
  }

  ojson certificate_to_json(Certificate const& c) {
    ojson j;
    j["params"]["p"] = c.params.p();
    j["params"]["q"] = c.params.q();
    j["params"]["k"] = c.params.k();
    j["phi"]         = endo_to_json(c.phi);
    j["psi"]         = endo_to_json(c.psi);
    ojson checks     = ojson::array();
    for (auto const& ch : c.checks) {
      ojson e;
      e["name"]     = ch.name;
      e["status"]   = to_string(ch.status);
      e["evidence"] = ch.evidence;
      checks.push_back(e);
    }
    j["checks"]         = checks;
    j["witness_kernel"] = to_string(c.witness_kernel);
    j["overall"]        = c.overall;
    j["seed"]           = c.seed;
    return j;
  }

  Certificate certificate_from_json(ojson const& j) {
    Certificate c;
    auto const& p = j.at("params");
    c.params = HnnParams(p.at("p").get<std::int64_t>(),
                         p.at("q").get<std::int64_t>(),
                         p.at("k").get<std::int64_t>());
    c.phi    = endo_from_json(j.at("phi"));
    c.psi    = endo_from_json(j.at("psi"));
    for (auto const& e : j.at("checks")) {
      c.checks.push_back({e.at("name").get<std::string>(),
                          check_status_from_string(
                              e.at("status").get<std::string>()),
                          e.at("evidence")});
    }
    c.witness_kernel =
        parse_word(j.at("witness_kernel").get<std::string>(), Alphabet::h());
    c.overall = j.at("overall").get<bool>();
    c.seed    = j.at("seed").get<std::uint64_t>();
    return c;
  }

  std::string certificate_to_report(Certificate const& c) {
    return certificate_to_json(c).dump(2) + "\n";
  }

}  // namespace hnn
