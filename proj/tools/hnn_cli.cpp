// hnn: word problem and non-Hopfian certificates for H(p,q,k) and its
// ascending HNN-extensions.
//
// Exit status: 0 success / true / pass, 1 false / fail / counterexample /
// resource cap, 2 usage, parse or configuration error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hnn/config.hpp"
#include "hnn/errors.hpp"

namespace {

  using namespace hnn;

  constexpr int exit_ok    = 0;
  constexpr int exit_false = 1;
  constexpr int exit_usage = 2;

  struct Options {
    std::string group = "h";
    std::string params;
    std::string config_path;
  };

  HnnParams parse_params(std::string const& text) {
    std::vector<std::int64_t> v;
    std::stringstream         ss(text);
    std::string               item;
    while (std::getline(ss, item, ',')) {
      std::size_t  used = 0;
      std::int64_t x    = 0;
      try {
        x = std::stoll(item, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used == 0 || used != item.size()) {
        throw ConfigError("--params expects p,q,k integers, got '" + text + "'");
      }
      v.push_back(x);
    }
    if (v.size() != 3) {
      throw ConfigError("--params expects exactly three integers p,q,k");
    }
    return {v[0], v[1], v[2]};
  }

  Config load(Options const& opt) {
    Config c = opt.config_path.empty() ? Config::paper()
                                       : load_config(opt.config_path);
    if (!opt.params.empty()) {
      c.params = parse_params(opt.params);
    }
    return c;
  }

  Ascending make_group(Config const& c) {
    Ascending G(c.endo("phi"), c.caps);
    FuzzConfig quick{100, c.seed, 4, 3};
    G.attach_injectivity_evidence(injectivity_fuzz(G.phi(), quick, {}, c.caps));
    if (G.non_injective_warning()) {
      std::cerr << "warning: phi has nontrivial kernel element "
                << to_string(*G.injectivity_evidence()->first_counterexample)
                << "; computing in a quotient of the ascending extension\n";
    }
    return G;
  }

  int cmd_reduce(Options const& opt, std::string const& text) {
    Config c = load(opt);
    if (opt.group == "g") {
      Ascending G = make_group(c);
      std::cout << G.to_string(G.push_word(text)) << '\n';
    } else {
      HWord h = from_word(parse_word(text, Alphabet::h()), c.params, c.caps);
      std::cout << to_string(normal_form(h, c.caps)) << '\n';
    }
    return exit_ok;
  }

  int cmd_eq(Options const& opt, std::string const& lhs,
             std::string const& rhs) {
    Config c = load(opt);
    bool   equal;
    if (opt.group == "g") {
      Ascending G = make_group(c);
      equal       = G.eq(G.push_word(lhs), G.push_word(rhs));
    } else {
      equal = eq_h(from_word(parse_word(lhs, Alphabet::h()), c.params, c.caps),
                   from_word(parse_word(rhs, Alphabet::h()), c.params, c.caps),
                   c.caps);
    }
    std::cout << (equal ? "true" : "false") << '\n';
    return equal ? exit_ok : exit_false;
  }

  int cmd_apply(Options const& opt, std::string const& name,
                std::string const& text) {
    Config c = load(opt);
    Endo   e = c.endo(name);
    if (!e.verified()) {
      throw ContractError("endomorphism '" + name
                          + "' does not send the relators to 1");
    }
    HWord image = apply_endo(e, parse_word(text, Alphabet::h()), c.caps);
    std::cout << to_string(normal_form(image, c.caps)) << '\n';
    return exit_ok;
  }

  int cmd_certify(Options const& opt) {
    Config      c    = load(opt);
    Certificate cert = certify_non_hopfian(c.certify_input());
    std::cout << certificate_to_report(cert);
    return cert.overall ? exit_ok : exit_false;
  }

  int cmd_fuzz(Options const& opt, std::string const& name,
               std::optional<std::uint64_t> trials,
               std::optional<std::uint64_t> seed,
               std::optional<std::size_t>   n_max,
               std::optional<std::int64_t>  bound,
               std::vector<std::string> const& seeded_text) {
    Config     c   = load(opt);
    FuzzConfig cfg = c.fuzz;
    cfg.trials     = trials.value_or(cfg.trials);
    cfg.seed       = seed.value_or(cfg.seed);
    cfg.n_max      = n_max.value_or(cfg.n_max);
    cfg.bound      = bound.value_or(cfg.bound);
    std::vector<Word> seeded;
    for (auto const& t : seeded_text) {
      seeded.push_back(parse_word(t, Alphabet::h()));
    }
    FuzzReport r = injectivity_fuzz(c.endo(name), cfg, seeded, c.caps);
    ojson      j;
    j["endo"]            = name;
    j["trials"]          = r.config.trials;
    j["seed"]            = r.config.seed;
    j["n_max"]           = r.config.n_max;
    j["bound"]           = r.config.bound;
    j["seeded_words"]    = r.seeded_words;
    j["words_checked"]   = r.words_checked;
    j["counterexamples"] = r.counterexamples;
    j["counterexample"]  = r.first_counterexample
                               ? ojson(to_string(*r.first_counterexample))
                               : ojson(nullptr);
    j["verdict"] = r.clean() ? "no counterexample in "
                                   + std::to_string(r.words_checked) + " words"
                             : "counterexample found";
    std::cout << j.dump(2) << '\n';
    return r.clean() ? exit_ok : exit_false;
  }

  void add_common(CLI::App* sub, Options& opt, bool with_group) {
    if (with_group) {
      sub->add_option("--group", opt.group, "Group to compute in")
          ->check(CLI::IsMember({"h", "g"}));
    }
    sub->add_option("--params", opt.params, "p,q,k (default 2,4,0)");
    sub->add_option("--config", opt.config_path, "JSON configuration file");
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word problem and non-Hopfian certificates for H(p,q,k)"};
  app.require_subcommand(1);

  Options     opt;
  std::string w1, w2, endo_name;

  auto* reduce = app.add_subcommand("reduce", "Print the normal form");
  reduce->add_option("word", w1, "Word")->required();
  add_common(reduce, opt, true);

  auto* eq = app.add_subcommand("eq", "Decide equality of two words");
  eq->add_option("lhs", w1)->required();
  eq->add_option("rhs", w2)->required();
  add_common(eq, opt, true);

  auto* apply = app.add_subcommand("apply", "Apply a named endomorphism of H");
  apply->add_option("--endo", endo_name, "phi, psi or a configured name")
      ->required();
  apply->add_option("word", w1, "Word over a, b, s")->required();
  add_common(apply, opt, false);

  auto* certify =
      app.add_subcommand("certify", "Emit the non-Hopfian certificate as JSON");
  certify->add_option("--config", opt.config_path, "JSON configuration file");

  std::optional<std::uint64_t> trials, seed;
  std::optional<std::size_t>   n_max;
  std::optional<std::int64_t>  bound;
  std::vector<std::string>     seeded;
  auto* fuzz = app.add_subcommand("fuzz", "Search for kernel elements");
  fuzz->add_option("--endo", endo_name, "phi, psi or a configured name")
      ->required();
  fuzz->add_option("--trials", trials);
  fuzz->add_option("--seed", seed);
  fuzz->add_option("--n-max", n_max);
  fuzz->add_option("--bound", bound);
  fuzz->add_option("--seed-word", seeded, "Extra words tried before sampling");
  add_common(fuzz, opt, false);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*reduce) {
      return cmd_reduce(opt, w1);
    }
    if (*eq) {
      return cmd_eq(opt, w1, w2);
    }
    if (*apply) {
      return cmd_apply(opt, endo_name, w1);
    }
    if (*certify) {
      return cmd_certify(opt);
    }
    if (*fuzz) {
      return cmd_fuzz(opt, endo_name, trials, seed, n_max, bound, seeded);
    }
  } catch (CapExceeded const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_false;
  } catch (OverflowError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_false;
  } catch (hnn::Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
