#include "hnn/config.hpp"

#include <fstream>
#include <sstream>

#include "hnn/errors.hpp"

namespace hnn {

  namespace {
    Word word_at(ojson const& j, char const* key, Alphabet alphabet) {
      if (!j.contains(key) || !j.at(key).is_string()) {
        throw ConfigError(std::string("expected a word string at '") + key
                          + "'");
      }
      return parse_word(j.at(key).get<std::string>(), alphabet);
    }

    EndoImages endo_images(ojson const& j) {
      return {word_at(j, "a", Alphabet::h()), word_at(j, "b", Alphabet::h()),
              word_at(j, "s", Alphabet::h())};
    }

    ojson endo_json(EndoImages const& e) {
      ojson j;
      j["a"] = to_string(e.a);
      j["b"] = to_string(e.b);
      j["s"] = to_string(e.s);
      return j;
    }

    GenWordMap witness_map(ojson const& j, bool with_t) {
      GenWordMap m;
      Alphabet   alphabet = with_t ? Alphabet::g() : Alphabet::h();
      m[Gen::a]           = word_at(j, "a", alphabet);
      m[Gen::b]           = word_at(j, "b", alphabet);
      m[Gen::s]           = word_at(j, "s", alphabet);
      if (with_t) {
        m[Gen::t] = word_at(j, "t", alphabet);
      }
      return m;
    }

    template <typename T>
    T number_at(ojson const& j, char const* key) {
      if (!j.contains(key) || !j.at(key).is_number_integer()) {
        throw ConfigError(std::string("expected an integer at '") + key + "'");
      }
      return j.at(key).get<T>();
    }

    ojson const& object_at(ojson const& j, char const* key) {
      if (!j.contains(key) || !j.at(key).is_object()) {
        throw ConfigError(std::string("expected an object at '") + key + "'");
      }
      return j.at(key);
    }
  }  // namespace

  Config Config::paper() {
    Config c;
    c.params         = HnnParams::paper();
    c.phi            = EndoImages::of(Endo::phi_paper());
    c.psi            = EndoImages::of(Endo::psi_paper());
    c.endos["id"]    = EndoImages::of(Endo::identity(c.params));
    c.containment    = paper_containment_witnesses();
    c.surjectivity   = paper_surjectivity_preimages();
    c.kernel_witness = paper_kernel_witness();
    c.seed           = 2024;
    c.fuzz.seed      = c.seed;
    return c;
  }

  bool Config::has_endo(std::string const& name) const {
    return name == "phi" || name == "psi" || endos.contains(name);
  }

  Endo Config::endo(std::string const& name) const {
    EndoImages const* e = nullptr;
    if (name == "phi") {
      e = &phi;
    } else if (name == "psi") {
      e = &psi;
    } else if (auto it = endos.find(name); it != endos.end()) {
      e = &it->second;
    } else {
      throw ConfigError("unknown endomorphism '" + name + "'");
    }
    return Endo(e->a, e->b, e->s, params, caps);
  }

  CertifyInput Config::certify_input() const {
    return {endo("phi"), endo("psi"), containment, surjectivity,
            kernel_witness, fuzz, samples, caps};
  }

  Config config_from_json(ojson const& j) {
    if (!j.is_object()) {
      throw ConfigError("configuration must be a JSON object");
    }
    Config      c;
    auto const& p = object_at(j, "params");
    c.params      = HnnParams(number_at<std::int64_t>(p, "p"),
                              number_at<std::int64_t>(p, "q"),
                              number_at<std::int64_t>(p, "k"));
    c.phi         = endo_images(object_at(j, "phi"));
    c.psi         = endo_images(object_at(j, "psi"));
    if (j.contains("endos")) {
      for (auto const& [name, e] : object_at(j, "endos").items()) {
        if (name == "phi" || name == "psi") {
          throw ConfigError("'" + name + "' is reserved for the top-level map");
        }
        c.endos[name] = endo_images(e);
      }
    }
    auto const& w    = object_at(j, "witnesses");
    c.containment    = witness_map(object_at(w, "containment"), false);
    c.surjectivity   = witness_map(object_at(w, "surjectivity"), true);
    c.kernel_witness = word_at(j, "witness_kernel", Alphabet::h());
    c.seed           = number_at<std::uint64_t>(j, "seed");

    auto const& f = object_at(j, "fuzz");
    c.fuzz.seed   = c.seed;
    c.fuzz.trials = number_at<std::uint64_t>(f, "trials");
    c.fuzz.n_max  = number_at<std::size_t>(f, "n_max");
    c.fuzz.bound  = number_at<std::int64_t>(f, "bound");
    c.samples     = number_at<std::uint64_t>(f, "samples");

    auto const& caps     = object_at(j, "caps");
    c.caps.max_syllables = number_at<std::size_t>(caps, "max_syllables");
    c.caps.max_exponent  = number_at<std::int64_t>(caps, "max_exponent");
    c.caps.max_lift      = number_at<unsigned>(caps, "max_lift");
    return c;
  }

  ojson config_to_json(Config const& c) {
    ojson j;
    j["params"]["p"] = c.params.p();
    j["params"]["q"] = c.params.q();
    j["params"]["k"] = c.params.k();
    j["phi"]         = endo_json(c.phi);
    j["psi"]         = endo_json(c.psi);
    j["endos"]       = ojson::object();
    for (auto const& [name, e] : c.endos) {
      j["endos"][name] = endo_json(e);
    }
    j["witnesses"]["containment"]  = word_map_to_json(c.containment);
    j["witnesses"]["surjectivity"] = word_map_to_json(c.surjectivity);
    j["witness_kernel"]            = to_string(c.kernel_witness);
    j["seed"]                      = c.seed;
    j["fuzz"]["trials"]            = c.fuzz.trials;
    j["fuzz"]["n_max"]             = c.fuzz.n_max;
    j["fuzz"]["bound"]             = c.fuzz.bound;
    j["fuzz"]["samples"]           = c.samples;
    j["caps"]["max_syllables"]     = c.caps.max_syllables;
    j["caps"]["max_exponent"]      = c.caps.max_exponent;
    j["caps"]["max_lift"]          = c.caps.max_lift;
    return j;
  }

  Config parse_config(std::string_view text) {
    ojson j;
    try {
      j = ojson::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    return config_from_json(j);
  }

  std::string config_to_string(Config const& c) {
    return config_to_json(c).dump(2) + "\n";
  }

  Config load_config(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ConfigError("cannot open configuration file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
  }

}  // namespace hnn
