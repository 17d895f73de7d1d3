#pragma once

// JSON configuration: group parameters, named endomorphisms, witnesses,
// seed, fuzz settings and resource caps.
//
//   {"params": {"p": 2, "q": 4, "k": 0},
//    "phi": {"a": ..., "b": ..., "s": ...},
//    "psi": {...},
//    "endos": {"name": {"a": ..., "b": ..., "s": ...}, ...},
//    "witnesses": {"containment": {"a", "b", "s"},
//                  "surjectivity": {"a", "b", "s", "t"}},
//    "witness_kernel": word,
//    "seed": int,
//    "fuzz": {"trials", "n_max", "bound", "samples"},
//    "caps": {"max_syllables", "max_exponent", "max_lift"}}
//
// All words use the word grammar; only surjectivity preimages may contain t.

#include <map>
#include <string>
#include <string_view>

#include "hnn/certify.hpp"

namespace hnn {

  struct Config {
    HnnParams                         params = HnnParams::paper();
    EndoImages                        phi;
    EndoImages                        psi;
    std::map<std::string, EndoImages> endos;
    GenWordMap                        containment;
    GenWordMap                        surjectivity;
    Word                              kernel_witness;
    std::uint64_t                     seed    = 0;
    FuzzConfig                        fuzz;
    std::uint64_t                     samples = 200;
    Limits                            caps;

    // The configuration of the (2,4,0) construction.
    static Config paper();

    bool has_endo(std::string const& name) const;
    // "phi", "psi" or an entry of `endos`; throws ConfigError otherwise.
    Endo endo(std::string const& name) const;

    CertifyInput certify_input() const;

    bool operator==(Config const&) const = default;
  };

  Config      config_from_json(ojson const& j);
  ojson       config_to_json(Config const& c);
  Config      parse_config(std::string_view text);
  // Indented JSON with a trailing newline; parse_config inverts it exactly.
  std::string config_to_string(Config const& c);
  Config      load_config(std::string const& path);

}  // namespace hnn
