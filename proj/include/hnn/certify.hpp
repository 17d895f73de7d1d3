#pragma once

// Mechanical certificate that an ascending HNN-extension is non-Hopfian:
// given phi injective, psi non-injective, phi psi = psi phi and
// phi(H) <= psi(H), the extension of psi fixing t is a surjective,
// non-injective endomorphism of G.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "hnn/ascending.hpp"

namespace hnn {

  using ojson = nlohmann::ordered_json;

  enum class CheckStatus { pass, fail, fuzz_pass, skipped };

  std::string to_string(CheckStatus s);
  CheckStatus check_status_from_string(std::string const& s);

  // Fixed check list, in execution order.
  inline constexpr char const* check_names[] = {
      "phi_is_homomorphism",    "psi_is_homomorphism",
      "phi_injective_fuzz",     "phi_proof_identities",
      "psi_not_injective",      "phi_psi_commute",
      "phi_image_in_psi_image", "psi_tilde_well_defined",
      "psi_tilde_surjective",   "psi_tilde_not_injective"};

  struct CheckResult {
    std::string name;
    CheckStatus status;
    ojson       evidence;

    bool operator==(CheckResult const&) const = default;
  };

  struct EndoImages {
    Word a, b, s;

    static EndoImages of(Endo const& e) {
      return {e.image(Gen::a), e.image(Gen::b), e.image(Gen::s)};
    }
    bool operator==(EndoImages const&) const = default;
  };

  struct Certificate {
    HnnParams                params = HnnParams::paper();
    EndoImages               phi, psi;
    std::vector<CheckResult> checks;
    Word                     witness_kernel;
    bool                     overall = false;
    std::uint64_t            seed    = 0;

    bool operator==(Certificate const&) const = default;
  };

  struct CertifyInput {
    Endo       phi;
    Endo       psi;
    GenWordMap containment_witnesses;
    GenWordMap surjectivity_preimages;
    Word       kernel_witness;
    FuzzConfig fuzz;
    // Random pairs used to sample multiplicativity of psi~.
    std::uint64_t samples = 200;
    Limits        limits;
  };

  // Fixtures for the (2,4,0) instance.
  GenWordMap paper_containment_witnesses();
  GenWordMap paper_surjectivity_preimages();
  Word       paper_kernel_witness();
  CertifyInput paper_certify_input();

  // Runs all ten checks. Errors raised by a check (resource caps, contract
  // violations) mark that check failed, with the message as evidence.
  Certificate certify_non_hopfian(CertifyInput const& in);

  // True iff no check failed; skipped checks carry their reason as evidence.
  bool aggregate(std::vector<CheckResult> const& checks);

  ojson       certificate_to_json(Certificate const& c);
  Certificate certificate_from_json(ojson const& j);
  // Indented JSON document with a trailing newline.
  std::string certificate_to_report(Certificate const& c);

  ojson word_map_to_json(GenWordMap const& m);

}  // namespace hnn
