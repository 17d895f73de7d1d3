#pragma once

// Seeded generators shared by the property tests.

#include <cstdint>
#include <vector>

#include "hnn/hnn_word.hpp"
#include "hnn/random.hpp"

namespace gen {

  inline hnn::Word random_h_word(hnn::Rng& rng, std::size_t letters,
                                 std::int64_t max_exp = 4) {
    std::vector<hnn::Letter> raw;
    for (std::size_t i = 0; i < letters; ++i) {
      auto         g = static_cast<hnn::Gen>(rng.below(3));
      std::int64_t e = rng.uniform(1, max_exp);
      raw.push_back({g, rng.coin() ? e : -e});
    }
    return hnn::free_reduce(raw);
  }

  // A conjugate g^-1 r^{+-1} g of one of the two defining relators.
  inline hnn::Word random_relator_conjugate(hnn::Rng&             rng,
                                            hnn::HnnParams const& params) {
    using hnn::Gen;
    hnn::Word r;
    if (rng.coin()) {
      r = hnn::Word{{Gen::b, -1}, {Gen::a, 1}, {Gen::b, 1}, {Gen::a, -1}};
    } else {
      r = hnn::concat(
          hnn::Word{{Gen::s, -1}, {Gen::a, params.p()}, {Gen::s, 1}},
          hnn::invert(hnn::Word{{Gen::a, params.q()}, {Gen::b, params.k()}}));
    }
    if (rng.coin()) {
      r = hnn::invert(r);
    }
    hnn::Word g = random_h_word(rng, rng.below(5), 3);
    return hnn::concat(hnn::concat(hnn::invert(g), r), g);
  }

  // w with `r` spliced in between two letters (or inside a letter's power).
  inline hnn::Word insert_at_random(hnn::Rng& rng, hnn::Word const& w,
                                    hnn::Word const& r) {
    std::vector<hnn::Letter> units;
    for (auto const& l : w) {
      int step = l.exp > 0 ? 1 : -1;
      for (std::int64_t i = 0; i != l.exp; i += step) {
        units.push_back({l.gen, step});
      }
    }
    std::size_t pos = rng.below(units.size() + 1);
    units.insert(units.begin() + static_cast<std::ptrdiff_t>(pos), r.begin(),
                 r.end());
    return hnn::free_reduce(units);
  }

}  // namespace gen
