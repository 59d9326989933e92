#include "foil/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "foil/arrangement.hpp"
#include "foil/bijection.hpp"
#include "foil/golden.hpp"
#include "foil/render.hpp"

namespace foil {

namespace {

WordSet listing_to_set(const std::vector<const char*>& words) {
  std::vector<BinaryWord> parsed;
  parsed.reserve(words.size());
  for (const char* w : words) parsed.push_back(BinaryWord::parse(w));
  return WordSet(std::move(parsed));
}

class Runner {
 public:
  explicit Runner(std::vector<VerifyCheck>& out) : out_(out) {}

  // fail() reports the first problem; returning from the body early leaves
  // the check passed.
  void run(const std::string& name, const std::function<void(std::string& fail)>& body) {
    VerifyCheck check;
    check.name = name;
    const auto start = std::chrono::steady_clock::now();
    std::string fail;
    body(fail);
    const auto stop = std::chrono::steady_clock::now();
    check.milliseconds = std::chrono::duration<double, std::milli>(stop - start).count();
    check.ok = fail.empty();
    check.detail = fail;
    out_.push_back(std::move(check));
  }

 private:
  std::vector<VerifyCheck>& out_;
};

}  // namespace

VerifyGoldens VerifyGoldens::embedded() {
  return {golden::kTwistTableCsv, golden::kFoilTableCsv, golden::kPairingRegionsGrid7Csv,
          golden::kPairingStatesGrid7Csv};
}

std::vector<VerifyCheck> run_verification(unsigned max_n, const EnumerationOptions& options,
                                          const VerifyGoldens& goldens) {
  if (max_n > options.max_crossings) {
    throw std::length_error("verification depth " + std::to_string(max_n) +
                            " exceeds the enumeration cap of " +
                            std::to_string(options.max_crossings));
  }

  std::vector<VerifyCheck> checks;
  Runner runner(checks);

  runner.run("twist-statesum-vs-closed", [&](std::string& fail) {
    for (unsigned n = 0; n <= max_n; ++n) {
      if (state_sum(build_twist_loop(n), options) != twist_loop_polynomial(n)) {
        fail = "mismatch at n=" + std::to_string(n);
        return;
      }
    }
  });

  runner.run("foil-statesum-vs-closed", [&](std::string& fail) {
    for (unsigned n = 0; n <= max_n; ++n) {
      if (state_sum(build_foil(n), options) != foil_polynomial(n)) {
        fail = "mismatch at n=" + std::to_string(n);
        return;
      }
    }
  });

  runner.run("recurrences-vs-closed-forms", [&](std::string& fail) {
    for (unsigned n = 0; n <= std::max(max_n, 64u); ++n) {
      if (foil_polynomial_by_recurrence(n) != foil_polynomial(n)) {
        fail = "foil mismatch at n=" + std::to_string(n);
        return;
      }
      if (twist_loop_polynomial_by_recurrence(n) != twist_loop_polynomial(n)) {
        fail = "twist mismatch at n=" + std::to_string(n);
        return;
      }
    }
  });

  runner.run("lazy-caterer-coefficients", [&](std::string& fail) {
    for (unsigned n = 1; n <= golden::kLazyCaterer.size(); ++n) {
      if (foil_polynomial(n).coefficient(2) != golden::kLazyCaterer[n - 1]) {
        fail = "mismatch at n=" + std::to_string(n);
        return;
      }
    }
  });

  runner.run("word-sets-closed-vs-recurrence", [&](std::string& fail) {
    for (unsigned n = 0; n <= std::max(max_n, 64u); ++n) {
      const WordSet regions = region_codes(n);
      if (regions != region_codes_by_recurrence(n)) {
        fail = "region codes mismatch at n=" + std::to_string(n);
        return;
      }
      if (regions.size() != (std::size_t{n} * n + n + 2) / 2) {
        fail = "region code count off at n=" + std::to_string(n);
        return;
      }
      const WordSet foilwords = foil_two_state_words(n);
      if (foilwords != foil_two_state_words_by_recurrence(n)) {
        fail = "foil words mismatch at n=" + std::to_string(n);
        return;
      }
      if (n >= 1 && foilwords.size() != (std::size_t{n} * n - n + 2) / 2) {
        fail = "foil word count off at n=" + std::to_string(n);
        return;
      }
    }
  });

  runner.run("geometry-vs-region-codes", [&](std::string& fail) {
    for (unsigned n = 1; n <= std::min(max_n, 64u); ++n) {
      std::vector<BinaryWord> codes;
      for (const SignVector& v : enumerate_region_signvectors(n)) {
        codes.push_back(signvector_to_code(v));
      }
      if (WordSet(std::move(codes)) != region_codes(n)) {
        fail = "mismatch at n=" + std::to_string(n);
        return;
      }
    }
  });

  runner.run("intersections-above-later-lines", [&](std::string& fail) {
    const unsigned bound = std::max(max_n, 40u);
    for (unsigned p = 0; p <= bound; ++p) {
      for (unsigned q = p + 1; q <= bound; ++q) {
        const RationalPoint point = family_intersection(p, q);
        for (unsigned r = q + 1; r <= bound; ++r) {
          if (halfplane_sign(r, point) != 1) {
            fail = "sign not positive at p=" + std::to_string(p) + " q=" + std::to_string(q) +
                   " r=" + std::to_string(r);
            return;
          }
        }
      }
    }
  });

  runner.run("two-state-words-vs-enumeration", [&](std::string& fail) {
    for (unsigned n = 1; n <= max_n; ++n) {
      if (states_by_components(build_twist_loop(n), 2, options) != twist_two_state_words(n)) {
        fail = "twist mismatch at n=" + std::to_string(n);
        return;
      }
      if (n >= 2 &&
          states_by_components(build_foil(n), 2, options) != foil_two_state_words(n)) {
        fail = "foil mismatch at n=" + std::to_string(n);
        return;
      }
    }
  });

  runner.run("bijection-round-trips", [&](std::string& fail) {
    for (unsigned n = 0; n <= std::max(max_n, 64u); ++n) {
      const WordSet regions = region_codes(n);
      std::vector<BinaryWord> images;
      images.reserve(regions.size());
      for (const BinaryWord& code : regions) {
        const BinaryWord state = region_code_to_state_word(code);
        if (state_word_to_region_code(state) != code) {
          fail = "round trip failed for " + code.digits();
          return;
        }
        images.push_back(state);
      }
      const WordSet image(std::move(images));
      if (image.size() != regions.size()) {
        fail = "map not injective at n=" + std::to_string(n);
        return;
      }
      if (image != foil_two_state_words(n + 1)) {
        fail = "image differs from foil words at n=" + std::to_string(n);
        return;
      }
    }
  });

  runner.run("twist-table-golden", [&](std::string& fail) {
    if (table_csv(KnotFamily::twist_loop, 6) != goldens.twist_table_csv) {
      fail = "twist coefficient table differs from the reference csv";
    }
  });

  runner.run("foil-table-golden", [&](std::string& fail) {
    if (table_csv(KnotFamily::foil, 12) != goldens.foil_table_csv) {
      fail = "foil coefficient table differs from the reference csv";
    }
  });

  runner.run("pairing-grids-golden", [&](std::string& fail) {
    const auto entries = pairing_table(7);
    if (pairing_grid_csv(entries, 7, false) != goldens.regions_grid7_csv) {
      fail = "region grid differs from the reference csv";
      return;
    }
    if (pairing_grid_csv(entries, 7, true) != goldens.states_grid7_csv) {
      fail = "state grid differs from the reference csv";
    }
  });

  runner.run("small-set-listings", [&](std::string& fail) {
    for (unsigned n = 1; n <= 4; ++n) {
      if (region_codes(n) != listing_to_set(golden::kRegionCodeListings[n - 1])) {
        fail = "region codes differ from listing at n=" + std::to_string(n);
        return;
      }
      if (foil_two_state_words(n) != listing_to_set(golden::kFoilWordListings[n - 1])) {
        fail = "foil words differ from listing at n=" + std::to_string(n);
        return;
      }
    }
    for (unsigned n = 4; n >= 1; --n) {
      if (peel_last(region_codes(n)) != region_codes(n - 1)) {
        fail = "region peel chain broke at n=" + std::to_string(n);
        return;
      }
      if (peel_first(foil_two_state_words(n)) != foil_two_state_words(n - 1)) {
        fail = "foil peel chain broke at n=" + std::to_string(n);
        return;
      }
    }
  });

  return checks;
}

bool all_passed(const std::vector<VerifyCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.ok; });
}

}  // namespace foil
