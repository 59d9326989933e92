#pragma once

#include <array>
#include <vector>

namespace foil::golden {

// Reference outputs transcribed by hand; tests and the verify command compare
// computed results against these rather than against other code paths.

/// table_csv(KnotFamily::twist_loop, 6)
extern const char* const kTwistTableCsv;

/// table_csv(KnotFamily::foil, 12). Cell (n=12, k=8) is 495 = C(12,8); the
/// widely circulated printing of this triangle shows 465 there, which the
/// closed form rules out.
extern const char* const kFoilTableCsv;

/// pairing_grid_csv(pairing_table(7), 7, false)
extern const char* const kPairingRegionsGrid7Csv;

/// pairing_grid_csv(pairing_table(7), 7, true)
extern const char* const kPairingStatesGrid7Csv;

/// Two-component state counts of the n-foil for n = 1..15.
extern const std::array<unsigned, 15> kLazyCaterer;

/// Region codes of 1..4 lines, in source order (not canonically sorted).
extern const std::vector<std::vector<const char*>> kRegionCodeListings;

/// Foil 2-state words for 1..4 crossings, in source order.
extern const std::vector<std::vector<const char*>> kFoilWordListings;

}  // namespace foil::golden
