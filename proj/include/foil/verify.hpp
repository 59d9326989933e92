#pragma once

#include <string>
#include <vector>

#include "foil/diagram.hpp"

namespace foil {

struct VerifyCheck {
  std::string name;
  bool ok = false;
  double milliseconds = 0.0;
  std::string detail;  // first failure, empty when ok
};

/// Reference data the golden checks compare against; defaults to the
/// embedded copies, overridable (e.g. from files) for negative controls.
struct VerifyGoldens {
  std::string twist_table_csv;
  std::string foil_table_csv;
  std::string regions_grid7_csv;
  std::string states_grid7_csv;

  static VerifyGoldens embedded();
};

/// Cross-checks every route against every other: brute-force state sums vs
/// closed forms, recurrences vs closed forms, geometric region enumeration
/// vs region codes, bijection round trips, and the golden tables. Depth-
/// bounded checks run up to max_n; requires max_n within the enumeration cap.
std::vector<VerifyCheck> run_verification(unsigned max_n,
                                          const EnumerationOptions& options = {},
                                          const VerifyGoldens& goldens = VerifyGoldens::embedded());

bool all_passed(const std::vector<VerifyCheck>& checks);

}  // namespace foil
