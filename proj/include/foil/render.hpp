#pragma once

#include <string>
#include <vector>

#include "foil/bijection.hpp"
#include "foil/polynomial.hpp"
#include "foil/words.hpp"

namespace foil {

/// Conventional descending form, e.g. "x^3 + 4x^2 + 3x"; "0" for zero.
std::string polynomial_text(const Polynomial& p);

/// "(empty)" for the empty word in text output; csv/json render it as "".
std::string word_text(const BinaryWord& w);

/// Coefficient triangle as csv: header row "n,0,1,...", one row per n,
/// cells past the row's degree left empty.
std::string table_csv(KnotFamily family, unsigned max_n);

/// Same triangle with space-aligned columns for terminals.
std::string table_text(KnotFamily family, unsigned max_n);

/// The grid half of a pairing table (all-ones pair excluded) as csv:
/// header "k,0,1,...", row per k, columns by p, short rows padded empty.
/// Renders the region side or the state side.
std::string pairing_grid_csv(const std::vector<PairingEntry>& entries, unsigned n,
                             bool state_side);

/// Both grids plus the all-ones pair, space-aligned.
std::string pairing_text(const std::vector<PairingEntry>& entries, unsigned n);

std::string csv_join(const std::vector<std::string>& cells);

}  // namespace foil
