#include "foil/render.hpp"

#include <algorithm>
#include <sstream>

namespace foil {

std::string polynomial_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& coeffs = p.coefficients();
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (coeffs[k] == 0) continue;
    if (!out.empty()) out += " + ";
    if (coeffs[k] != 1 || k == 0) out += coeffs[k].str();
    if (k == 1) {
      out += "x";
    } else if (k > 1) {
      out += "x^" + std::to_string(k);
    }
  }
  return out;
}

std::string word_text(const BinaryWord& w) {
  return w.empty() ? "(empty)" : w.digits();
}

std::string csv_join(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) line += ",";
    line += cells[i];
  }
  return line;
}

namespace {

// Header plus one row of cells per n; cells beyond a row's polynomial degree
// are empty strings, and every row is padded to the widest row.
std::vector<std::vector<std::string>> table_cells(KnotFamily family, unsigned max_n) {
  std::vector<std::vector<std::string>> rows;
  std::size_t width = 0;
  for (unsigned n = 0; n <= max_n; ++n) {
    const Polynomial p = family_polynomial(family, n);
    std::vector<std::string> row;
    row.push_back(std::to_string(n));
    for (const BigInt& c : p.coefficients()) row.push_back(c.str());
    width = std::max(width, row.size());
    rows.push_back(std::move(row));
  }
  std::vector<std::string> header;
  header.push_back("n");
  for (std::size_t k = 0; k + 1 < width; ++k) header.push_back(std::to_string(k));
  rows.insert(rows.begin(), std::move(header));
  for (auto& row : rows) row.resize(width);
  return rows;
}

std::string cells_to_csv(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    out += csv_join(row);
    out += "\n";
  }
  return out;
}

std::string cells_to_aligned_text(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) line += "  ";
      line += std::string(widths[i] - row[i].size(), ' ') + row[i];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  return out.str();
}

}  // namespace

std::string table_csv(KnotFamily family, unsigned max_n) {
  return cells_to_csv(table_cells(family, max_n));
}

std::string table_text(KnotFamily family, unsigned max_n) {
  return cells_to_aligned_text(table_cells(family, max_n));
}

namespace {

std::vector<std::vector<std::string>> grid_cells(const std::vector<PairingEntry>& entries,
                                                 unsigned n, bool state_side) {
  std::vector<std::vector<std::string>> rows(n + 1, std::vector<std::string>(n + 1));
  rows[0][0] = "k";
  for (unsigned p = 0; p < n; ++p) rows[0][p + 1] = std::to_string(p);
  for (unsigned k = 0; k < n; ++k) rows[k + 1][0] = std::to_string(k);
  for (const PairingEntry& entry : entries) {
    if (entry.all_ones) continue;
    rows[entry.k + 1][entry.p + 1] = (state_side ? entry.state : entry.region).digits();
  }
  return rows;
}

}  // namespace

std::string pairing_grid_csv(const std::vector<PairingEntry>& entries, unsigned n,
                             bool state_side) {
  return cells_to_csv(grid_cells(entries, n, state_side));
}

std::string pairing_text(const std::vector<PairingEntry>& entries, unsigned n) {
  std::ostringstream out;
  out << "region codes (rows k, columns p):\n";
  out << cells_to_aligned_text(grid_cells(entries, n, false));
  out << "state words (rows k, columns p):\n";
  out << cells_to_aligned_text(grid_cells(entries, n, true));
  for (const PairingEntry& entry : entries) {
    if (!entry.all_ones) continue;
    out << "all-ones pair: " << word_text(entry.region) << " -> " << word_text(entry.state)
        << "\n";
  }
  return out.str();
}

}  // namespace foil
