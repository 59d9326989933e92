// Command-line front end: polynomials, coefficient tables, word sets, the
// geometric region enumeration, the pairing bijection, and the verification
// suite. Exit codes: 0 success, 2 usage, 3 domain or cap error, 4 failed
// verification.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "foil/arrangement.hpp"
#include "foil/bijection.hpp"
#include "foil/diagram.hpp"
#include "foil/polynomial.hpp"
#include "foil/render.hpp"
#include "foil/verify.hpp"
#include "foil/words.hpp"

namespace {

using Json = nlohmann::ordered_json;

enum class Format { text, csv, json };

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  return Format::text;
}

std::string word_cell(const foil::BinaryWord& w) {
  return w.digits();  // empty word renders as the empty string
}

foil::KnotFamily family_of(const std::string& kind) {
  return kind == "twist" ? foil::KnotFamily::twist_loop : foil::KnotFamily::foil;
}

std::string run_poly(const std::string& kind, unsigned n, const std::string& method,
                     Format format, const foil::EnumerationOptions& options) {
  foil::Polynomial p;
  if (method == "statesum") {
    const foil::PlanarDiagram diagram =
        kind == "twist" ? foil::build_twist_loop(n) : foil::build_foil(n);
    p = foil::state_sum(diagram, options);
  } else if (method == "recurrence") {
    p = kind == "twist" ? foil::twist_loop_polynomial_by_recurrence(n)
                        : foil::foil_polynomial_by_recurrence(n);
  } else {
    p = foil::family_polynomial(family_of(kind), n);
  }

  switch (format) {
    case Format::text:
      return foil::polynomial_text(p) + "\n";
    case Format::csv: {
      std::string out = "k,coefficient\n";
      for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
        out += std::to_string(k) + "," + p.coefficients()[k].str() + "\n";
      }
      return out;
    }
    case Format::json: {
      Json doc;
      doc["kind"] = kind;
      doc["n"] = n;
      doc["method"] = method;
      Json coeffs = Json::array();
      for (const foil::BigInt& c : p.coefficients()) coeffs.push_back(c.str());
      doc["coefficients"] = std::move(coeffs);
      return doc.dump(2) + "\n";
    }
  }
  return {};
}

std::string run_table(const std::string& kind, unsigned max_n, Format format) {
  const foil::KnotFamily family = family_of(kind);
  switch (format) {
    case Format::text:
      return foil::table_text(family, max_n);
    case Format::csv:
      return foil::table_csv(family, max_n);
    case Format::json: {
      Json doc;
      doc["kind"] = kind;
      doc["max_n"] = max_n;
      Json rows = Json::array();
      for (unsigned n = 0; n <= max_n; ++n) {
        const foil::Polynomial p = foil::family_polynomial(family, n);
        Json row = Json::array();
        for (const foil::BigInt& c : p.coefficients()) row.push_back(c.str());
        rows.push_back(std::move(row));
      }
      doc["rows"] = std::move(rows);
      return doc.dump(2) + "\n";
    }
  }
  return {};
}

std::string words_output(const std::string& which, unsigned n, const foil::WordSet& words,
                         Format format) {
  switch (format) {
    case Format::text: {
      std::string out;
      for (const foil::BinaryWord& w : words) out += foil::word_text(w) + "\n";
      return out;
    }
    case Format::csv: {
      std::string out = "word\n";
      for (const foil::BinaryWord& w : words) out += word_cell(w) + "\n";
      return out;
    }
    case Format::json: {
      Json doc;
      doc["which"] = which;
      doc["n"] = n;
      Json list = Json::array();
      for (const foil::BinaryWord& w : words) list.push_back(word_cell(w));
      doc["words"] = std::move(list);
      return doc.dump(2) + "\n";
    }
  }
  return {};
}

std::string run_words(const std::string& which, unsigned n, Format format) {
  foil::WordSet words;
  if (which == "twist2") {
    words = foil::twist_two_state_words(n);
  } else if (which == "foil2") {
    words = foil::foil_two_state_words(n);
  } else if (which == "regions") {
    words = foil::region_codes(n);
  } else {
    words = foil::new_region_codes(n);
  }
  return words_output(which, n, words, format);
}

std::string run_regions_geo(unsigned n, Format format,
                            const foil::RegionEnumerationOptions& options) {
  const std::vector<foil::Region> regions = foil::enumerate_regions(n, options);
  switch (format) {
    case Format::text: {
      std::string out;
      for (const foil::Region& r : regions) {
        out += foil::signvector_to_code(r.signs).digits() + " " +
               foil::to_string(r.witness.x) + " " + foil::to_string(r.witness.y) + "\n";
      }
      return out;
    }
    case Format::csv: {
      std::string out = "code,x,y\n";
      for (const foil::Region& r : regions) {
        out += foil::signvector_to_code(r.signs).digits() + "," +
               foil::to_string(r.witness.x) + "," + foil::to_string(r.witness.y) + "\n";
      }
      return out;
    }
    case Format::json: {
      Json doc;
      doc["n"] = n;
      Json list = Json::array();
      for (const foil::Region& r : regions) {
        Json item;
        item["code"] = foil::signvector_to_code(r.signs).digits();
        item["x"] = foil::to_string(r.witness.x);
        item["y"] = foil::to_string(r.witness.y);
        list.push_back(std::move(item));
      }
      doc["regions"] = std::move(list);
      return doc.dump(2) + "\n";
    }
  }
  return {};
}

std::string run_states(const std::string& kind, unsigned n, std::optional<unsigned> components,
                       Format format, const foil::EnumerationOptions& options) {
  const foil::PlanarDiagram diagram =
      kind == "twist" ? foil::build_twist_loop(n) : foil::build_foil(n);
  if (components) {
    const foil::WordSet words = foil::states_by_components(diagram, *components, options);
    return words_output(kind, n, words, format);
  }
  const foil::Polynomial p = foil::state_sum(diagram, options);
  switch (format) {
    case Format::text: {
      std::string out;
      for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
        if (p.coefficients()[k] == 0) continue;
        out += std::to_string(k) + " components: " + p.coefficients()[k].str() + " states\n";
      }
      return out;
    }
    case Format::csv: {
      std::string out = "components,count\n";
      for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
        if (p.coefficients()[k] == 0) continue;
        out += std::to_string(k) + "," + p.coefficients()[k].str() + "\n";
      }
      return out;
    }
    case Format::json: {
      Json doc;
      doc["kind"] = kind;
      doc["n"] = n;
      Json list = Json::array();
      for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
        if (p.coefficients()[k] == 0) continue;
        Json item;
        item["components"] = k;
        item["count"] = p.coefficients()[k].str();
        list.push_back(std::move(item));
      }
      doc["counts"] = std::move(list);
      return doc.dump(2) + "\n";
    }
  }
  return {};
}

std::string run_bijection(unsigned n, Format format) {
  const std::vector<foil::PairingEntry> entries = foil::pairing_table(n);
  switch (format) {
    case Format::text:
      return foil::pairing_text(entries, n);
    case Format::csv: {
      std::string out = "k,p,region,state\n";
      for (const foil::PairingEntry& e : entries) {
        if (e.all_ones) {
          out += ",," + word_cell(e.region) + "," + word_cell(e.state) + "\n";
        } else {
          out += std::to_string(e.k) + "," + std::to_string(e.p) + "," + word_cell(e.region) +
                 "," + word_cell(e.state) + "\n";
        }
      }
      return out;
    }
    case Format::json: {
      Json doc;
      doc["n"] = n;
      Json list = Json::array();
      for (const foil::PairingEntry& e : entries) {
        Json item;
        if (e.all_ones) {
          item["k"] = nullptr;
          item["p"] = nullptr;
        } else {
          item["k"] = e.k;
          item["p"] = e.p;
        }
        item["region"] = word_cell(e.region);
        item["state"] = word_cell(e.state);
        list.push_back(std::move(item));
      }
      doc["pairs"] = std::move(list);
      return doc.dump(2) + "\n";
    }
  }
  return {};
}

bool load_golden_file(const std::string& path, std::string& into) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  into = buffer.str();
  return true;
}

std::string run_verify(unsigned max_n, const std::string& goldens_dir, Format format, bool& ok,
                       const foil::EnumerationOptions& options) {
  foil::VerifyGoldens goldens = foil::VerifyGoldens::embedded();
  if (!goldens_dir.empty()) {
    load_golden_file(goldens_dir + "/twist_table.csv", goldens.twist_table_csv);
    load_golden_file(goldens_dir + "/foil_table.csv", goldens.foil_table_csv);
    load_golden_file(goldens_dir + "/pairing_regions_7.csv", goldens.regions_grid7_csv);
    load_golden_file(goldens_dir + "/pairing_states_7.csv", goldens.states_grid7_csv);
  }

  const std::vector<foil::VerifyCheck> checks = foil::run_verification(max_n, options, goldens);
  ok = foil::all_passed(checks);

  switch (format) {
    case Format::text: {
      std::ostringstream out;
      unsigned failed = 0;
      for (const foil::VerifyCheck& c : checks) {
        char ms[32];
        std::snprintf(ms, sizeof(ms), "%.1f", c.milliseconds);
        out << (c.ok ? "PASS " : "FAIL ") << c.name << " (" << ms << " ms)";
        if (!c.ok) {
          out << ": " << c.detail;
          ++failed;
        }
        out << "\n";
      }
      if (failed == 0) {
        out << "all " << checks.size() << " checks passed\n";
      } else {
        out << failed << " of " << checks.size() << " checks failed\n";
      }
      return out.str();
    }
    case Format::csv: {
      std::string out = "check,ok,ms\n";
      for (const foil::VerifyCheck& c : checks) {
        char ms[32];
        std::snprintf(ms, sizeof(ms), "%.1f", c.milliseconds);
        out += c.name + "," + (c.ok ? "1" : "0") + "," + ms + "\n";
      }
      return out;
    }
    case Format::json: {
      Json doc;
      doc["max_n"] = max_n;
      Json list = Json::array();
      for (const foil::VerifyCheck& c : checks) {
        Json item;
        item["name"] = c.name;
        item["ok"] = c.ok;
        item["ms"] = c.milliseconds;
        item["detail"] = c.detail;
        list.push_back(std::move(item));
      }
      doc["checks"] = std::move(list);
      doc["ok"] = ok;
      return doc.dump(2) + "\n";
    }
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "foilstates: state enumeration for foil and twist-loop shadow diagrams,\n"
      "line-arrangement region codes, and the bijection between them.\n"
      "The empty word prints as (empty) in text output and as an empty field in csv/json."};
  app.require_subcommand(1);

  std::string format_name = "text";
  std::string out_path;
  std::optional<unsigned> cap_override;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "Write output to a file instead of stdout");
  app.add_option("--max-enumeration", cap_override,
                 "Override the enumeration cap (default 30 crossings for state sums, 64 lines "
                 "for regions)");

  std::string kind = "foil";
  std::string method = "closed";
  std::string which = "regions";
  std::string goldens_dir;
  unsigned n = 0;
  unsigned max_n = 12;
  std::optional<unsigned> components;

  CLI::App* poly = app.add_subcommand("poly", "Generating polynomial of a knot family member");
  poly->add_option("kind", kind, "twist or foil")
      ->required()
      ->check(CLI::IsMember({"twist", "foil"}));
  poly->add_option("n", n, "Number of crossings")->required();
  poly->add_option("--method", method, "closed, recurrence, or statesum")
      ->check(CLI::IsMember({"closed", "recurrence", "statesum"}))
      ->capture_default_str();

  CLI::App* table = app.add_subcommand("table", "Coefficient triangle for n = 0..max_n");
  table->add_option("kind", kind, "twist or foil")
      ->required()
      ->check(CLI::IsMember({"twist", "foil"}));
  table->add_option("max_n", max_n, "Last row of the table")->required();

  CLI::App* words = app.add_subcommand("words", "Closed-form word sets");
  words->add_option("which", which, "twist2, foil2, regions, or newregions")
      ->required()
      ->check(CLI::IsMember({"twist2", "foil2", "regions", "newregions"}));
  words->add_option("n", n, "Word length")->required();

  CLI::App* regions_geo =
      app.add_subcommand("regions-geo", "Region codes computed geometrically, with witnesses");
  regions_geo->add_option("n", n, "Number of lines")->required();

  CLI::App* states = app.add_subcommand("states", "Enumerate split states of a diagram");
  states->add_option("kind", kind, "twist or foil")
      ->required()
      ->check(CLI::IsMember({"twist", "foil"}));
  states->add_option("n", n, "Number of crossings")->required();
  states->add_option("--components", components, "List the split words with this many components");

  CLI::App* bijection =
      app.add_subcommand("bijection", "Pairing of region codes with foil 2-state words");
  bijection->add_option("n", n, "Number of lines")->required();

  CLI::App* verify = app.add_subcommand("verify", "Run the cross-check suite");
  verify->add_option("max_n", max_n, "Depth for the bounded checks")->capture_default_str();
  verify->add_option("--goldens", goldens_dir,
                     "Directory with replacement golden files (twist_table.csv, foil_table.csv, "
                     "pairing_regions_7.csv, pairing_states_7.csv)");

  // Global flags may follow the subcommand.
  for (CLI::App* sub : {poly, table, words, regions_geo, states, bijection, verify}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const Format format = parse_format(format_name);
  foil::EnumerationOptions enum_options;
  foil::RegionEnumerationOptions region_options;
  if (cap_override) {
    enum_options.max_crossings = *cap_override;
    region_options.max_lines = *cap_override;
  }

  std::string output;
  bool verify_ok = true;
  try {
    if (poly->parsed()) {
      output = run_poly(kind, n, method, format, enum_options);
    } else if (table->parsed()) {
      output = run_table(kind, max_n, format);
    } else if (words->parsed()) {
      output = run_words(which, n, format);
    } else if (regions_geo->parsed()) {
      output = run_regions_geo(n, format, region_options);
    } else if (states->parsed()) {
      output = run_states(kind, n, components, format, enum_options);
    } else if (bijection->parsed()) {
      output = run_bijection(n, format);
    } else if (verify->parsed()) {
      output = run_verify(max_n, goldens_dir, format, verify_ok, enum_options);
    }
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "; raise it with --max-enumeration\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }

  if (out_path.empty()) {
    std::cout << output;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open " << out_path << " for writing\n";
      return 1;
    }
    out << output;
  }
  return verify_ok ? 0 : 4;
}
