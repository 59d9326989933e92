#include <doctest.h>

#include "foil/golden.hpp"
#include "foil/render.hpp"

using namespace foil;

TEST_CASE("polynomial text rendering") {
  CHECK(polynomial_text(Polynomial()) == "0");
  CHECK(polynomial_text(Polynomial({0, 3, 4, 1})) == "x^3 + 4x^2 + 3x");
  CHECK(polynomial_text(Polynomial({0, 1})) == "x");
  CHECK(polynomial_text(Polynomial({0, 0, 1})) == "x^2");
  CHECK(polynomial_text(Polynomial({5})) == "5");
  CHECK(polynomial_text(Polynomial({2, 0, 7})) == "7x^2 + 2");
}

TEST_CASE("word text rendering") {
  CHECK(word_text(BinaryWord()) == "(empty)");
  CHECK(word_text(BinaryWord::parse("0101")) == "0101");
}

TEST_CASE("csv join") {
  CHECK(csv_join({"a", "", "c"}) == "a,,c");
  CHECK(csv_join({}) == "");
}

TEST_CASE("coefficient tables match the reference csv") {
  CHECK(table_csv(KnotFamily::twist_loop, 6) == golden::kTwistTableCsv);
  CHECK(table_csv(KnotFamily::foil, 12) == golden::kFoilTableCsv);
}

TEST_CASE("single-row foil table") {
  CHECK(table_csv(KnotFamily::foil, 0) == "n,0,1,2\n0,0,0,1\n");
}

TEST_CASE("aligned table text") {
  CHECK(table_text(KnotFamily::twist_loop, 1) ==
        "n  0  1  2\n"
        "0  0  1\n"
        "1  0  1  1\n");
}

TEST_CASE("pairing grids match the reference csv") {
  const auto entries = pairing_table(7);
  CHECK(pairing_grid_csv(entries, 7, false) == golden::kPairingRegionsGrid7Csv);
  CHECK(pairing_grid_csv(entries, 7, true) == golden::kPairingStatesGrid7Csv);
}

TEST_CASE("pairing text includes the all-ones pair") {
  const auto entries = pairing_table(1);
  const std::string text = pairing_text(entries, 1);
  CHECK(text.find("region codes (rows k, columns p):") != std::string::npos);
  CHECK(text.find("state words (rows k, columns p):") != std::string::npos);
  CHECK(text.find("all-ones pair: 1 -> 11") != std::string::npos);
}
