#include "foil/golden.hpp"

namespace foil::golden {

const char* const kTwistTableCsv =
    "n,0,1,2,3,4,5,6,7\n"
    "0,0,1,,,,,,\n"
    "1,0,1,1,,,,,\n"
    "2,0,1,2,1,,,,\n"
    "3,0,1,3,3,1,,,\n"
    "4,0,1,4,6,4,1,,\n"
    "5,0,1,5,10,10,5,1,\n"
    "6,0,1,6,15,20,15,6,1\n";

const char* const kFoilTableCsv =
    "n,0,1,2,3,4,5,6,7,8,9,10,11,12\n"
    "0,0,0,1,,,,,,,,,,\n"
    "1,0,1,1,,,,,,,,,,\n"
    "2,0,2,2,,,,,,,,,,\n"
    "3,0,3,4,1,,,,,,,,,\n"
    "4,0,4,7,4,1,,,,,,,,\n"
    "5,0,5,11,10,5,1,,,,,,,\n"
    "6,0,6,16,20,15,6,1,,,,,,\n"
    "7,0,7,22,35,35,21,7,1,,,,,\n"
    "8,0,8,29,56,70,56,28,8,1,,,,\n"
    "9,0,9,37,84,126,126,84,36,9,1,,,\n"
    "10,0,10,46,120,210,252,210,120,45,10,1,,\n"
    "11,0,11,56,165,330,462,462,330,165,55,11,1,\n"
    "12,0,12,67,220,495,792,924,792,495,220,66,12,1\n";

const char* const kPairingRegionsGrid7Csv =
    "k,0,1,2,3,4,5,6\n"
    "0,0000000,0000001,0000011,0000111,0001111,0011111,0111111\n"
    "1,1000000,1000001,1000011,1000111,1001111,1011111,\n"
    "2,1100000,1100001,1100011,1100111,1101111,,\n"
    "3,1110000,1110001,1110011,1110111,,,\n"
    "4,1111000,1111001,1111011,,,,\n"
    "5,1111100,1111101,,,,,\n"
    "6,1111110,,,,,,\n";

const char* const kPairingStatesGrid7Csv =
    "k,0,1,2,3,4,5,6\n"
    "0,00111111,10011111,11001111,11100111,11110011,11111001,11111100\n"
    "1,01011111,10101111,11010111,11101011,11110101,11111010,\n"
    "2,01101111,10110111,11011011,11101101,11110110,,\n"
    "3,01110111,10111011,11011101,11101110,,,\n"
    "4,01111011,10111101,11011110,,,,\n"
    "5,01111101,10111110,,,,,\n"
    "6,01111110,,,,,,\n";

const std::array<unsigned, 15> kLazyCaterer = {1,  2,  4,  7,  11, 16, 22, 29,
                                               37, 46, 56, 67, 79, 92, 106};

const std::vector<std::vector<const char*>> kRegionCodeListings = {
    {"0", "1"},
    {"00", "10", "01", "11"},
    {"000", "100", "110", "001", "101", "011", "111"},
    {"0000", "1000", "1100", "1110", "0001", "1001", "1101", "0011", "1011", "0111", "1111"},
};

const std::vector<std::vector<const char*>> kFoilWordListings = {
    {"1"},
    {"00", "11"},
    {"001", "010", "100", "111"},
    {"0101", "0110", "0011", "1001", "1010", "1100", "1111"},
};

}  // namespace foil::golden
