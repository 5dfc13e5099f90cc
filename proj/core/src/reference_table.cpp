#include "epp/reference_table.hpp"

namespace epp {

const std::vector<PassTableRow>& reference_pass_table() {
  static const std::vector<PassTableRow> rows{
      {"F^4", "00000000", "00000000", "0000"},
      {"G^4", "01010101", "00000100", "0000"},
      {"G^4", "10101010", "00000010", "0000"},
      {"G^4", "11111111", "00000110", "0000"},
      {"F^2G^2", "00010001", "00010000", "0001"},
      {"F^2G^2", "01000100", "00010100", "0001"},
      {"G^4", "10111011", "00010010", "0001"},
      {"G^4", "11101110", "00010110", "0001"},
      {"F^2G^2", "00101000", "00100000", "0010"},
      {"G^4", "01111101", "00100100", "0010"},
      {"F^2G^2", "10000010", "00100010", "0010"},
      {"G^4", "11010111", "00100110", "0010"},
      {"FG^3", "00111001", "00110000", "0011"},
      {"FG^3", "01101100", "00110100", "0011"},
      {"FG^3", "10010011", "00110010", "0011"},
      {"FG^3", "11000110", "00110110", "0011"},
      {"F^2G^2", "00010100", "01000100", "0100"},
      {"F^2G^2", "01000001", "01000000", "0100"},
      {"G^4", "10111110", "01000110", "0100"},
      {"G^4", "11101011", "01000010", "0100"},
      {"F^2G^2", "00000101", "01010100", "0101"},
      {"F^2G^2", "01010000", "01010000", "0101"},
      {"G^4", "10101111", "01010110", "0101"},
      {"G^4", "11111010", "01010010", "0101"},
      {"F^2G^2", "00111100", "01100100", "0110"},
      {"G^4", "01101001", "01100000", "0110"},
      {"G^4", "10010110", "01100110", "0110"},
      {"F^2G^2", "11000011", "01100010", "0110"},
      {"FG^3", "00101101", "01110100", "0111"},
      {"FG^3", "01111000", "01110000", "0111"},
      {"FG^3", "10000111", "01110110", "0111"},
      {"FG^3", "11010010", "01110010", "0111"},
      {"F^2G^2", "00100010", "10000010", "1000"},
      {"G^4", "01110111", "10000110", "1000"},
      {"F^2G^2", "10001000", "10000000", "1000"},
      {"G^4", "11011101", "10000100", "1000"},
      {"F^2G^2", "00110011", "10010010", "1001"},
      {"G^4", "01100110", "10010110", "1001"},
      {"G^4", "10011001", "10010000", "1001"},
      {"F^2G^2", "11001100", "10010100", "1001"},
      {"F^2G^2", "00001010", "10100010", "1010"},
      {"G^4", "01011111", "10100110", "1010"},
      {"F^2G^2", "10100000", "10100000", "1010"},
      {"G^4", "11110101", "10100100", "1010"},
      {"FG^3", "00011011", "10110010", "1011"},
      {"FG^3", "01001110", "10110110", "1011"},
      {"FG^3", "10110001", "10110000", "1011"},
      {"FG^3", "11100100", "10110100", "1011"},
      {"FG^3", "00110110", "11000110", "1100"},
      {"FG^3", "01100011", "11000010", "1100"},
      {"FG^3", "10011100", "11000100", "1100"},
      {"FG^3", "11001001", "11000000", "1100"},
      {"FG^3", "00100111", "11010110", "1101"},
      {"FG^3", "01110010", "11010010", "1101"},
      {"FG^3", "10001101", "11010100", "1101"},
      {"FG^3", "11011000", "11010000", "1101"},
      {"FG^3", "00011110", "11100110", "1110"},
      {"FG^3", "01001011", "11100010", "1110"},
      {"FG^3", "10110100", "11100100", "1110"},
      {"FG^3", "11100001", "11100000", "1110"},
      {"F^2G^2", "00001111", "11110110", "1111"},
      {"G^4", "01011010", "11110010", "1111"},
      {"G^4", "10100101", "11110100", "1111"},
      {"F^2G^2", "11110000", "11110000", "1111"},
  };
  return rows;
}

}  // namespace epp
