#pragma once

#include <string>
#include <vector>

#include "ppcd/design.hpp"
#include "test_helpers.hpp"

namespace ppcd::testing {

/// Difference matrix of the published saturated d(8,8,2,5) design
/// (a W(8,5), rows given as +/-/0 strings).
inline DifferenceMatrix saturated_w85_x() {
  std::vector<std::string> rows = {
      "+++++000", "+-+-0+00", "++--00+0", "+--+000+",
      "-0001111", "0-001-1-", "00-011--", "000-1--1",
  };
  DifferenceMatrix x;
  for (const auto& r : rows) {
    std::vector<int> row;
    for (char c : r) row.push_back(c == '+' || c == '1' ? 1 : c == '-' ? -1 : 0);
    x.entries.push_back(std::move(row));
  }
  return x;
}

inline PartialDesign saturated_w85_design() {
  return paired_design_from_difference(saturated_w85_x(), {8, 2, 5, 8}, 0);
}

/// The published d(8,8,5,6) design with options A1, A2, A1+g1, A2+g1,
/// A1+g2 for g1 = 11100000, g2 = 00111100.
inline PartialDesign five_option_design() {
  return make_design(8, 5, 6,
                     {
                         {"111111**", "000000**", "000111**", "111000**", "110000**"},
                         {"101010**", "010101**", "010010**", "101101**", "100101**"},
                         {"1100**11", "0011**00", "0010**11", "1101**00", "1111**11"},
                         {"1001**10", "0110**01", "0111**10", "1000**01", "1010**10"},
                         {"00**1111", "11**0000", "11**1111", "00**0000", "00**0011"},
                         {"01**1010", "10**0101", "10**1010", "01**0101", "01**0110"},
                         {"**001100", "**110011", "**101100", "**010011", "**110000"},
                         {"**011001", "**100110", "**111001", "**000110", "**100101"},
                     },
                     0);
}

/// The paired base (A1, A2) of five_option_design, optimal in d(8,8,2,6).
inline PartialDesign five_option_base() {
  return make_design(8, 2, 6,
                     {
                         {"111111**", "000000**"},
                         {"101010**", "010101**"},
                         {"1100**11", "0011**00"},
                         {"1001**10", "0110**01"},
                         {"00**1111", "11**0000"},
                         {"01**1010", "10**0101"},
                         {"**001100", "**110011"},
                         {"**011001", "**100110"},
                     },
                     0);
}

}  // namespace ppcd::testing
