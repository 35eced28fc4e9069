#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ppcd/types.hpp"

namespace ppcd {

/// Parameters of a partial profile choice design d(N, n, m, rho):
/// N choice sets of m profiles over n two-level factors, with exactly
/// rho factors varying (active) inside each choice set.
struct DesignParams {
  int n = 0;    ///< factor count
  int m = 2;    ///< choice set size
  int rho = 0;  ///< profile strength
  int N = 0;    ///< number of choice sets

  void validate() const;
  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

/// One full treatment combination: a level in {0,1} for each factor.
using Profile = std::vector<std::uint8_t>;

Profile profile_from_string(const std::string& bits);
std::string profile_to_string(const Profile& p);

/// A group of m profiles shown together. active[h] marks the factors that
/// vary inside this set; inactive factors carry one constant level shared
/// by all m profiles.
struct ChoiceSet {
  std::vector<Profile> profiles;
  std::vector<std::uint8_t> active;

  int active_count() const;
  friend bool operator==(const ChoiceSet&, const ChoiceSet&) = default;
};

struct PartialDesign {
  DesignParams params;
  std::vector<ChoiceSet> sets;

  friend bool operator==(const PartialDesign&, const PartialDesign&) = default;
};

/// N x n matrix over {-1,0,+1} encoding a paired design: X = A1 - A2.
/// Zeros mark the inactive positions.
struct DifferenceMatrix {
  IntMatrix entries;

  int rows() const { return static_cast<int>(entries.size()); }
  int cols() const { return entries.empty() ? 0 : static_cast<int>(entries[0].size()); }
  friend bool operator==(const DifferenceMatrix&, const DifferenceMatrix&) = default;
};

/// Builds the paired design for X: +1 -> (1,0), -1 -> (0,1), 0 -> both
/// profiles fixed at fixed_level with the position inactive.
PartialDesign paired_design_from_difference(const DifferenceMatrix& x, const DesignParams& params,
                                            int fixed_level = 0);

DifferenceMatrix difference_from_paired_design(const PartialDesign& d);

/// Flips every level 0 <-> 1; masks and parameters are unchanged.
PartialDesign complement(const PartialDesign& d);

/// Concatenates two designs sharing (n, m, rho).
PartialDesign stack(const PartialDesign& d1, const PartialDesign& d2);

/// Block-inflates d to t*N sets over t*n factors: block b repeats d on
/// factor positions [b*n, (b+1)*n); everything outside the block is
/// inactive at fixed_level. Keeps m and rho.
PartialDesign kronecker_inflate(const PartialDesign& d, int t, int fixed_level = 0);

struct StructureIssue {
  int set = -1;       ///< choice set index, -1 if design-level
  int position = -1;  ///< factor index, -1 if not positional
  std::string message;
};

struct ValidationReport {
  std::vector<StructureIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Checks every structural invariant (mask cardinality rho, constancy on
/// inactive positions, pairwise distinct profiles) and reports all
/// violations with set index and position.
ValidationReport validate_structure(const PartialDesign& d);

}  // namespace ppcd
