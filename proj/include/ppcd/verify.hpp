#pragma once

#include <Eigen/Dense>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ppcd/design.hpp"
#include "ppcd/types.hpp"

namespace ppcd {

/// Component-pair tallies over a whole design.
///
/// eta1 counts, per unordered factor pair {h,k}, the component pairs whose
/// (h,k) levels form {00,11} (plus) or {01,10} (minus). eta2 counts, per
/// ordered pair (h,k), pairs where the h levels differ and both k levels
/// are 1 (plus) or 0 (minus). eta3 counts, per (h, {k,l}), pairs where the
/// h levels differ and the (k,l) levels differ on the h=0 side but agree
/// on the h=1 side (plus), or the reverse (minus). All classifications are
/// invariant under swapping the two members of a pair.
struct BalanceCounts {
  int n = 0;
  int m = 0;
  long long n_star = 0;  ///< N * m(m-1)/2 component pairs in total

  std::vector<long long> eta1_plus, eta1_minus;  ///< indexed by unordered_pair_index(h,k)
  std::vector<long long> eta2_plus, eta2_minus;  ///< indexed by h*n + k
  std::vector<long long> eta3_plus, eta3_minus;  ///< indexed by h*npairs + unordered_pair_index(k,l)
  std::vector<std::vector<int>> n_ph;            ///< [set][factor] zeros among the m profiles

  int unordered_pair_index(int h, int k) const;  // requires h < k
};

BalanceCounts tally_counts(const PartialDesign& d);

/// Information matrix with exact rational entries.
struct InformationMatrix {
  std::vector<std::vector<Rational>> entries;

  int dim() const { return static_cast<int>(entries.size()); }
  Rational trace() const;
  bool is_diagonal() const;
};

/// Main-effects C from tallies: off-diagonal (h,k) = 4(eta1+ - eta1-),
/// diagonal (h,h) = sum_p 4 n_ph (m - n_ph), all over 2^n N m^2.
InformationMatrix c_matrix_from_counts(const BalanceCounts& counts, const DesignParams& params);

/// Largest trace(C) attainable in the class: rho/2^n for m even,
/// rho(m^2-1)/(2^n m^2) for m odd.
Rational max_trace_bound(const DesignParams& params);

enum class Model { Main, Broader };

std::string model_name(Model m);

/// Machine-checkable optimality evidence. `passed` holds exactly when all
/// component checks pass. Failing index tuples are listed in full.
struct OptimalityCertificate {
  Model model = Model::Main;
  bool passed = false;

  std::vector<std::pair<int, int>> unbalanced_eta1;          ///< {h,k}, h<k
  std::vector<std::pair<int, int>> bad_nph;                  ///< (set, factor)
  bool trace_max = false;
  Rational trace, trace_bound;
  bool connected = false;                                    ///< diagonal C, all diagonals > 0
  std::vector<std::pair<int, int>> unbalanced_eta2;          ///< ordered (h,k)
  std::vector<std::tuple<int, int, int>> unbalanced_eta3;    ///< (h, k, l), k<l
};

/// Decides the optimality conditions with the exact counting engine:
/// eta1 balance and the per-set n_ph condition (main model), plus eta2 and
/// eta3 balance (broader model).
OptimalityCertificate certify(const PartialDesign& d, Model model);

// ---------------------------------------------------------------------------
// Brute-force engine: full 2^n x 2^n information matrix for treatment
// effects, used as an independent oracle for small n.
// ---------------------------------------------------------------------------

inline constexpr int kBruteForceMaxFactors = 12;

/// Lexicographic treatment index of a profile (factor 1 most significant).
int treatment_index(const Profile& p);

/// Lambda built from the lambda_st rule: for each choice set, m-1 on the
/// diagonal of every member and -1 on every ordered pair of distinct
/// members, all over N m^2. Refuses n > kBruteForceMaxFactors.
Eigen::MatrixXd brute_force_lambda(const PartialDesign& d);

/// B(1): n x 2^n main-effect contrasts, entries -1/+1 by treatment bit.
Eigen::MatrixXd main_effect_contrasts(int n);

/// B(2): n(n-1)/2 x 2^n two-factor interaction contrasts, row order
/// (1,2),(1,3),...,(n-1,n).
Eigen::MatrixXd interaction_contrasts(int n);

/// A main effect F_h or a two-factor interaction F_kl.
struct Effect {
  int h = -1;
  int k = -1;  ///< second factor; -1 for a main effect

  static Effect main(int h) { return {h, -1}; }
  static Effect interaction(int k, int l) { return {k, l}; }
  bool is_main() const { return k < 0; }
};

/// Contrast value of a single treatment for an effect: -1/+1 for a main
/// effect by its level, the product of the two factor values for an
/// interaction.
int effect_value(const Effect& e, const Profile& p);

/// B_x M^(ij) B_y' for one component pair: (x_i - x_j)(y_i - y_j).
long long pair_contrast(const Profile& a, const Profile& b, const Effect& x, const Effect& y);

/// Sum of pair_contrast over every component pair of d; equals the
/// matching entry of B Lambda* B'.
long long contrast_product(const Effect& x, const Effect& y, const PartialDesign& d);

/// Broader-model information matrix of the main effects,
/// (1/2^n){B1 L B1' - B1 L B2' [B2 L B2']^- B2 L B1'}, with the
/// generalized inverse taken by eigendecomposition (eigenvalues below
/// 1e-9 treated as zero).
Eigen::MatrixXd broader_c_matrix(const PartialDesign& d);

/// Dense main-effects C from the brute-force engine: (1/2^n) B1 L B1'.
Eigen::MatrixXd brute_force_c_matrix(const PartialDesign& d);

}  // namespace ppcd
