#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "ppcd/construct.hpp"
#include "ppcd/verify.hpp"
#include "test_helpers.hpp"

using namespace ppcd;
using namespace ppcd::testing;

namespace {
const Catalog& cat() {
  static Catalog c = Catalog::load_default();
  return c;
}

double as_double(const Rational& r) { return r.value(); }

Eigen::MatrixXd counting_c_as_dense(const PartialDesign& d) {
  auto c = c_matrix_from_counts(tally_counts(d), d.params);
  Eigen::MatrixXd out(c.dim(), c.dim());
  for (int i = 0; i < c.dim(); ++i)
    for (int j = 0; j < c.dim(); ++j) out(i, j) = as_double(c.entries[i][j]);
  return out;
}
}  // namespace

TEST_CASE("pair_contrast matches the exhaustive pattern tables") {
  SUBCASE("two distinct main effects: 16 level patterns") {
    for (int ah = 0; ah < 2; ++ah)
      for (int ak = 0; ak < 2; ++ak)
        for (int bh = 0; bh < 2; ++bh)
          for (int bk = 0; bk < 2; ++bk) {
            Profile a = {static_cast<std::uint8_t>(ah), static_cast<std::uint8_t>(ak)};
            Profile b = {static_cast<std::uint8_t>(bh), static_cast<std::uint8_t>(bk)};
            long long expected = 0;
            if (ah != bh && ak != bk) expected = (ah == ak) ? 4 : -4;
            CAPTURE(ah);
            CAPTURE(ak);
            CAPTURE(bh);
            CAPTURE(bk);
            CHECK(pair_contrast(a, b, Effect::main(0), Effect::main(1)) == expected);
          }
  }

  SUBCASE("main effect against an interaction sharing its factor") {
    // nonzero only when the h levels differ and the k levels agree:
    // +4 with k at level 1, -4 with k at level 0
    for (int ah = 0; ah < 2; ++ah)
      for (int ak = 0; ak < 2; ++ak)
        for (int bh = 0; bh < 2; ++bh)
          for (int bk = 0; bk < 2; ++bk) {
            Profile a = {static_cast<std::uint8_t>(ah), static_cast<std::uint8_t>(ak)};
            Profile b = {static_cast<std::uint8_t>(bh), static_cast<std::uint8_t>(bk)};
            long long expected = 0;
            if (ah != bh && ak == bk) expected = ak == 1 ? 4 : -4;
            CHECK(pair_contrast(a, b, Effect::main(0), Effect::interaction(0, 1)) == expected);
          }
  }

  SUBCASE("main effect against a disjoint interaction: 64 level patterns") {
    // nonzero only when the h levels differ and the (k,l) pair is mixed on
    // one side and equal on the other: +4 when the h = 0 side is mixed
    for (int bits = 0; bits < 64; ++bits) {
      int ah = bits & 1, ak = (bits >> 1) & 1, al = (bits >> 2) & 1;
      int bh = (bits >> 3) & 1, bk = (bits >> 4) & 1, bl = (bits >> 5) & 1;
      Profile a = {static_cast<std::uint8_t>(ah), static_cast<std::uint8_t>(ak),
                   static_cast<std::uint8_t>(al)};
      Profile b = {static_cast<std::uint8_t>(bh), static_cast<std::uint8_t>(bk),
                   static_cast<std::uint8_t>(bl)};
      long long expected = 0;
      if (ah != bh) {
        bool a_equal = ak == al, b_equal = bk == bl;
        if (a_equal != b_equal) {
          bool zero_side_mixed = ah == 0 ? !a_equal : !b_equal;
          expected = zero_side_mixed ? 4 : -4;
        }
      }
      CAPTURE(bits);
      CHECK(pair_contrast(a, b, Effect::main(0), Effect::interaction(1, 2)) == expected);
    }
  }
}

TEST_CASE("contrast_product agrees with the dense B Lambda B' entry") {
  auto d = five_option_design();
  auto lambda = brute_force_lambda(d);
  auto b1 = main_effect_contrasts(d.params.n);
  auto b2 = interaction_contrasts(d.params.n);
  Eigen::MatrixXd l12 = b1 * lambda * b2.transpose();
  double scale = static_cast<double>(d.params.N) * d.params.m * d.params.m;

  // spot-check a spread of (main, interaction) cells
  int col = 0;
  for (int k = 0; k < d.params.n && col < 10; ++k)
    for (int l = k + 1; l < d.params.n && col < 10; ++l, ++col)
      for (int h : {0, 3, 7}) {
        double direct = contrast_product(Effect::main(h), Effect::interaction(k, l), d) / scale;
        CHECK(l12(h, col) == doctest::Approx(direct).epsilon(1e-12));
      }
}

TEST_CASE("brute_force_lambda elementary properties") {
  // a single pair over one factor
  auto d = make_design(1, 2, 1, {{"1", "0"}});
  auto lambda = brute_force_lambda(d);
  REQUIRE(lambda.rows() == 2);
  CHECK(lambda(0, 0) == doctest::Approx(0.25));
  CHECK(lambda(1, 1) == doctest::Approx(0.25));
  CHECK(lambda(0, 1) == doctest::Approx(-0.25));
  CHECK(lambda(1, 0) == doctest::Approx(-0.25));

  // rows always sum to zero
  auto d5 = five_option_design();
  auto l5 = brute_force_lambda(d5);
  for (int r = 0; r < l5.rows(); ++r)
    CHECK(l5.row(r).sum() == doctest::Approx(0.0).epsilon(1e-14));

  // guard against blowing up the 2^n table
  auto big = kronecker_inflate(saturated_w85_design(), 2);  // n = 16
  CHECK_THROWS_AS(brute_force_lambda(big), std::invalid_argument);
}

TEST_CASE("treatment_index is lexicographic with factor 1 most significant") {
  CHECK(treatment_index(profile_from_string("000")) == 0);
  CHECK(treatment_index(profile_from_string("001")) == 1);
  CHECK(treatment_index(profile_from_string("100")) == 4);
  CHECK(treatment_index(profile_from_string("111")) == 7);
}

TEST_CASE("counting engine and brute force produce the same C matrix") {
  std::mt19937 rng(4211);
  int designs_checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    int rho = 1 + static_cast<int>(rng() % n);
    int rows = 2 + static_cast<int>(rng() % 10);
    auto d = paired_design_from_difference(random_difference(rng, rows, n, rho),
                                           {n, 2, rho, rows}, static_cast<int>(rng() % 2));
    auto diff = (counting_c_as_dense(d) - brute_force_c_matrix(d)).cwiseAbs().maxCoeff();
    CHECK(diff < 1e-12);
    ++designs_checked;
  }
  CHECK(designs_checked == 40);

  // multi-option designs too
  auto d5 = five_option_design();
  CHECK((counting_c_as_dense(d5) - brute_force_c_matrix(d5)).cwiseAbs().maxCoeff() < 1e-12);

  auto d6 = extend_to_m(five_option_base(), *auto_generators(five_option_base(), 2), 6);
  CHECK((counting_c_as_dense(d6) - brute_force_c_matrix(d6)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("for pair designs C equals X'X / (N 2^n)") {
  auto d = saturated_w85_design();
  auto x = difference_from_paired_design(d).entries;
  auto g = multiply(transpose(x), x);
  auto c = counting_c_as_dense(d);
  double scale = static_cast<double>(d.params.N) * (1 << d.params.n);
  for (int i = 0; i < d.params.n; ++i)
    for (int j = 0; j < d.params.n; ++j)
      CHECK(c(i, j) == doctest::Approx(g[i][j] / scale).epsilon(1e-14));
}

TEST_CASE("max_trace_bound uses the even/odd m split") {
  CHECK(max_trace_bound({8, 2, 5, 8}) == Rational(5, 256));
  CHECK(max_trace_bound({8, 4, 6, 8}) == Rational(6, 256));
  CHECK(max_trace_bound({8, 3, 6, 8}) == Rational(6 * 8, 256 * 9));
  CHECK(max_trace_bound({8, 5, 6, 8}) == Rational(6 * 24, 256 * 25));
}

TEST_CASE("certify: the published designs pass the main-effects checks") {
  auto cert1 = certify(saturated_w85_design(), Model::Main);
  CHECK(cert1.passed);
  CHECK(cert1.trace == Rational(5, 256));
  CHECK(cert1.trace_max);
  CHECK(cert1.connected);
  CHECK(cert1.unbalanced_eta1.empty());
  CHECK(cert1.bad_nph.empty());

  auto cert5 = certify(five_option_design(), Model::Main);
  CHECK(cert5.passed);
  CHECK(cert5.trace == Rational(9, 400));
}

TEST_CASE("certify: broader model needs the doubled design") {
  auto d5 = five_option_design();
  auto broad5 = certify(d5, Model::Broader);
  CHECK_FALSE(broad5.passed);
  bool has_unbalance = !broad5.unbalanced_eta2.empty() || !broad5.unbalanced_eta3.empty();
  CHECK(has_unbalance);

  auto doubled = construct_broader(d5);
  auto cert = certify(doubled, Model::Broader);
  CHECK(cert.passed);
  CHECK(cert.unbalanced_eta2.empty());
  CHECK(cert.unbalanced_eta3.empty());
  CHECK(cert.trace == Rational(9, 400));
}

TEST_CASE("certify reports the failing indices of a broken design") {
  // factors 3,4 appear together only with equal levels: eta1{3,4} is lopsided
  auto d = make_design(4, 2, 2, {{"11**", "00**"}, {"10**", "01**"}, {"**11", "**00"}});
  auto cert = certify(d, Model::Main);
  CHECK_FALSE(cert.passed);
  CHECK(std::count(cert.unbalanced_eta1.begin(), cert.unbalanced_eta1.end(),
                   std::make_pair(2, 3)) == 1);

  // adding the mirror set restores balance and reaches the bound
  auto small = make_design(4, 2, 2, {{"11**", "00**"}, {"10**", "01**"},
                                     {"**11", "**00"}, {"**10", "**01"}});
  auto c2 = certify(small, Model::Main);
  CHECK(c2.unbalanced_eta1.empty());
  CHECK(c2.trace == Rational(2, 16));
  CHECK(c2.trace_bound == Rational(2, 16));
  CHECK(c2.passed);

  // structurally invalid input is refused outright
  PartialDesign bad = make_design(4, 2, 2, {{"11**", "00**"}});
  bad.sets[0].profiles[1][2] = 1;
  CHECK_THROWS_AS(certify(bad, Model::Main), std::invalid_argument);
}

TEST_CASE("certificates are invariant under complementation") {
  for (const auto& d : {saturated_w85_design(), five_option_design()}) {
    auto a = certify(d, Model::Main);
    auto b = certify(complement(d), Model::Main);
    CHECK(a.passed == b.passed);
    CHECK(a.trace == b.trace);
  }
}

TEST_CASE("broader_c_matrix is invariant to the choice of g-inverse") {
  auto d = construct_broader(saturated_w85_design());
  auto via_eigendecomposition = broader_c_matrix(d);

  // recompute with a completely different pseudo-inverse
  int n = d.params.n;
  auto lambda = brute_force_lambda(d);
  auto b1 = main_effect_contrasts(n);
  auto b2 = interaction_contrasts(n);
  Eigen::MatrixXd l11 = b1 * lambda * b1.transpose();
  Eigen::MatrixXd l12 = b1 * lambda * b2.transpose();
  Eigen::MatrixXd l22 = b2 * lambda * b2.transpose();
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(l22);
  Eigen::MatrixXd alt =
      (l11 - l12 * cod.pseudoInverse() * l12.transpose()) / std::pow(2.0, n);

  CHECK((via_eigendecomposition - alt).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("broader C never exceeds the main-effects C on the trace") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);
    int rho = 2 + static_cast<int>(rng() % (n - 1));
    int rows = 3 + static_cast<int>(rng() % 8);
    auto d = paired_design_from_difference(random_difference(rng, rows, n, rho),
                                           {n, 2, rho, rows}, 0);
    CHECK(broader_c_matrix(d).trace() <= brute_force_c_matrix(d).trace() + 1e-12);
  }

  // for the doubled design the two traces coincide
  auto doubled = construct_broader(saturated_w85_design());
  CHECK(broader_c_matrix(doubled).trace() ==
        doctest::Approx(brute_force_c_matrix(doubled).trace()).epsilon(1e-12));
}
