#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppcd/catalog.hpp"
#include "ppcd/design.hpp"

namespace ppcd {

/// Binary n-vector added mod 2 on active positions to spawn additional
/// options from a paired design.
struct Generator {
  std::vector<std::uint8_t> bits;

  int weight() const;
  Generator complemented() const;
  friend bool operator==(const Generator&, const Generator&) = default;
};

Generator generator_from_string(const std::string& bits);
std::string generator_to_string(const Generator& g);

struct GeneratorSet {
  std::vector<Generator> generators;
  int rho = 0;
};

/// Enforces the generator-set invariants for (n, rho): every weight w
/// strictly inside (min(rho, n-rho), max(rho, n-rho)), no repeats, and no
/// generator together with its complement. Throws on violation.
void validate_generator_set(const GeneratorSet& g, int n, int rho);

enum class Method { SaturatedW, MethodW, MethodH };

std::string method_name(Method m);

/// Outcome of the minimum-N planning procedure.
struct ConstructionPlan {
  int n = 0;
  int rho = 0;
  bool plannable = false;
  Method method = Method::MethodH;
  long long N = 0;
  int nu = 0;        ///< weighing order used by Method-W
  int h = 0;         ///< Hadamard order used by Method-H
  long long N1 = 0;  ///< best Method-W count (0 if no candidate)
  long long N2 = 0;  ///< Method-H count
  std::vector<std::pair<int, long long>> candidates;  ///< (nu_j, K_j)
  std::string reason;                                 ///< set when not plannable
};

/// Incidence matrix with n/gcd(n,k) rows and n columns: row b has k
/// consecutive ones starting at position b*k (mod n). Every row sums to k
/// and every column to k/gcd(n,k).
IntMatrix cyclic_incidence(int n, int k);

/// Saturated design with X = W(n, rho); N = n choice sets.
std::optional<PartialDesign> construct_saturated(const Catalog& cat, int n, int rho,
                                                 int fixed_level = 0);

/// Method-W: expands cyclic_incidence(n, nu) by the columns of W(nu, rho),
/// giving N = n*nu/gcd(n,nu) sets with X'X = (N rho / n) I.
PartialDesign construct_method_w(const Catalog& cat, int n, int rho, int nu, int fixed_level = 0);

/// Method-H: expands cyclic_incidence(n, rho) by columns of H_{h(rho)},
/// giving N = n*h(rho)/gcd(n,rho) sets with X'X = (N rho / n) I.
PartialDesign construct_method_h(const Catalog& cat, int n, int rho, int fixed_level = 0);

/// Minimum-N planning: saturated check, then the best Method-W candidate
/// against Method-H. A tie goes to Method-W unless the tying weighing
/// matrix is itself Hadamard (nu == rho), in which case the two methods
/// coincide and the plan reports Method-H.
ConstructionPlan plan_minimum_N(const Catalog& cat, int n, int rho);

/// Builds the paired design a plan describes.
PartialDesign construct_from_plan(const Catalog& cat, const ConstructionPlan& plan,
                                  int fixed_level = 0);

/// Mod-2 addition of g on the active positions only.
Profile apply_generator(const Profile& option, const std::vector<std::uint8_t>& active,
                        const Generator& g);

/// Extends a certified paired design to choice sets of size m using the
/// option order A1, A2, A1+g1, A2+g1, A1+g2, ... truncated to m. Throws if
/// the generator constraints fail or any choice set ends up with duplicate
/// options.
PartialDesign extend_to_m(const PartialDesign& d2, const GeneratorSet& g, int m);

/// Deterministic search (ascending weight, then lexicographic bit pattern)
/// for `count` generators that satisfy the set invariants and keep every
/// choice set of `base` duplicate-free after extension.
std::optional<GeneratorSet> auto_generators(const PartialDesign& base, int count);

/// stack(d, complement(d)): doubles N and yields a design that is optimal
/// under the broader main effects model whenever d is optimal under the
/// main effects model.
PartialDesign construct_broader(const PartialDesign& d);

}  // namespace ppcd
