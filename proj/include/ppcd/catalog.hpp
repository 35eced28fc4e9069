#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "ppcd/types.hpp"

namespace ppcd {

/// n x n matrix W over {-1,0,+1} with W W' = W' W = rho I. A Hadamard
/// matrix is the weight-equals-order case.
struct WeighingMatrix {
  int order = 0;
  int weight = 0;
  IntMatrix entries;
};

/// True iff entries form a W(order, weight): exact orthogonality plus
/// exactly `weight` nonzeros in every row and column.
bool is_weighing(const IntMatrix& entries, int weight);

struct CatalogEntry {
  int order = 0;
  int weight = 0;
  IntMatrix entries;
  std::string provenance;
};

/// Catalog of weighing matrices: generative constructions (Hadamard by
/// Sylvester doubling, Paley type I and products; W(n,2) by H2 blocks)
/// plus a literal catalog loaded from a data file. Every matrix served is
/// verified; a record failing W W' = rho I is rejected at load time.
///
/// Existence answers are catalog-relative, not mathematical: the literal
/// catalog covers exactly the orders the construction range here needs.
class Catalog {
 public:
  /// Loads the compiled-in copy of data/weighing_catalog.txt.
  static Catalog load_default();
  static Catalog load_file(const std::string& path);
  static Catalog parse(std::istream& in, const std::string& source_name);

  /// Hadamard matrix of order r, or nullopt if none is constructible.
  std::optional<WeighingMatrix> hadamard(int r) const;

  /// Verified W(n, rho), or nullopt when the catalog has none.
  std::optional<WeighingMatrix> weighing(int n, int rho) const;

  /// Smallest r >= rho with hadamard(r) available.
  int h_of(int rho) const;

  /// All orders nu <= n_max with weighing(nu, rho) available, ascending.
  std::vector<int> weighing_orders_up_to(int rho, int n_max) const;

  const std::vector<CatalogEntry>& entries() const { return entries_; }

 private:
  std::vector<CatalogEntry> entries_;
};

}  // namespace ppcd
