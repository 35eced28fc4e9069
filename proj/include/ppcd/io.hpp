#pragma once

#include <istream>
#include <optional>
#include <string>

#include "ppcd/catalog.hpp"
#include "ppcd/design.hpp"
#include "ppcd/verify.hpp"

namespace ppcd {

/// Parse failure with source position; line and column are 1-based,
/// column 0 when the whole line is at fault.
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) +
                           (column_ > 0 ? ", column " + std::to_string(column_) : "") + ": " + msg),
        line(line_),
        column(column_) {}
};

/// Renders the design file format documented in docs/formats.md: header,
/// one block per choice set with '*' on inactive positions plus their
/// instantiated levels, and an optional embedded certificate.
std::string write_design_file(const PartialDesign& d, Model model,
                              const std::optional<OptimalityCertificate>& cert);

/// Inverse of write_design_file, bit exact on the design. An embedded
/// certificate block is validated for shape but not retained; verification
/// always recomputes.
PartialDesign parse_design_file(std::istream& in, Model* model_out = nullptr);

PartialDesign parse_design_path(const std::string& path, Model* model_out = nullptr);

/// Flat CSV: one row per (set, option) with the n levels and the active
/// mask. Column order: set,option,f1..fn,active_mask.
std::string export_csv(const PartialDesign& d);

std::string render_certificate(const OptimalityCertificate& cert);

/// Reproductions of the published minimum-N table (rho 2..6, n 3..15) and
/// the Method-H vs Method-W improvement table. Byte-deterministic.
std::string render_table1(const Catalog& cat);
std::string render_table2(const Catalog& cat);

}  // namespace ppcd
