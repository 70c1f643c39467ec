#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "branecharge/lattice.hpp"

namespace branecharge {

enum class InputFormat { Json, Matrix };

/// A polytope read from disk, before any geometry is computed.
struct InputDocument {
  InputFormat format = InputFormat::Json;
  int dim = 0;
  std::vector<IntVector> points;
  /// Divisor coefficients in canonical facet order, when the file has one.
  std::optional<std::vector<std::int64_t>> divisor;
};

/// {"dim": n, "vertices": [[...], ...], "divisor": [...]?}
/// Throws ParseError (with line/field context) or DimensionMismatch.
InputDocument parse_json(std::string_view text);

/// PALP-style matrix: a header line "a b" (anything after the two integers is
/// ignored) followed by a rows of b integers. If a <= b the points are the
/// columns and a is the dimension; otherwise the points are the rows.
/// Throws ParseError or ShapeMismatch.
InputDocument parse_matrix(std::string_view text);

/// Dispatches on the first non-blank character ('{' means JSON).
InputDocument parse_document(std::string_view text);

}  // namespace branecharge
