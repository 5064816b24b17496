#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "qgraph/entanglers.hpp"
#include "qgraph/matrix.hpp"
#include "qgraph/quantum_states.hpp"

namespace qgraph::cli {

using Json = nlohmann::ordered_json;

Json to_json(Complex z);
Json to_json(const ComplexMatrix& m);
Json to_json(std::span<const Complex> v);
Json to_json(std::span<const double> v);

Json state_summary(const DensityMatrix& rho);

/// [re, im], a bare number, or a complex literal string.
Complex complex_from_json(const Json& j);
/// Nested rows of complex entries.
ComplexMatrix matrix_from_json(const Json& j);

/// A recipe file: two factor adjacencies, the product terms and output options.
struct RecipeFile {
  ComplexMatrix ag;
  ComplexMatrix ah;
  ProductRecipe recipe;
  std::vector<MatrixFlavor> flavors;
  std::optional<std::vector<double>> vertex_moduli;
};

/// Throws ComputeError(InvalidArgument) with a path-qualified message on any
/// schema violation.
RecipeFile recipe_from_json(const Json& j);

std::string flavor_name(MatrixFlavor flavor);

}  // namespace qgraph::cli
