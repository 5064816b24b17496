#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json_io.hpp"
#include "qgraph/graph.hpp"

namespace qgraph::cli {

enum class Suite { All, Laplacian, Purity, Separability };

std::optional<Suite> suite_from_name(const std::string& name);
std::string suite_name(Suite suite);

struct FuzzOptions {
  int max_vertices = 6;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
};

/// Every property of the selected suites on one graph; `golden` (if not null)
/// adds expected-value comparisons. The result carries "passed".
Json check_graph(const WeightedDigraph& g, Suite suite, const Json& golden, std::uint64_t seed);

/// Same properties over seeded random graphs of every kind.
Json check_fuzz(const FuzzOptions& options, Suite suite);

}  // namespace qgraph::cli
