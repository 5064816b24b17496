#include "check.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "qgraph/entanglers.hpp"
#include "qgraph/error.hpp"
#include "qgraph/graph_dsl.hpp"
#include "qgraph/laplacians.hpp"
#include "qgraph/quantum_states.hpp"
#include "qgraph/random_graphs.hpp"
#include "qgraph/spectra.hpp"

namespace qgraph::cli {

namespace {

constexpr double kFactorizationTolerance = 1e-11;
constexpr double kQuadFormTolerance = 1e-10;
constexpr double kKernelResidualTolerance = 1e-10;
constexpr double kReconstructionTolerance = 1e-9;
constexpr double kDefaultGoldenTolerance = 5e-5;
// The path predicate enumerates every simple path; keep fuzzed instances small.
constexpr int kFuzzPredicateMaxVertices = 8;
constexpr std::size_t kProductStateSamples = 20;

const MatrixFlavor kFlavors[] = {MatrixFlavor::Combinatorial, MatrixFlavor::Signless};

struct Property {
  std::string suite;
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  Json counterexample;
};

class PropertyLog {
 public:
  void check(const std::string& suite, const std::string& name, bool ok,
             const std::function<Json()>& detail) {
    auto& p = find(suite, name);
    ++p.checked;
    if (ok) return;
    if (p.failures++ == 0) p.counterexample = detail();
  }

  bool passed() const {
    return std::all_of(properties_.begin(), properties_.end(),
                       [](const Property& p) { return p.failures == 0; });
  }

  Json to_json() const {
    Json list = Json::array();
    for (const auto& p : properties_) {
      Json j;
      j["suite"] = p.suite;
      j["property"] = p.name;
      j["checked"] = p.checked;
      j["failures"] = p.failures;
      j["passed"] = p.failures == 0;
      if (p.failures > 0) j["counterexample"] = p.counterexample;
      list.push_back(std::move(j));
    }
    return list;
  }

 private:
  Property& find(const std::string& suite, const std::string& name) {
    for (auto& p : properties_)
      if (p.suite == suite && p.name == name) return p;
    properties_.push_back(Property{suite, name, 0, 0, Json()});
    return properties_.back();
  }

  std::vector<Property> properties_;
};

bool selected(Suite wanted, Suite suite) { return wanted == Suite::All || wanted == suite; }

std::string tag(const std::string& name, MatrixFlavor flavor) { return name + "_" + flavor_name(flavor); }

Json graph_detail(const WeightedDigraph& g, Json extra = Json::object()) {
  Json j;
  j["graph"] = serialize_graph(g);
  for (auto& [key, value] : extra.items()) j[key] = value;
  return j;
}

ComplexVector random_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector x(n);
  for (auto& z : x) z = {normal(rng), normal(rng)};
  return x;
}

double squared_norm(const ComplexVector& x) {
  double s = 0.0;
  for (const auto& z : x) s += std::norm(z);
  return s;
}

WeightedDigraph without_loops(const WeightedDigraph& g) {
  return {g.kind(), g.vertex_count(), {g.edges().begin(), g.edges().end()}, {}, {g.vertex_weights().begin(), g.vertex_weights().end()}};
}

std::size_t kernel_dimension(const ComplexMatrix& k) {
  return zero_multiplicity(hermitian_eigenvalues(k));
}

void laplacian_suite(const WeightedDigraph& g, PropertyLog& log, std::mt19937_64& rng,
                     bool check_kernel) {
  const std::string suite = "laplacian";
  const auto n = static_cast<std::size_t>(g.vertex_count());

  for (const auto flavor : kFlavors) {
    const auto k = laplacian(g, flavor);
    const auto m = incidence(g, flavor);
    const double defect = max_abs_diff(k, m * m.adjoint());
    log.check(suite, tag("factorization", flavor), defect <= kFactorizationTolerance,
              [&] { return graph_detail(g, {{"max_abs_defect", defect}}); });

    const bool psd = is_psd(k);
    log.check(suite, tag("psd", flavor), psd, [&] {
      return graph_detail(g, {{"min_eigenvalue", hermitian_eigenvalues(k).front()}});
    });

    const auto x = random_vector(n, rng);
    const auto reference =
        g.kind() == GraphKind::EdgeLoop ? normalized_laplacian(g, flavor) : k;
    const double direct = quad_form(g, flavor, x);
    const double via_matrix = inner(x, reference * x).real();
    const double bound = kQuadFormTolerance * (1.0 + frobenius_norm(reference)) * (1.0 + squared_norm(x));
    log.check(suite, tag("quadratic_form", flavor), std::abs(direct - via_matrix) <= bound, [&] {
      return graph_detail(g, {{"edge_sum", direct}, {"matrix_form", via_matrix}});
    });

    if (check_kernel) {
      const auto multiplicity = kernel_dimension(k);
      const auto qualifying = qualifying_component_count(g, flavor);
      log.check(suite, tag("kernel_multiplicity", flavor), multiplicity == qualifying, [&] {
        return graph_detail(g, {{"zero_multiplicity", multiplicity}, {"qualifying_components", qualifying}});
      });
    }
  }

  // Degree bookkeeping: each edge contributes its modulus at both ends
  // (vertex-weighted: the opposite endpoint's weight), each loop r once.
  double expected = 0.0;
  double loops = 0.0;
  for (const auto& e : g.edges()) {
    if (g.kind() == GraphKind::VertexWeighted) {
      expected += std::abs(g.vertex_weights()[e.from - 1]) + std::abs(g.vertex_weights()[e.to - 1]);
    } else {
      expected += 2.0 * std::abs(e.weight);
    }
  }
  for (const auto& l : g.loops()) loops += l.weight;
  expected += loops;
  const double total = g.total_degree();
  const double trace_q = laplacian(g, MatrixFlavor::Signless).trace().real();
  const double scale = 1e-12 * (1.0 + expected);
  log.check(suite, "degree_sum",
            std::abs(total - expected) <= scale && std::abs(trace_q - (expected + loops)) <= scale, [&] {
              return graph_detail(g, {{"degree_sum", total}, {"expected", expected}, {"trace_Q", trace_q}});
            });

  const auto components = underlying_components(g);
  if (g.kind() == GraphKind::VertexWeighted) {
    const auto l = laplacian(g, MatrixFlavor::Combinatorial);
    const auto x = vertex_weighted_kernel_vector(g);
    const double residual = norm2(l * x);
    log.check(suite, "kernel_vector",
              residual <= kKernelResidualTolerance * (1.0 + frobenius_norm(l)) * norm2(x),
              [&] { return graph_detail(g, {{"residual", residual}}); });

    const auto mult_l = kernel_dimension(l);
    log.check(suite, "component_count", mult_l == components.size(), [&] {
      return graph_detail(g, {{"zero_multiplicity", mult_l}, {"components", components.size()}});
    });

    std::size_t bipartite = 0;
    for (const auto& c : components) {
      if (!has_odd_cycle(induced_subgraph(g, c))) ++bipartite;
    }
    const auto mult_q = kernel_dimension(laplacian(g, MatrixFlavor::Signless));
    log.check(suite, "bipartite_kernel", mult_q == bipartite, [&] {
      return graph_detail(g, {{"zero_multiplicity", mult_q}, {"bipartite_components", bipartite}});
    });
  }

  if (g.kind() == GraphKind::EdgeLoop) {
    const double drift = max_abs_diff(laplacian(g, MatrixFlavor::Combinatorial),
                                      laplacian(without_loops(g), MatrixFlavor::Combinatorial));
    log.check(suite, "loop_invariance_L", drift == 0.0,
              [&] { return graph_detail(g, {{"max_abs_change", drift}}); });

    for (const auto& c : components) {
      const auto sub = induced_subgraph(g, c);
      if (sub.loops().empty()) continue;
      const auto values = hermitian_eigenvalues(laplacian(sub, MatrixFlavor::Signless));
      const double cutoff = kZeroThreshold * std::max(1.0, values.back());
      log.check(suite, "looped_full_rank_Q", values.front() > cutoff,
                [&] { return graph_detail(sub, {{"min_eigenvalue", values.front()}}); });
    }
  }
}

bool expected_pure(const WeightedDigraph& g, MatrixFlavor flavor) {
  if (flavor == MatrixFlavor::Combinatorial) return g.edges().size() == 1;
  if (g.edges().size() == 1) return g.loops().empty();
  return g.edges().empty() && g.loops().size() == 1;
}

void purity_suite(const WeightedDigraph& g, PropertyLog& log) {
  const std::string suite = "purity";
  for (const auto flavor : kFlavors) {
    std::optional<DensityMatrix> rho;
    try {
      rho = density_from_graph(g, flavor);
    } catch (const ComputeError& e) {
      const bool degenerate = e.code() == ErrorCode::DegreeZero;
      log.check(suite, tag("density_valid", flavor), degenerate,
                [&] { return graph_detail(g, {{"error", e.what()}}); });
      continue;
    }
    log.check(suite, tag("density_valid", flavor), true, [] { return Json(); });

    const auto cls = classify(*rho);
    const bool expect = expected_pure(g, flavor);
    log.check(suite, tag("pure_characterization", flavor), cls.is_pure() == expect, [&] {
      return graph_detail(g, {{"purity", cls.purity}, {"expected_pure", expect}});
    });

    const auto mixture = spectral_mixture(*rho);
    double weight_sum = 0.0;
    for (const auto& t : mixture.terms) weight_sum += t.weight;
    const double rebuild = max_abs_diff(mixture.reconstruct(), rho->matrix());
    log.check(suite, tag("mixture_reconstruction", flavor),
              rebuild <= kReconstructionTolerance && std::abs(weight_sum - 1.0) <= 1e-10, [&] {
                return graph_detail(g, {{"max_abs_defect", rebuild}, {"weight_sum", weight_sum}});
              });

    if (cls.is_pure()) {
      const auto psi = pure_state_vector(*rho);
      const double defect = max_abs_diff(outer(psi, psi), rho->matrix());
      log.check(suite, tag("pure_vector", flavor), defect <= kReconstructionTolerance,
                [&] { return graph_detail(g, {{"max_abs_defect", defect}}); });
    }

    if (g.vertex_count() >= 3 && g.edges().size() >= 2 && is_connected(g)) {
      log.check(suite, tag("connected_mixed", flavor), cls.purity < 1.0 - kPureTolerance,
                [&] { return graph_detail(g, {{"purity", cls.purity}}); });
    }
  }
}

void separability_suite(PropertyLog& log, std::size_t trials, std::uint64_t seed) {
  const std::string suite = "separability";
  std::mt19937_64 rng(seed);
  RandomGraphOptions options;
  options.loop_probability = 0.5;
  const GraphKind kinds[] = {GraphKind::EdgeUnit, GraphKind::VertexWeighted, GraphKind::EdgeLoop};
  auto qubit = [&](std::size_t k) {
    const GraphKind kind = kinds[k % 3];
    return graph_on_skeleton(kind, 2, {{1, 2}}, rng, options);
  };
  for (std::size_t k = 0; k < kProductStateSamples; ++k) {
    const auto ga = qubit(k);
    const auto gb = qubit(k + 1);
    const auto fa = kFlavors[k % 2];
    const auto fb = kFlavors[(k / 2) % 2];
    const DensityMatrix product(kron(density_from_graph(ga, fa).matrix(), density_from_graph(gb, fb).matrix()));
    const auto verdict = ppt_test_2q(product);
    log.check(suite, "product_states_ppt", verdict.separable, [&] {
      return Json{{"graph_a", serialize_graph(ga)},
                  {"graph_b", serialize_graph(gb)},
                  {"min_eigenvalue", verdict.min_eigenvalue}};
    });
  }

  const auto report = product_separability_experiment(trials, seed);
  log.check(suite, "product_no_npt", report.entangled == 0, [&] {
    const auto& c = report.counterexamples.front();
    return Json{{"label", c.label},
                {"omega", to_json(c.omega)},
                {"f", to_json(c.f_value)},
                {"g", to_json(c.g_value)},
                {"min_eigenvalue", c.min_eigenvalue}};
  });
  for (const auto& c : report.injected) {
    const bool ok = c.label == "subcase-II" ? c.degenerate : (!c.degenerate && c.separable);
    log.check(suite, "product_" + c.label, ok, [&] {
      return Json{{"degenerate", c.degenerate}, {"separable", c.separable}, {"min_eigenvalue", c.min_eigenvalue}};
    });
  }
}

std::vector<double> eigenvalues_or_empty(const WeightedDigraph& g, MatrixFlavor flavor) {
  return hermitian_eigenvalues(laplacian(g, flavor));
}

void golden_suite(const WeightedDigraph& g, const Json& golden, PropertyLog& log) {
  const std::string suite = "golden";
  const double tol = golden.value("tolerance", kDefaultGoldenTolerance);
  for (const auto flavor : kFlavors) {
    const std::string f = flavor_name(flavor);
    if (golden.contains("eigenvalues_" + f)) {
      const auto expected = golden.at("eigenvalues_" + f).get<std::vector<double>>();
      const auto actual = eigenvalues_or_empty(g, flavor);
      bool ok = expected.size() == actual.size();
      for (std::size_t i = 0; ok && i < actual.size(); ++i) ok = std::abs(expected[i] - actual[i]) <= tol;
      log.check(suite, "eigenvalues_" + f, ok, [&] {
        return graph_detail(g, {{"expected", expected}, {"actual", actual}});
      });
    }
    if (golden.contains("kernel_multiplicity_" + f)) {
      const auto expected = golden.at("kernel_multiplicity_" + f).get<std::size_t>();
      const auto actual = kernel_dimension(laplacian(g, flavor));
      log.check(suite, "kernel_multiplicity_" + f, expected == actual, [&] {
        return graph_detail(g, {{"expected", expected}, {"actual", actual}});
      });
    }
    const bool wants_state = golden.contains("purity_" + f) || golden.contains("class_" + f);
    if (!wants_state) continue;
    const auto cls = classify(density_from_graph(g, flavor));
    if (golden.contains("purity_" + f)) {
      const double expected = golden.at("purity_" + f).get<double>();
      log.check(suite, "purity_" + f, std::abs(expected - cls.purity) <= tol, [&] {
        return graph_detail(g, {{"expected", expected}, {"actual", cls.purity}});
      });
    }
    if (golden.contains("class_" + f)) {
      const auto expected = golden.at("class_" + f).get<std::string>();
      const std::string actual = cls.is_pure() ? "pure" : "mixed";
      log.check(suite, "class_" + f, expected == actual, [&] {
        return graph_detail(g, {{"expected", expected}, {"actual", actual}});
      });
    }
  }
}

Json finish(const PropertyLog& log, Json extra) {
  Json result = std::move(extra);
  result["properties"] = log.to_json();
  result["passed"] = log.passed();
  return result;
}

}  // namespace

std::optional<Suite> suite_from_name(const std::string& name) {
  if (name == "all") return Suite::All;
  if (name == "laplacian") return Suite::Laplacian;
  if (name == "purity") return Suite::Purity;
  if (name == "separability") return Suite::Separability;
  return std::nullopt;
}

std::string suite_name(Suite suite) {
  switch (suite) {
    case Suite::All: return "all";
    case Suite::Laplacian: return "laplacian";
    case Suite::Purity: return "purity";
    case Suite::Separability: return "separability";
  }
  return "all";
}

Json check_graph(const WeightedDigraph& g, Suite suite, const Json& golden, std::uint64_t seed) {
  PropertyLog log;
  std::mt19937_64 rng(seed);
  Json extra;
  extra["vertices"] = g.vertex_count();
  if (selected(suite, Suite::Laplacian)) {
    bool small = true;
    for (const auto& c : underlying_components(g)) {
      small = small && static_cast<int>(c.size()) <= kPathPredicateMaxVertices;
    }
    laplacian_suite(g, log, rng, small);
    if (!small) extra["skipped"] = Json::array({"kernel_multiplicity"});
  }
  if (selected(suite, Suite::Purity)) purity_suite(g, log);
  if (selected(suite, Suite::Separability)) {
    separability_suite(log, 100, seed);
    if (g.vertex_count() == 4) {
      Json ppt;
      for (const auto flavor : kFlavors) {
        try {
          const auto verdict = ppt_test_2q(density_from_graph(g, flavor));
          ppt[flavor_name(flavor)] = {{"separable", verdict.separable},
                                      {"borderline", verdict.borderline},
                                      {"min_eigenvalue", verdict.min_eigenvalue}};
        } catch (const ComputeError& e) {
          ppt[flavor_name(flavor)] = {{"error", std::string(to_string(e.code()))}};
        }
      }
      extra["graph_ppt"] = std::move(ppt);
    }
  }
  if (!golden.is_null()) golden_suite(g, golden, log);
  return finish(log, std::move(extra));
}

Json check_fuzz(const FuzzOptions& options, Suite suite) {
  if (options.max_vertices < 1) throw ComputeError(ErrorCode::InvalidArgument, "--n must be positive");
  if (options.trials == 0) throw ComputeError(ErrorCode::InvalidArgument, "--trials must be positive");
  PropertyLog log;
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> size(1, options.max_vertices);
  const GraphKind kinds[] = {GraphKind::EdgeUnit, GraphKind::VertexWeighted, GraphKind::EdgeLoop};

  std::size_t graphs = 0;
  if (selected(suite, Suite::Laplacian) || selected(suite, Suite::Purity)) {
    for (std::size_t t = 0; t < options.trials; ++t) {
      // Even trials put phases on a pi/4 grid so exact cycle cancellations occur
      // and the kernel condition is exercised; odd trials use continuous phases.
      RandomGraphOptions draw;
      const bool gridded = t % 2 == 0;
      if (gridded) draw.phase_grid = 8;
      for (const auto kind : kinds) {
        const int n = size(rng);
        const auto g = random_graph(kind, n, rng, draw);
        ++graphs;
        if (selected(suite, Suite::Laplacian)) {
          laplacian_suite(g, log, rng, gridded && n <= kFuzzPredicateMaxVertices);
        }
        if (selected(suite, Suite::Purity)) purity_suite(g, log);
      }
    }
  }
  if (selected(suite, Suite::Separability)) separability_suite(log, options.trials, options.seed);

  Json extra;
  extra["graphs_checked"] = graphs;
  return finish(log, std::move(extra));
}

}  // namespace qgraph::cli
