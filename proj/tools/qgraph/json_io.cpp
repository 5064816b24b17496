#include "json_io.hpp"

#include "qgraph/error.hpp"
#include "qgraph/graph_dsl.hpp"
#include "qgraph/laplacians.hpp"

namespace qgraph::cli {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw ComputeError(ErrorCode::InvalidArgument, "recipe " + where + ": " + what);
}

ComplexMatrix named_matrix(const std::string& name, const Json& desc, const std::string& where) {
  if (name == "I") return ComplexMatrix::identity(2);
  if (name == "J") return matrix_j();
  if (name == "P") return matrix_p();
  if (name == "Z") return matrix_z();
  if (name == "zero") return ComplexMatrix::zeros(2, 2);
  if (name == "K") {
    if (!desc.is_object() || !desc.contains("w")) schema(where, "K needs a weight 'w'");
    return matrix_k(complex_from_json(desc.at("w")));
  }
  schema(where, "unknown matrix name '" + name + "'");
}

ComplexMatrix operand(const Json& j, const std::string& where) {
  if (j.is_string()) return named_matrix(j.get<std::string>(), j, where);
  if (j.is_object()) {
    if (!j.contains("name") || !j.at("name").is_string()) schema(where, "matrix object needs 'name'");
    ComplexMatrix m = named_matrix(j.at("name").get<std::string>(), j, where);
    if (j.value("adjoint", false)) m = m.adjoint();
    return m;
  }
  if (j.is_array()) return matrix_from_json(j);
  schema(where, "matrix must be a name, an object or nested rows");
}

MatrixFunctionSpec chain_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected a list of steps");
  std::vector<MatrixStep> steps;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string at = where + "[" + std::to_string(k) + "]";
    const Json& step = j[k];
    if (!step.is_object() || !step.contains("op") || !step.at("op").is_string()) {
      schema(at, "step needs an 'op'");
    }
    const auto op = step.at("op").get<std::string>();
    auto with_operand = [&](MatrixStep::Op o) {
      if (!step.contains("matrix")) schema(at, "'" + op + "' needs a 'matrix'");
      steps.push_back({o, operand(step.at("matrix"), at)});
    };
    if (op == "identity") {
      steps.push_back({MatrixStep::Op::Identity, {}});
    } else if (op == "right_mul") {
      with_operand(MatrixStep::Op::RightMul);
    } else if (op == "left_mul") {
      with_operand(MatrixStep::Op::LeftMul);
    } else if (op == "add") {
      with_operand(MatrixStep::Op::Add);
    } else if (op == "zero_diagonal") {
      steps.push_back({MatrixStep::Op::ZeroDiagonal, {}});
    } else if (op == "dagger") {
      steps.push_back({MatrixStep::Op::Dagger, {}});
    } else {
      schema(at, "unknown op '" + op + "'");
    }
  }
  return MatrixFunctionSpec(std::move(steps));
}

ComplexMatrix factor(const Json& j, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object with 'adjacency' or 'graph'");
  if (j.contains("adjacency")) return matrix_from_json(j.at("adjacency"));
  if (j.contains("graph")) {
    if (!j.at("graph").is_string()) schema(where, "'graph' must be .qg text");
    return adjacency(parse_graph(j.at("graph").get<std::string>()));
  }
  schema(where, "expected 'adjacency' or 'graph'");
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(std::span<const Complex> v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(to_json(z));
  return out;
}

Json to_json(std::span<const double> v) {
  Json out = Json::array();
  for (double x : v) out.push_back(x);
  return out;
}

Json state_summary(const DensityMatrix& rho) {
  Json j;
  j["density"] = to_json(rho.matrix());
  const auto cls = classify(rho);
  j["purity"] = cls.purity;
  j["class"] = cls.is_pure() ? "pure" : "mixed";
  Json mixture = Json::array();
  for (const auto& term : spectral_mixture(rho).terms) {
    mixture.push_back({{"weight", term.weight}, {"vector", to_json(term.vector)}});
  }
  j["mixture"] = std::move(mixture);
  if (cls.is_pure()) j["pure_state"] = to_json(pure_state_vector(rho));
  if (rho.dim() == 4) {
    const auto verdict = ppt_test_2q(rho);
    j["ppt"] = {{"separable", verdict.separable},
                {"borderline", verdict.borderline},
                {"min_eigenvalue", verdict.min_eigenvalue}};
  }
  return j;
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  if (j.is_string()) {
    if (const auto z = parse_complex(j.get<std::string>())) return *z;
  }
  throw ComputeError(ErrorCode::InvalidArgument, "expected a complex number, got " + j.dump());
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw ComputeError(ErrorCode::InvalidArgument, "expected a matrix as nested rows");
  }
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) {
      throw ComputeError(ErrorCode::DimensionMismatch, "matrix rows have different lengths");
    }
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

std::string flavor_name(MatrixFlavor flavor) {
  return flavor == MatrixFlavor::Signless ? "Q" : "L";
}

RecipeFile recipe_from_json(const Json& j) {
  if (!j.is_object()) schema("root", "expected an object");
  RecipeFile file;
  if (!j.contains("G") || !j.contains("H")) schema("root", "needs factors 'G' and 'H'");
  file.ag = factor(j.at("G"), "G");
  file.ah = factor(j.at("H"), "H");

  const std::string flavor = j.value("flavor", std::string("L"));
  if (flavor == "L") {
    file.flavors = {MatrixFlavor::Combinatorial};
  } else if (flavor == "Q") {
    file.flavors = {MatrixFlavor::Signless};
  } else if (flavor == "both") {
    file.flavors = {MatrixFlavor::Combinatorial, MatrixFlavor::Signless};
  } else {
    schema("flavor", "must be L, Q or both");
  }

  file.recipe.require_zero_diagonal = j.value("require_zero_diagonal", true);
  if (!j.contains("terms") || !j.at("terms").is_array() || j.at("terms").empty()) {
    schema("terms", "needs a nonempty list of {f, g} terms");
  }
  const Json& terms = j.at("terms");
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string at = "terms[" + std::to_string(k) + "]";
    if (!terms[k].is_object() || !terms[k].contains("f") || !terms[k].contains("g")) {
      schema(at, "term needs 'f' and 'g'");
    }
    file.recipe.pairs.emplace_back(chain_from_json(terms[k].at("f"), at + ".f"),
                                   chain_from_json(terms[k].at("g"), at + ".g"));
  }

  if (j.contains("product_vertex_weights")) {
    const Json& w = j.at("product_vertex_weights");
    if (!w.is_array() || w.size() != 4) schema("product_vertex_weights", "needs four entries");
    std::vector<double> moduli;
    for (const auto& z : w) moduli.push_back(std::abs(complex_from_json(z)));
    file.vertex_moduli = std::move(moduli);
  }
  return file;
}

}  // namespace qgraph::cli
