#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "check.hpp"
#include "json_io.hpp"
#include "qgraph/analogies.hpp"
#include "qgraph/entanglers.hpp"
#include "qgraph/error.hpp"
#include "qgraph/graph_dsl.hpp"
#include "qgraph/laplacians.hpp"
#include "qgraph/quantum_states.hpp"
#include "qgraph/spectra.hpp"

namespace qgraph::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ComputeError(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

MatrixFlavor flavor_from(const std::string& name) {
  return name == "Q" ? MatrixFlavor::Signless : MatrixFlavor::Combinatorial;
}

Complex complex_arg(const std::string& text, const std::string& flag) {
  const auto z = parse_complex(text);
  if (!z) throw ComputeError(ErrorCode::InvalidArgument, flag + ": malformed complex literal '" + text + "'");
  return *z;
}

std::vector<double> real_list(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto z = parse_complex(item);
    if (!z || z->imag() != 0.0) {
      throw ComputeError(ErrorCode::InvalidArgument, flag + ": expected comma-separated reals");
    }
    out.push_back(z->real());
  }
  return out;
}

Json report(const std::string& command, Json inputs, Json result, Json warnings = Json::array()) {
  Json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["result"] = std::move(result);
  j["warnings"] = std::move(warnings);
  return j;
}

struct Options {
  std::string file;
  std::string matrix = "L";

  std::string recipe;
  std::string recipe_file;
  std::string w1 = "1", w2 = "1", w1p = "1", w2p = "1";
  std::string w = "1", wp = "1";
  double r1 = 1.0, r2 = 1.0;

  bool fuzz = false;
  int n = 6;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::string suite = "all";
  std::string golden;

  std::string analogy;
  double alpha = 1.0;
  double dt = 0.01;
  std::size_t steps = 1000;
  std::string psi0;
};

Json cmd_spectrum(const Options& o, Json& inputs) {
  inputs["file"] = o.file;
  inputs["matrix"] = o.matrix;
  const auto g = parse_graph(read_file(o.file));
  const auto k = laplacian(g, flavor_from(o.matrix));
  const auto eig = hermitian_eigen(k);
  Json result;
  result["kind"] = std::string(kind_keyword(g.kind()));
  result["n"] = g.vertex_count();
  result["matrix"] = to_json(k);
  result["eigenvalues"] = to_json(std::span<const double>(eig.values));
  result["kernel_multiplicity"] = zero_multiplicity(eig.values);
  result["residual"] = eig.residual;
  return result;
}

Json cmd_state(const Options& o, Json& inputs, Json& warnings) {
  inputs["file"] = o.file;
  inputs["matrix"] = o.matrix;
  const auto g = parse_graph(read_file(o.file));
  const auto rho = density_from_graph(g, flavor_from(o.matrix));
  Json result = state_summary(rho);
  if (result.contains("ppt") && result["ppt"]["borderline"].get<bool>()) {
    warnings.push_back("PPT verdict is borderline: smallest partial-transpose eigenvalue is within tolerance of zero");
  }
  return result;
}

Json flavored_state(MatrixFlavor flavor, const DensityMatrix& rho, Json& warnings) {
  Json s;
  s["flavor"] = flavor_name(flavor);
  const Json summary = state_summary(rho);
  for (auto it = summary.begin(); it != summary.end(); ++it) s[it.key()] = it.value();
  if (s.contains("ppt") && s["ppt"]["borderline"].get<bool>()) {
    warnings.push_back("borderline PPT verdict for flavor " + flavor_name(flavor));
  }
  return s;
}

Json cmd_entangle(const Options& o, Json& inputs, Json& warnings) {
  if (o.recipe.empty() == o.recipe_file.empty()) {
    throw ComputeError(ErrorCode::InvalidArgument, "give exactly one of --recipe or --recipe-file");
  }
  Json result;
  Json states = Json::array();
  if (!o.recipe_file.empty()) {
    inputs["recipe_file"] = o.recipe_file;
    Json doc;
    try {
      doc = Json::parse(read_file(o.recipe_file));
    } catch (const Json::parse_error& e) {
      throw ComputeError(ErrorCode::InvalidArgument, std::string("recipe file is not JSON: ") + e.what());
    }
    const auto file = recipe_from_json(doc);
    const auto aprod = product_multi(file.ag, file.ah, file.recipe);
    result["adjacency"] = to_json(aprod);
    for (const auto flavor : file.flavors) {
      states.push_back(flavored_state(flavor, density_from_product(aprod, flavor, file.vertex_moduli), warnings));
    }
    result["states"] = std::move(states);
    return result;
  }

  inputs["recipe"] = o.recipe;
  const std::pair<const char*, BellKind> bells[] = {{"bell-phi-", BellKind::PhiMinus},
                                                    {"bell-phi+", BellKind::PhiPlus},
                                                    {"bell-psi-", BellKind::PsiMinus},
                                                    {"bell-psi+", BellKind::PsiPlus}};
  for (const auto& [name, kind] : bells) {
    if (o.recipe != name) continue;
    inputs["w1"] = o.w1;
    inputs["w2"] = o.w2;
    inputs["w1p"] = o.w1p;
    inputs["w2p"] = o.w2p;
    const auto rho = bell_pair(kind, complex_arg(o.w1, "--w1"), complex_arg(o.w2, "--w2"),
                               complex_arg(o.w1p, "--w1p"), complex_arg(o.w2p, "--w2p"));
    states.push_back(flavored_state(bell_flavor(kind), rho, warnings));
    result["states"] = std::move(states);
    return result;
  }
  if (o.recipe == "werner") {
    inputs["w"] = o.w;
    inputs["wp"] = o.wp;
    inputs["r1"] = o.r1;
    inputs["r2"] = o.r2;
    const Complex w = complex_arg(o.w, "--w");
    const Complex wp = complex_arg(o.wp, "--wp");
    const auto pair = werner_from_loops(w, wp, o.r1, o.r2);
    result["adjacency"] = to_json(werner_adjacency(w, wp, o.r1, o.r2));
    states.push_back(flavored_state(MatrixFlavor::Combinatorial, pair.combinatorial, warnings));
    states.push_back(flavored_state(MatrixFlavor::Signless, pair.signless, warnings));
    result["states"] = std::move(states);
    return result;
  }
  throw ComputeError(ErrorCode::InvalidArgument, "unknown recipe '" + o.recipe + "'");
}

Json cmd_check(const Options& o, Json& inputs) {
  const auto suite = suite_from_name(o.suite);
  if (!suite) throw ComputeError(ErrorCode::InvalidArgument, "unknown suite '" + o.suite + "'");
  inputs["suite"] = o.suite;
  inputs["seed"] = o.seed;
  if (o.fuzz) {
    if (!o.file.empty()) throw ComputeError(ErrorCode::InvalidArgument, "--fuzz takes no graph file");
    inputs["fuzz"] = true;
    inputs["n"] = o.n;
    inputs["trials"] = o.trials;
    return check_fuzz({o.n, o.trials, o.seed}, *suite);
  }
  if (o.file.empty()) throw ComputeError(ErrorCode::InvalidArgument, "check needs a graph file or --fuzz");
  inputs["file"] = o.file;
  Json golden;
  if (!o.golden.empty()) {
    inputs["golden"] = o.golden;
    try {
      golden = Json::parse(read_file(o.golden));
    } catch (const Json::parse_error& e) {
      throw ComputeError(ErrorCode::InvalidArgument, std::string("golden file is not JSON: ") + e.what());
    }
    if (!golden.is_object()) throw ComputeError(ErrorCode::InvalidArgument, "golden file must hold an object");
  }
  return check_graph(parse_graph(read_file(o.file)), *suite, golden, o.seed);
}

Json cmd_analogy(const Options& o, Json& inputs) {
  inputs["analogy"] = o.analogy;
  inputs["file"] = o.file;
  const auto g = parse_graph(read_file(o.file));
  Json result;
  if (o.analogy == "walk") {
    const auto gamma = stationary_distribution(g);
    result["stationary_distribution"] = to_json(std::span<const double>(gamma));
  } else if (o.analogy == "diffuse") {
    inputs["alpha"] = o.alpha;
    inputs["dt"] = o.dt;
    inputs["steps"] = o.steps;
    std::vector<double> psi0;
    if (o.psi0.empty()) {
      psi0.assign(static_cast<std::size_t>(g.vertex_count()), 0.0);
      psi0.front() = 1.0;
    } else {
      psi0 = real_list(o.psi0, "--psi0");
    }
    inputs["psi0"] = psi0;
    const auto state = diffuse(g, psi0, o.alpha, o.dt, o.steps);
    result["psi"] = to_json(std::span<const double>(state.psi));
    result["t"] = state.t;
    double mass = 0.0;
    for (double x : state.psi) mass += x;
    result["mass"] = mass;
  } else if (o.analogy == "det") {
    result["determinant"] = to_json(coates_determinant(adjacency(g)));
  } else if (o.analogy == "perm") {
    result["permanent"] = to_json(permanent(adjacency(g)));
  } else {
    throw ComputeError(ErrorCode::InvalidArgument, "unknown analogy '" + o.analogy + "'");
  }
  return result;
}

void emit_error(std::ostream& err, const std::string& kind, Json detail) {
  Json j;
  j["error"] = kind;
  for (auto it = detail.begin(); it != detail.end(); ++it) j[it.key()] = it.value();
  err << j.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Complex-weighted digraphs as quantum states", "qgraph"};
  app.require_subcommand(1);

  const std::vector<std::string> matrices{"L", "Q"};

  auto* spectrum = app.add_subcommand("spectrum", "Laplacian matrix and spectrum of a graph");
  spectrum->add_option("file", o.file, "graph file (.qg)")->required();
  spectrum->add_option("--matrix", o.matrix, "L or Q")->check(CLI::IsMember(matrices));

  auto* state = app.add_subcommand("state", "density matrix of a graph");
  state->add_option("file", o.file, "graph file (.qg)")->required();
  state->add_option("--matrix", o.matrix, "L or Q")->check(CLI::IsMember(matrices));

  auto* entangle = app.add_subcommand("entangle", "two-qubit states from graph products");
  entangle->add_option("--recipe", o.recipe, "bell-phi-|bell-phi+|bell-psi-|bell-psi+|werner");
  entangle->add_option("--recipe-file", o.recipe_file, "JSON product recipe");
  entangle->add_option("--w1", o.w1, "vertex weight w1 of G");
  entangle->add_option("--w2", o.w2, "vertex weight w2 of G");
  entangle->add_option("--w1p", o.w1p, "vertex weight w1' of H");
  entangle->add_option("--w2p", o.w2p, "vertex weight w2' of H");
  entangle->add_option("--w", o.w, "unit edge weight of G (werner)");
  entangle->add_option("--wp", o.wp, "unit edge weight of H (werner)");
  entangle->add_option("--r1", o.r1, "loop weight of G (werner)");
  entangle->add_option("--r2", o.r2, "loop weight of H (werner)");

  auto* check = app.add_subcommand("check", "run property suites");
  check->add_option("file", o.file, "graph file (.qg)");
  check->add_flag("--fuzz", o.fuzz, "random graphs instead of a file");
  check->add_option("--n", o.n, "largest vertex count for --fuzz");
  check->add_option("--trials", o.trials, "random trials");
  check->add_option("--seed", o.seed, "random seed");
  check->add_option("--suite", o.suite, "all|laplacian|purity|separability");
  check->add_option("--golden", o.golden, "JSON file of expected values");

  auto* analogy = app.add_subcommand("analogy", "physical analogies");
  analogy->add_option("kind", o.analogy, "walk|diffuse|det|perm")->required();
  analogy->add_option("file", o.file, "graph file (.qg)")->required();
  analogy->add_option("--alpha", o.alpha, "diffusion constant");
  analogy->add_option("--dt", o.dt, "time step");
  analogy->add_option("--steps", o.steps, "number of steps");
  analogy->add_option("--psi0", o.psi0, "initial amounts, comma separated");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "usage", {{"message", e.what()}});
    return kExitCompute;
  }

  try {
    Json inputs = Json::object();
    Json warnings = Json::array();
    Json result;
    std::string command;
    int code = kExitOk;
    if (spectrum->parsed()) {
      command = "spectrum";
      result = cmd_spectrum(o, inputs);
    } else if (state->parsed()) {
      command = "state";
      result = cmd_state(o, inputs, warnings);
    } else if (entangle->parsed()) {
      command = "entangle";
      result = cmd_entangle(o, inputs, warnings);
    } else if (check->parsed()) {
      command = "check";
      result = cmd_check(o, inputs);
      if (!result["passed"].get<bool>()) code = kExitPropertyFailure;
    } else {
      command = "analogy";
      result = cmd_analogy(o, inputs);
    }
    out << report(command, std::move(inputs), std::move(result), std::move(warnings)).dump(2) << "\n";
    return code;
  } catch (const ParseError& e) {
    emit_error(err, "parse", {{"kind", std::string(to_string(e.kind()))},
                              {"line", e.line()},
                              {"column", e.column()},
                              {"message", e.message()}});
    return kExitParse;
  } catch (const ComputeError& e) {
    emit_error(err, "compute", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}});
    return kExitCompute;
  } catch (const nlohmann::json::exception& e) {
    emit_error(err, "compute", {{"code", "InvalidArgument"}, {"message", e.what()}});
    return kExitCompute;
  }
}

}  // namespace qgraph::cli
