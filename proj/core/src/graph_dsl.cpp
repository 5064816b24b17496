#include "qgraph/graph_dsl.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <set>
#include <utility>
#include <vector>

#include "qgraph/error.hpp"

namespace qgraph {

ParseError::ParseError(Kind kind, int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column),
      message_(message) {}

std::string_view to_string(ParseError::Kind kind) noexcept {
  return kind == ParseError::Kind::Syntax ? "Syntax" : "Semantic";
}

std::string_view kind_keyword(GraphKind kind) noexcept {
  switch (kind) {
    case GraphKind::EdgeUnit: return "edge-unit";
    case GraphKind::VertexWeighted: return "vertex";
    case GraphKind::EdgeLoop: return "edge-loop";
  }
  return "edge-unit";
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Length of the longest unsigned decimal literal at the front of s:
// digits [. digits*] | . digits, then an optional exponent. 0 if none.
std::size_t scan_unsigned(std::string_view s) {
  std::size_t i = 0;
  std::size_t int_digits = 0;
  while (i < s.size() && is_digit(s[i])) ++i, ++int_digits;
  std::size_t frac_digits = 0;
  if (i < s.size() && s[i] == '.') {
    std::size_t j = i + 1;
    while (j < s.size() && is_digit(s[j])) ++j, ++frac_digits;
    if (int_digits + frac_digits == 0) return 0;
    i = j;
  }
  if (int_digits + frac_digits == 0) return 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    std::size_t j = i + 1;
    if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
    std::size_t exp_digits = 0;
    while (j < s.size() && is_digit(s[j])) ++j, ++exp_digits;
    if (exp_digits > 0) i = j;
  }
  return i;
}

std::optional<double> to_double(std::string_view digits) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

// Optional sign followed by an unsigned literal; advances `s` past it.
std::optional<double> take_signed(std::string_view& s) {
  double sign = 1.0;
  std::size_t skip = 0;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    sign = s[0] == '-' ? -1.0 : 1.0;
    skip = 1;
  }
  const std::size_t len = scan_unsigned(s.substr(skip));
  if (len == 0) return std::nullopt;
  const auto value = to_double(s.substr(skip, len));
  if (!value) return std::nullopt;
  s.remove_prefix(skip + len);
  return sign * *value;
}

std::optional<double> parse_real(std::string_view token) {
  const auto value = take_signed(token);
  if (!value || !token.empty()) return std::nullopt;
  return value;
}

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  WeightedDigraph run() {
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text_.size()) {
      const std::size_t end = text_.find('\n', pos);
      std::string_view line =
          text_.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (const auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      line_ = line_no;
      const auto tokens = tokenize(line);
      if (!tokens.empty()) directive(tokens);
      if (end == std::string_view::npos) break;
      pos = end + 1;
    }
    return finish();
  }

 private:
  [[noreturn]] void syntax(int column, const std::string& message) const {
    throw ParseError(ParseError::Kind::Syntax, line_, column, message);
  }
  [[noreturn]] void semantic(int column, const std::string& message) const {
    throw ParseError(ParseError::Kind::Semantic, line_, column, message);
  }

  void directive(const std::vector<Token>& tokens) {
    const auto& head = tokens.front();
    if (head.text == "graph") {
      header(tokens);
      return;
    }
    if (!kind_) syntax(head.column, "expected 'graph' header before any directive");
    if (head.text == "edge") {
      edge(tokens);
    } else if (head.text == "loop") {
      loop(tokens);
    } else if (head.text == "vw") {
      vertex_weight(tokens);
    } else {
      syntax(head.column, "unknown directive '" + std::string(head.text) + "'");
    }
  }

  void header(const std::vector<Token>& tokens) {
    if (kind_) syntax(tokens[0].column, "duplicate 'graph' header");
    if (tokens.size() != 3) syntax(tokens[0].column, "header must be: graph KIND n=INT");
    const auto& kind = tokens[1];
    if (kind.text == "edge-unit") {
      kind_ = GraphKind::EdgeUnit;
    } else if (kind.text == "vertex") {
      kind_ = GraphKind::VertexWeighted;
    } else if (kind.text == "edge-loop") {
      kind_ = GraphKind::EdgeLoop;
    } else {
      syntax(kind.column, "unknown graph kind '" + std::string(kind.text) + "'");
    }
    const auto& count = tokens[2];
    if (count.text.substr(0, 2) != "n=") syntax(count.column, "expected n=INT");
    const auto n = integer({count.text.substr(2), count.column + 2});
    if (n < 1 || n > kMaxParsedVertices) {
      semantic(count.column + 2, "vertex count must be in 1.." + std::to_string(kMaxParsedVertices));
    }
    n_ = static_cast<int>(n);
    header_line_ = line_;
    vertex_weights_.assign(static_cast<std::size_t>(n_), std::nullopt);
  }

  long long integer(const Token& token) const {
    if (token.text.empty()) syntax(token.column, "expected an integer");
    for (char c : token.text) {
      if (!is_digit(c)) syntax(token.column, "expected an integer, got '" + std::string(token.text) + "'");
    }
    long long value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.text.data(), token.text.data() + token.text.size(), value);
    if (ec != std::errc{}) syntax(token.column, "integer out of range");
    return value;
  }

  int vertex(const Token& token) const {
    const auto v = integer(token);
    if (v < 1 || v > n_) {
      semantic(token.column, "vertex " + std::string(token.text) + " outside 1.." + std::to_string(n_));
    }
    return static_cast<int>(v);
  }

  Complex complex(const Token& token) const {
    const auto z = parse_complex(token.text);
    if (!z) syntax(token.column, "malformed complex literal '" + std::string(token.text) + "'");
    return *z;
  }

  void edge(const std::vector<Token>& tokens) {
    if (tokens.size() < 3 || tokens.size() > 4) syntax(tokens[0].column, "edge takes I J [W]");
    const int i = vertex(tokens[1]);
    const int j = vertex(tokens[2]);
    Complex w = 1.0;
    if (tokens.size() == 4) w = complex(tokens[3]);
    if (i == j) semantic(tokens[2].column, "edge endpoints must differ");
    if (!pairs_.emplace(std::min(i, j), std::max(i, j)).second) {
      semantic(tokens[1].column, "duplicate edge between " + std::to_string(i) + " and " + std::to_string(j));
    }
    switch (*kind_) {
      case GraphKind::VertexWeighted:
        if (tokens.size() == 4) semantic(tokens[3].column, "vertex-weighted edges carry no weight");
        break;
      case GraphKind::EdgeUnit:
        if (tokens.size() != 4) semantic(tokens[0].column, "edge weight required");
        if (std::abs(std::abs(w) - 1.0) > kUnitModulusTolerance) {
          semantic(tokens[3].column, "edge-unit weight must have modulus one");
        }
        break;
      case GraphKind::EdgeLoop:
        if (tokens.size() != 4) semantic(tokens[0].column, "edge weight required");
        if (w == Complex{}) semantic(tokens[3].column, "edge weight must be nonzero");
        break;
    }
    edges_.push_back({i, j, w});
  }

  void loop(const std::vector<Token>& tokens) {
    if (tokens.size() != 3) syntax(tokens[0].column, "loop takes I R");
    if (*kind_ != GraphKind::EdgeLoop) semantic(tokens[0].column, "loops need an edge-loop graph");
    const int i = vertex(tokens[1]);
    const auto r = parse_real(tokens[2].text);
    if (!r) syntax(tokens[2].column, "malformed real literal '" + std::string(tokens[2].text) + "'");
    if (!(*r > 0.0)) semantic(tokens[2].column, "loop weight must be positive");
    for (const auto& l : loops_) {
      if (l.vertex == i) semantic(tokens[1].column, "duplicate loop at vertex " + std::to_string(i));
    }
    loops_.push_back({i, *r});
  }

  void vertex_weight(const std::vector<Token>& tokens) {
    if (tokens.size() != 3) syntax(tokens[0].column, "vw takes I Z");
    if (*kind_ != GraphKind::VertexWeighted) {
      semantic(tokens[0].column, "vertex weights need a vertex graph");
    }
    const int i = vertex(tokens[1]);
    const Complex z = complex(tokens[2]);
    if (z == Complex{}) semantic(tokens[2].column, "vertex weight must be nonzero");
    auto& slot = vertex_weights_[i - 1];
    if (slot) semantic(tokens[1].column, "duplicate weight for vertex " + std::to_string(i));
    slot = z;
  }

  WeightedDigraph finish() {
    if (!kind_) throw ParseError(ParseError::Kind::Syntax, 1, 1, "missing 'graph' header");
    line_ = header_line_;
    std::vector<Complex> weights;
    if (*kind_ == GraphKind::VertexWeighted) {
      for (int v = 1; v <= n_; ++v) {
        if (!vertex_weights_[v - 1]) semantic(1, "missing vw for vertex " + std::to_string(v));
        weights.push_back(*vertex_weights_[v - 1]);
      }
    }
    try {
      return {*kind_, n_, std::move(edges_), std::move(loops_), std::move(weights)};
    } catch (const ComputeError& e) {
      semantic(1, e.what());
    }
  }

  std::string_view text_;
  int line_ = 0;
  int header_line_ = 0;
  std::optional<GraphKind> kind_;
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Loop> loops_;
  std::vector<std::optional<Complex>> vertex_weights_;
  std::set<std::pair<int, int>> pairs_;
};

}  // namespace

std::optional<Complex> parse_complex(std::string_view token) {
  if (token.empty()) return std::nullopt;

  // Bare imaginary unit: i, +i, -i.
  if (token == "i" || token == "+i") return Complex{0.0, 1.0};
  if (token == "-i") return Complex{0.0, -1.0};

  std::string_view rest = token;
  const auto first = take_signed(rest);
  if (!first) return std::nullopt;
  if (rest.empty()) return Complex{*first, 0.0};
  if (rest == "i") return Complex{0.0, *first};

  if (rest[0] == '@') {
    const auto theta = parse_real(rest.substr(1));
    if (!theta) return std::nullopt;
    const Complex z{*first * std::cos(*theta), *first * std::sin(*theta)};
    if (!is_finite(z)) return std::nullopt;
    return z;
  }

  if (rest[0] != '+' && rest[0] != '-') return std::nullopt;
  const double sign = rest[0] == '-' ? -1.0 : 1.0;
  rest.remove_prefix(1);
  if (rest.empty() || rest.back() != 'i') return std::nullopt;
  rest.remove_suffix(1);
  double imag = 1.0;
  if (!rest.empty()) {
    if (rest[0] == '+' || rest[0] == '-') return std::nullopt;
    const auto value = parse_real(rest);
    if (!value) return std::nullopt;
    imag = *value;
  }
  return Complex{*first, sign * imag};
}

WeightedDigraph parse_graph(std::string_view text) { return Parser(text).run(); }

std::string format_real(double value) {
  char buffer[64];
  const auto [ptr, ec] =
      std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 17);
  return std::string(buffer, ptr);
}

std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return format_real(z.real());
  if (z.real() == 0.0) return format_real(z.imag()) + "i";
  const char sign = std::signbit(z.imag()) ? '-' : '+';
  return format_real(z.real()) + sign + format_real(std::abs(z.imag())) + "i";
}

std::string serialize_graph(const WeightedDigraph& g) {
  std::string out = "graph ";
  out += kind_keyword(g.kind());
  out += " n=" + std::to_string(g.vertex_count()) + "\n";
  for (std::size_t v = 0; v < g.vertex_weights().size(); ++v) {
    out += "vw " + std::to_string(v + 1) + " " + format_complex(g.vertex_weights()[v]) + "\n";
  }
  for (const auto& e : g.edges()) {
    out += "edge " + std::to_string(e.from) + " " + std::to_string(e.to);
    if (g.kind() != GraphKind::VertexWeighted) out += " " + format_complex(e.weight);
    out += "\n";
  }
  for (const auto& l : g.loops()) {
    out += "loop " + std::to_string(l.vertex) + " " + format_real(l.weight) + "\n";
  }
  return out;
}

}  // namespace qgraph
