#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qgraph/graph.hpp"

namespace qgraph {

/// Failure to turn .qg text into a graph. line and column are 1-based and
/// point at the offending token (column counts bytes).
class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Semantic };

  ParseError(Kind kind, int line, int column, const std::string& message);

  Kind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  Kind kind_;
  int line_;
  int column_;
  std::string message_;
};

std::string_view to_string(ParseError::Kind kind) noexcept;

/// Upper bound on the header's vertex count.
inline constexpr int kMaxParsedVertices = 100000;

/// Parse one complex literal: `a`, `bi`, `i`, `a+bi`, `a-bi`, or polar `r@theta`.
/// Returns nullopt on any malformed or non-finite input.
std::optional<Complex> parse_complex(std::string_view token);

/// Parse a .qg document:
///
///   graph edge-unit|vertex|edge-loop n=N
///   edge I J [W]
///   loop I R
///   vw I Z
///
/// One directive per line; '#' starts a comment; blank lines are ignored;
/// LF or CRLF line endings.
WeightedDigraph parse_graph(std::string_view text);

/// Canonical text: header, vw lines, edges by (from, to), loops by vertex;
/// numbers printed with 17 significant digits. parse_graph inverts it exactly.
std::string serialize_graph(const WeightedDigraph& g);

/// Shortest "%.17g"-style rendering used by serialize_graph.
std::string format_real(double value);
std::string format_complex(Complex z);

std::string_view kind_keyword(GraphKind kind) noexcept;

}  // namespace qgraph
