#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hyperlines/certificate.hpp"
#include "hyperlines/metric.hpp"

// Text formats. Every document starts with a header line "<kind> <n>"; the
// records that follow are one per line, whitespace separated, 0-indexed;
// '#' starts a comment.
//
//   hypergraph n   records "a b c"        (one hedge per line)
//   graph n        records "u v"          (one edge per line)
//   metric n       n rows of n entries    (integers or p/q)
//   points_l1 n    n rows "x y"           (integer coordinates)
//   certificate    key/value lines, see write_certificate
namespace hyperlines {

enum class ParseErrorKind {
  empty_document,
  unknown_header,
  bad_integer,
  bad_rational,
  malformed_record,
  out_of_range_vertex,
  wrong_record_count,
  asymmetric_metric,
  triangle_violation,
  invalid_metric_entry,
  duplicate_point,
  bad_certificate,
};

constexpr std::string_view to_string(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::empty_document: return "empty-document";
    case ParseErrorKind::unknown_header: return "unknown-header";
    case ParseErrorKind::bad_integer: return "non-integer-token";
    case ParseErrorKind::bad_rational: return "non-rational-token";
    case ParseErrorKind::malformed_record: return "malformed-record";
    case ParseErrorKind::out_of_range_vertex: return "out-of-range-vertex";
    case ParseErrorKind::wrong_record_count: return "wrong-record-count";
    case ParseErrorKind::asymmetric_metric: return "asymmetric-metric";
    case ParseErrorKind::triangle_violation: return "triangle-inequality-violation";
    case ParseErrorKind::invalid_metric_entry: return "invalid-metric-entry";
    case ParseErrorKind::duplicate_point: return "duplicate-point";
    case ParseErrorKind::bad_certificate: return "bad-certificate";
  }
  return "?";
}

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                           std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        line_(line),
        column_(column) {}

  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
};

enum class InputKind { hypergraph, graph, metric, points_l1, certificate };

constexpr std::string_view to_string(InputKind k) {
  switch (k) {
    case InputKind::hypergraph: return "hypergraph";
    case InputKind::graph: return "graph";
    case InputKind::metric: return "metric";
    case InputKind::points_l1: return "points_l1";
    case InputKind::certificate: return "certificate";
  }
  return "?";
}

using PointSet = std::vector<PointL1>;

struct InputDocument {
  InputKind kind = InputKind::hypergraph;
  std::variant<Hypergraph3, Graph, MetricSpace, PointSet, BoundCertificate> value;
};

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column = 0;  // 1-based
};

struct Record {
  std::size_t line = 0;  // 1-based
  std::vector<Token> tokens;
};

/// Non-empty lines with comments stripped.
inline std::vector<Record> tokenize(std::string_view text) {
  std::vector<Record> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Record rec{line_no, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      if (i > start) rec.tokens.push_back({line.substr(start, i - start), start + 1});
    }
    if (!rec.tokens.empty()) out.push_back(std::move(rec));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

inline std::int64_t parse_integer(const Record& rec, const Token& tok) {
  std::int64_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last)
    throw ParseError(ParseErrorKind::bad_integer, rec.line, tok.column, "expected an integer, got '" +
                                                                            std::string(tok.text) + "'");
  return value;
}

inline VertexId parse_vertex(const Record& rec, const Token& tok, std::size_t n) {
  std::int64_t v = parse_integer(rec, tok);
  if (v < 0 || static_cast<std::uint64_t>(v) >= n)
    throw ParseError(ParseErrorKind::out_of_range_vertex, rec.line, tok.column,
                     "vertex " + std::string(tok.text) + " not in [0, " + std::to_string(n) + ")");
  return static_cast<VertexId>(v);
}

inline Rational parse_entry(const Record& rec, const Token& tok) {
  if (tok.text.find('.') != std::string_view::npos)
    throw ParseError(ParseErrorKind::bad_rational, rec.line, tok.column,
                     "metric entries are integers or p/q, got '" + std::string(tok.text) + "'");
  try {
    return parse_rational(tok.text);
  } catch (const Error&) {
    throw ParseError(ParseErrorKind::bad_rational, rec.line, tok.column,
                     "expected an integer or p/q, got '" + std::string(tok.text) + "'");
  }
}

inline void expect_arity(const Record& rec, std::size_t arity, std::string_view what) {
  if (rec.tokens.size() != arity) {
    std::size_t col = rec.tokens.size() > arity ? rec.tokens[arity].column : rec.tokens.back().column;
    throw ParseError(ParseErrorKind::malformed_record, rec.line, col,
                     std::string(what) + " records have " + std::to_string(arity) + " fields, found " +
                         std::to_string(rec.tokens.size()));
  }
}

inline Hypergraph3 parse_hypergraph_body(std::size_t n, std::span<const Record> body) {
  Hypergraph3 h(n);
  for (const auto& rec : body) {
    expect_arity(rec, 3, "hypergraph");
    VertexId a = parse_vertex(rec, rec.tokens[0], n);
    VertexId b = parse_vertex(rec, rec.tokens[1], n);
    VertexId c = parse_vertex(rec, rec.tokens[2], n);
    if (a == b || b == c || a == c)
      throw ParseError(ParseErrorKind::malformed_record, rec.line, rec.tokens[0].column,
                       "a hedge needs three distinct vertices");
    h.add_hedge(a, b, c);
  }
  return h;
}

inline Graph parse_graph_body(std::size_t n, std::span<const Record> body) {
  Graph g(n);
  for (const auto& rec : body) {
    expect_arity(rec, 2, "graph");
    VertexId u = parse_vertex(rec, rec.tokens[0], n);
    VertexId v = parse_vertex(rec, rec.tokens[1], n);
    if (u == v) throw ParseError(ParseErrorKind::malformed_record, rec.line, rec.tokens[0].column, "loop edge");
    g.add_edge(u, v);
  }
  return g;
}

inline MetricSpace parse_metric_body(std::size_t n, std::span<const Record> body, std::size_t header_line) {
  if (body.size() != n)
    throw ParseError(ParseErrorKind::wrong_record_count, body.size() > n ? body[n].line : header_line, 1,
                     "metric needs " + std::to_string(n) + " rows, found " + std::to_string(body.size()));
  std::vector<Rational> d(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    expect_arity(body[i], n, "metric");
    for (std::size_t j = 0; j < n; ++j) d[i * n + j] = parse_entry(body[i], body[i].tokens[j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& rec = body[i];
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = d[i * n + j];
      if (i == j && x != 0)
        throw ParseError(ParseErrorKind::invalid_metric_entry, rec.line, rec.tokens[j].column,
                         "diagonal entries must be 0");
      if (i != j && x <= 0)
        throw ParseError(ParseErrorKind::invalid_metric_entry, rec.line, rec.tokens[j].column,
                         "off-diagonal entries must be positive");
      if (j < i && x != d[j * n + i])
        throw ParseError(ParseErrorKind::asymmetric_metric, rec.line, rec.tokens[j].column,
                         "dist(" + std::to_string(i) + "," + std::to_string(j) + ") != dist(" + std::to_string(j) +
                             "," + std::to_string(i) + ")");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (d[i * n + k] > d[i * n + j] + d[j * n + k])
          throw ParseError(ParseErrorKind::triangle_violation, body[i].line, body[i].tokens[k].column,
                           "dist(" + std::to_string(i) + "," + std::to_string(k) + ") exceeds the path through " +
                               std::to_string(j));
  return MetricSpace(n, std::move(d));
}

inline PointSet parse_points_body(std::size_t n, std::span<const Record> body, std::size_t header_line) {
  if (body.size() != n)
    throw ParseError(ParseErrorKind::wrong_record_count, body.size() > n ? body[n].line : header_line, 1,
                     "points_l1 needs " + std::to_string(n) + " rows, found " + std::to_string(body.size()));
  PointSet points;
  for (const auto& rec : body) {
    expect_arity(rec, 2, "points_l1");
    PointL1 p{parse_integer(rec, rec.tokens[0]), parse_integer(rec, rec.tokens[1])};
    for (const auto& q : points)
      if (q == p) throw ParseError(ParseErrorKind::duplicate_point, rec.line, rec.tokens[0].column, "repeated point");
    points.push_back(p);
  }
  return points;
}

inline BoundCertificate parse_certificate_body(std::span<const Record> body, std::size_t header_line);

}  // namespace detail

inline InputDocument parse_input(std::string_view text) {
  auto records = detail::tokenize(text);
  if (records.empty()) throw ParseError(ParseErrorKind::empty_document, 1, 1, "no header line");
  const auto& header = records.front();
  std::string_view kind = header.tokens[0].text;
  std::span<const detail::Record> body(records.data() + 1, records.size() - 1);

  if (kind == "certificate") {
    if (header.tokens.size() != 1)
      throw ParseError(ParseErrorKind::malformed_record, header.line, header.tokens[1].column,
                       "certificate header takes no arguments");
    return {InputKind::certificate, detail::parse_certificate_body(body, header.line)};
  }

  static constexpr std::string_view kKinds[] = {"hypergraph", "graph", "metric", "points_l1"};
  if (std::find(std::begin(kKinds), std::end(kKinds), kind) == std::end(kKinds))
    throw ParseError(ParseErrorKind::unknown_header, header.line, header.tokens[0].column,
                     "unknown document kind '" + std::string(kind) + "'");
  detail::expect_arity(header, 2, "header");
  std::int64_t n_raw = detail::parse_integer(header, header.tokens[1]);
  if (n_raw < 0)
    throw ParseError(ParseErrorKind::bad_integer, header.line, header.tokens[1].column, "negative size");
  auto n = static_cast<std::size_t>(n_raw);

  if (kind == "hypergraph") return {InputKind::hypergraph, detail::parse_hypergraph_body(n, body)};
  if (kind == "graph") return {InputKind::graph, detail::parse_graph_body(n, body)};
  if (kind == "metric") return {InputKind::metric, detail::parse_metric_body(n, body, header.line)};
  return {InputKind::points_l1, detail::parse_points_body(n, body, header.line)};
}

inline std::string to_text(const Hypergraph3& h) {
  std::ostringstream out;
  out << "hypergraph " << h.vertex_count() << '\n';
  for (const auto& t : h.hedges()) out << t.a << ' ' << t.b << ' ' << t.c << '\n';
  return out.str();
}

inline std::string to_text(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

inline std::string to_text(const MetricSpace& ms) {
  std::ostringstream out;
  out << "metric " << ms.size() << '\n';
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = 0; j < ms.size(); ++j) out << (j ? " " : "") << to_string(ms.at(i, j));
    out << '\n';
  }
  return out.str();
}

inline std::string to_text(const PointSet& points) {
  std::ostringstream out;
  out << "points_l1 " << points.size() << '\n';
  for (const auto& p : points) out << p.x << ' ' << p.y << '\n';
  return out.str();
}

/// "[0 1 2]"
inline std::string to_text(const Line& line) {
  std::string out = "[";
  bool first = true;
  line.for_each([&](std::size_t v) {
    if (!first) out += ' ';
    out += std::to_string(v);
    first = false;
  });
  return out + "]";
}

inline std::string to_text(const LogLinear& q) {
  if (q.lg_coeff == 0) return to_string(q.constant);
  std::string lg = to_string(q.lg_coeff) + "*lg(n)";
  return q.constant == 0 ? lg : to_string(q.constant) + "+" + lg;
}

inline LogLinear parse_log_linear(std::string_view text) {
  constexpr std::string_view suffix = "*lg(n)";
  if (text.size() < suffix.size() || text.substr(text.size() - suffix.size()) != suffix)
    return constant(parse_rational(text));
  std::string_view body = text.substr(0, text.size() - suffix.size());
  std::size_t plus = body.find('+', 1);
  if (plus == std::string_view::npos) return lg_multiple(parse_rational(body));
  return {parse_rational(body.substr(0, plus)), parse_rational(body.substr(plus + 1))};
}

/// Certificate document:
///
///   certificate
///   n <n>  epsilon <p/q>  delta <p/q>  mode exhaustive|greedy  heuristic <bool>  m <m>
///   hedge a b c                 (one line per hedge)
///   S <vertices>   s <s>   T [..] [..]   t <t>   R <vertices>   r <r>
///   branch t_large|mt_large|final_chain
///   side_condition <bool>   chain_applicable <bool>
///   m_minus_t <m-t>   lg_n <decimal, informational>
///   inequality <name> <lhs> <rel> <rhs> <holds>
///   end
///
/// Quantities are rationals or "<c>+<b>*lg(n)".
inline std::string write_certificate(const BoundCertificate& c) {
  std::ostringstream out;
  auto bool_text = [](bool b) { return b ? "true" : "false"; };
  auto vertices = [](const VertexSet& s) {
    std::string text;
    s.for_each([&](std::size_t v) { text += " " + std::to_string(v); });
    return text;
  };
  out << "certificate\n";
  out << "n " << c.n << '\n';
  out << "epsilon " << to_string(c.epsilon) << '\n';
  out << "delta " << to_string(c.delta) << '\n';
  out << "mode " << to_string(c.mode) << '\n';
  out << "heuristic " << bool_text(c.heuristic()) << '\n';
  out << "m " << c.m << '\n';
  for (const auto& t : c.hypergraph.hedges()) out << "hedge " << t.a << ' ' << t.b << ' ' << t.c << '\n';
  out << "S" << vertices(c.S) << '\n';
  out << "s " << c.s << '\n';
  out << "T";
  for (const auto& line : c.T) out << ' ' << to_text(line);
  out << '\n';
  out << "t " << c.t << '\n';
  out << "R" << vertices(c.R) << '\n';
  out << "r " << c.r << '\n';
  out << "branch " << to_string(c.branch) << '\n';
  out << "side_condition " << bool_text(c.side_condition) << '\n';
  out << "chain_applicable " << bool_text(c.chain_applicable) << '\n';
  out << "m_minus_t " << (c.m - c.t) << '\n';
  out << "lg_n " << std::to_string(std::log2(static_cast<double>(c.n))) << '\n';
  for (const auto& q : c.inequalities)
    out << "inequality " << q.name << ' ' << to_text(q.lhs) << ' ' << to_string(q.relation) << ' ' << to_text(q.rhs)
        << ' ' << bool_text(q.holds) << '\n';
  out << "end\n";
  return out.str();
}

namespace detail {

inline BoundCertificate parse_certificate_body(std::span<const Record> body, std::size_t header_line) {
  BoundCertificate c;
  std::optional<std::size_t> n;
  std::vector<Triple> hedges;
  bool ended = false;
  auto fail = [](const Record& rec, std::size_t col, const std::string& why) {
    return ParseError(ParseErrorKind::bad_certificate, rec.line, col, why);
  };
  auto size_value = [&](const Record& rec) -> std::size_t {
    expect_arity(rec, 2, std::string(rec.tokens[0].text));
    std::int64_t v = parse_integer(rec, rec.tokens[1]);
    if (v < 0) throw fail(rec, rec.tokens[1].column, "negative count");
    return static_cast<std::size_t>(v);
  };
  auto bool_value = [&](const Record& rec) {
    expect_arity(rec, 2, std::string(rec.tokens[0].text));
    if (rec.tokens[1].text == "true") return true;
    if (rec.tokens[1].text == "false") return false;
    throw fail(rec, rec.tokens[1].column, "expected true or false");
  };
  auto rational_value = [&](const Record& rec) {
    expect_arity(rec, 2, std::string(rec.tokens[0].text));
    try {
      return parse_rational(rec.tokens[1].text);
    } catch (const Error&) {
      throw ParseError(ParseErrorKind::bad_rational, rec.line, rec.tokens[1].column, "bad rational");
    }
  };
  auto vertex_set = [&](const Record& rec) {
    if (!n) throw fail(rec, 1, "n must come before vertex sets");
    VertexSet s;
    for (std::size_t i = 1; i < rec.tokens.size(); ++i) s.insert(parse_vertex(rec, rec.tokens[i], *n));
    return s;
  };

  for (const auto& rec : body) {
    if (ended) throw fail(rec, 1, "content after end");
    std::string_view key = rec.tokens[0].text;
    if (key == "n") {
      n = size_value(rec);
      c.n = *n;
    } else if (key == "epsilon") {
      c.epsilon = rational_value(rec);
    } else if (key == "delta") {
      c.delta = rational_value(rec);
    } else if (key == "mode") {
      expect_arity(rec, 2, "mode");
      if (rec.tokens[1].text == "exhaustive") c.mode = SpanSearch::exhaustive;
      else if (rec.tokens[1].text == "greedy") c.mode = SpanSearch::greedy;
      else throw fail(rec, rec.tokens[1].column, "unknown mode");
    } else if (key == "heuristic" || key == "m_minus_t" || key == "lg_n") {
      // derived, informational
    } else if (key == "m") {
      c.m = size_value(rec);
    } else if (key == "hedge") {
      if (!n) throw fail(rec, 1, "n must come before hedges");
      expect_arity(rec, 4, "hedge");
      VertexId a = parse_vertex(rec, rec.tokens[1], *n), b = parse_vertex(rec, rec.tokens[2], *n),
               d = parse_vertex(rec, rec.tokens[3], *n);
      if (a == b || b == d || a == d) throw fail(rec, rec.tokens[1].column, "degenerate hedge");
      hedges.push_back(Triple::sorted(a, b, d));
    } else if (key == "S") {
      c.S = vertex_set(rec);
    } else if (key == "R") {
      c.R = vertex_set(rec);
    } else if (key == "s") {
      c.s = size_value(rec);
    } else if (key == "t") {
      c.t = size_value(rec);
    } else if (key == "r") {
      c.r = size_value(rec);
    } else if (key == "T") {
      if (!n) throw fail(rec, 1, "n must come before T");
      Line current;
      bool open = false;
      for (std::size_t i = 1; i < rec.tokens.size(); ++i) {
        std::string_view tok = rec.tokens[i].text;
        bool opens = tok.front() == '[';
        bool closes = tok.back() == ']';
        if (opens == open) throw fail(rec, rec.tokens[i].column, "unbalanced brackets in T");
        if (opens) {
          open = true;
          current = Line{};
          tok.remove_prefix(1);
        }
        if (closes) tok.remove_suffix(1);
        if (!tok.empty()) current.insert(parse_vertex(rec, Token{tok, rec.tokens[i].column}, *n));
        if (closes) {
          open = false;
          c.T.push_back(current);
        }
      }
      if (open) throw fail(rec, rec.tokens.back().column, "unterminated line in T");
    } else if (key == "branch") {
      expect_arity(rec, 2, "branch");
      std::string_view b = rec.tokens[1].text;
      if (b == "t_large") c.branch = CertificateBranch::t_large;
      else if (b == "mt_large") c.branch = CertificateBranch::mt_large;
      else if (b == "final_chain") c.branch = CertificateBranch::final_chain;
      else throw fail(rec, rec.tokens[1].column, "unknown branch");
    } else if (key == "side_condition") {
      c.side_condition = bool_value(rec);
    } else if (key == "chain_applicable") {
      c.chain_applicable = bool_value(rec);
    } else if (key == "inequality") {
      expect_arity(rec, 6, "inequality");
      Inequality q;
      q.name = std::string(rec.tokens[1].text);
      try {
        q.lhs = parse_log_linear(rec.tokens[2].text);
        q.rhs = parse_log_linear(rec.tokens[4].text);
      } catch (const Error&) {
        throw ParseError(ParseErrorKind::bad_rational, rec.line, rec.tokens[2].column, "bad quantity");
      }
      std::string_view rel = rec.tokens[3].text;
      if (rel == "<") q.relation = Relation::lt;
      else if (rel == "<=") q.relation = Relation::le;
      else if (rel == ">=") q.relation = Relation::ge;
      else if (rel == ">") q.relation = Relation::gt;
      else throw fail(rec, rec.tokens[3].column, "unknown relation");
      if (rec.tokens[5].text != "true" && rec.tokens[5].text != "false")
        throw fail(rec, rec.tokens[5].column, "expected true or false");
      q.holds = rec.tokens[5].text == "true";
      c.inequalities.push_back(std::move(q));
    } else if (key == "end") {
      ended = true;
    } else {
      throw fail(rec, rec.tokens[0].column, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!n) throw ParseError(ParseErrorKind::bad_certificate, header_line, 1, "missing n");
  if (!ended) throw ParseError(ParseErrorKind::bad_certificate, header_line, 1, "missing end marker");
  c.hypergraph = Hypergraph3(*n, hedges);
  return c;
}

}  // namespace detail

}  // namespace hyperlines
