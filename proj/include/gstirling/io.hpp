#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gstirling/chordal.hpp"
#include "gstirling/errors.hpp"
#include "gstirling/network.hpp"
#include "gstirling/rational.hpp"
#include "gstirling/rook.hpp"
#include "gstirling/tri_matrix.hpp"

namespace gstirling {

/// Comma-separated rationals ("0,1/2,-1.5"). The empty string is the empty list.
inline std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t stop = comma == std::string_view::npos ? text.size() : comma;
    try {
      out.push_back(Rational::parse(text.substr(start, stop - start)));
    } catch (const ParseError& err) {
      throw ParseError("bad list element " + std::to_string(out.size() + 1) + ": " +
                           std::string(text.substr(start, stop - start)),
                       start + err.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

/// Comma-separated integers.
inline std::vector<long> parse_integer_list(std::string_view text) {
  std::vector<long> out;
  std::size_t offset = 0;
  for (const Rational& r : parse_rational_list(text)) {
    if (!r.is_integer() || !r.get().get_num().fits_slong_p()) {
      throw ParseError("expected an integer, got " + r.to_string(), offset);
    }
    out.push_back(r.get().get_num().get_si());
    offset = text.find(',', offset) + 1;
  }
  return out;
}

namespace detail {

inline std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  std::string s = hash == std::string::npos ? line : line.substr(0, hash);
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline long parse_long_token(const std::string& token, std::size_t line_no) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size()) throw UsageError("line " + std::to_string(line_no) + ": expected an integer, got '" + token + "'");
  return value;
}

}  // namespace detail

/// Graph text: "n <count>" then one "u v" edge per line, 1-based, '#'
/// comments. The vertex order is 1..n.
inline Graph parse_graph(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<Graph> graph;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = detail::strip_comment(raw);
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (!graph) {
      if (tokens.size() != 2 || tokens[0] != "n") throw UsageError("line " + std::to_string(line_no) + ": expected 'n <count>'");
      const long n = detail::parse_long_token(tokens[1], line_no);
      if (n < 0) throw UsageError("line " + std::to_string(line_no) + ": vertex count must be non-negative");
      graph.emplace(static_cast<std::size_t>(n));
      continue;
    }
    if (tokens.size() != 2) throw UsageError("line " + std::to_string(line_no) + ": expected 'u v'");
    const long u = detail::parse_long_token(tokens[0], line_no);
    const long v = detail::parse_long_token(tokens[1], line_no);
    if (u < 1 || v < 1) throw UsageError("line " + std::to_string(line_no) + ": vertices are numbered from 1");
    try {
      graph->add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    } catch (const PreconditionError& err) {
      throw UsageError("line " + std::to_string(line_no) + ": " + err.what());
    }
  }
  if (!graph) throw UsageError("graph input is missing the 'n <count>' header");
  return *graph;
}

/// Board file: one column height per line, '#' comments.
inline FerrersBoard parse_board(std::istream& in) {
  std::vector<long> heights;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = detail::strip_comment(raw);
    if (line.empty()) continue;
    heights.push_back(detail::parse_long_token(line, line_no));
  }
  try {
    return FerrersBoard(std::move(heights));
  } catch (const PreconditionError& err) {
    throw UsageError(err.what());
  }
}

/// Lower triangle as an aligned text table with a row/column header.
inline std::string render_table(const TriMatrix& mat) {
  const std::size_t n = mat.size();
  std::vector<std::vector<std::string>> cells(n + 1);
  std::vector<std::size_t> width(n + 2, 0);
  width[0] = std::string("m\\k").size();
  for (std::size_t m = 0; m <= n; ++m) {
    width[0] = std::max(width[0], std::to_string(m).size());
    for (std::size_t k = 0; k <= m; ++k) {
      cells[m].push_back(mat(m, k).to_string());
      width[k + 1] = std::max({width[k + 1], cells[m].back().size(), std::to_string(k).size()});
    }
  }
  std::ostringstream os;
  auto pad = [&](const std::string& s, std::size_t w) { os << std::string(w - s.size(), ' ') << s; };
  pad("m\\k", width[0]);
  for (std::size_t k = 0; k <= n; ++k) {
    os << "  ";
    pad(std::to_string(k), width[k + 1]);
  }
  os << '\n';
  for (std::size_t m = 0; m <= n; ++m) {
    pad(std::to_string(m), width[0]);
    for (std::size_t k = 0; k <= m; ++k) {
      os << "  ";
      pad(cells[m][k], width[k + 1]);
    }
    os << '\n';
  }
  return os.str();
}

/// One "m,k,value" line per lower-triangular entry, after a header line.
inline std::string render_csv(const TriMatrix& mat) {
  std::ostringstream os;
  os << "m,k,value\n";
  for (std::size_t m = 0; m <= mat.size(); ++m) {
    for (std::size_t k = 0; k <= m; ++k) os << m << ',' << k << ',' << mat(m, k).to_string() << '\n';
  }
  return os.str();
}

/// One row per line, space-separated; with `labels`, each entry reads
/// "a<i>-e<j>=value".
inline std::string render_weight_array(const WeightArray& wa, bool labels) {
  if (labels && !wa.has_labels()) throw PreconditionError("weight array carries no (a,e) labels");
  std::ostringstream os;
  for (std::size_t m = 1; m <= wa.size(); ++m) {
    for (std::size_t k = 1; k <= m; ++k) {
      if (k > 1) os << ' ';
      if (labels) {
        const WeightLabel& l = wa.label(m, k);
        os << 'a' << l.a_index << "-e" << l.e_index << '=';
      }
      os << wa(m, k).to_string();
    }
    os << '\n';
  }
  return os.str();
}

/// Inverse of render_weight_array without labels.
inline WeightArray parse_weight_array(std::istream& in) {
  std::vector<std::vector<Rational>> rows;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = detail::strip_comment(raw);
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::vector<Rational> row;
    for (std::string t; fields >> t;) {
      const auto eq = t.find('=');
      try {
        row.push_back(Rational::parse(eq == std::string::npos ? t : t.substr(eq + 1)));
      } catch (const ParseError& err) {
        throw UsageError("line " + std::to_string(line_no) + ": " + err.what());
      }
    }
    rows.push_back(std::move(row));
  }
  try {
    return WeightArray::from_rows(rows);
  } catch (const PreconditionError& err) {
    throw UsageError(err.what());
  }
}

}  // namespace gstirling
