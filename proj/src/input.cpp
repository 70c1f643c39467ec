#include "branecharge/input.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <string>

#include <json.hpp>

#include "branecharge/error.hpp"

namespace branecharge {

namespace {

using nlohmann::json;

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::vector<std::int64_t> integer_array(const json& node, const std::string& field) {
  if (!node.is_array()) throw Error(Errc::ParseError, "field '" + field + "' must be an array");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (!node[i].is_number_integer()) {
      throw Error(Errc::ParseError, "field '" + field + "[" + std::to_string(i) + "]' must be an integer");
    }
    out.push_back(node[i].get<std::int64_t>());
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::int64_t> to_int(std::string_view tok) {
  std::int64_t v = 0;
  const char* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return v;
}

bool blank(std::string_view line) { return tokens(line).empty(); }

}  // namespace

InputDocument parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, "malformed JSON at " + line_col(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  if (!doc.is_object()) throw Error(Errc::ParseError, "top-level JSON value must be an object");

  InputDocument out;
  out.format = InputFormat::Json;
  if (!doc.contains("dim")) throw Error(Errc::ParseError, "missing field 'dim'");
  if (!doc["dim"].is_number_integer() || doc["dim"].get<std::int64_t>() < 1) {
    throw Error(Errc::ParseError, "field 'dim' must be a positive integer");
  }
  out.dim = doc["dim"].get<int>();
  if (!doc.contains("vertices")) throw Error(Errc::ParseError, "missing field 'vertices'");
  const auto& verts = doc["vertices"];
  if (!verts.is_array()) throw Error(Errc::ParseError, "field 'vertices' must be an array");
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const std::string field = "vertices[" + std::to_string(i) + "]";
    auto row = integer_array(verts[i], field);
    if (static_cast<int>(row.size()) != out.dim) {
      throw Error(Errc::DimensionMismatch, "field '" + field + "' has " + std::to_string(row.size()) +
                                               " entries, expected dim = " + std::to_string(out.dim));
    }
    out.points.push_back(std::move(row));
  }
  if (static_cast<int>(out.points.size()) < out.dim + 1) {
    throw Error(Errc::ShapeMismatch, "need at least dim + 1 = " + std::to_string(out.dim + 1) + " vertices, got " +
                                         std::to_string(out.points.size()));
  }
  if (doc.contains("divisor")) out.divisor = integer_array(doc["divisor"], "divisor");
  return out;
}

InputDocument parse_matrix(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t at = 0;
  while (at < lines.size() && blank(lines[at])) ++at;
  if (at == lines.size()) throw Error(Errc::ParseError, "empty matrix document");

  const auto head = tokens(lines[at]);
  const auto a = head.size() >= 1 ? to_int(head[0]) : std::nullopt;
  const auto b = head.size() >= 2 ? to_int(head[1]) : std::nullopt;
  if (!a || !b || *a < 1 || *b < 1) {
    throw Error(Errc::ParseError, "line " + std::to_string(at + 1) + ": header must start with two positive integers");
  }
  ++at;

  const bool columns = *a <= *b;
  InputDocument out;
  out.format = InputFormat::Matrix;
  out.dim = static_cast<int>(columns ? *a : *b);
  const auto num_points = static_cast<std::size_t>(columns ? *b : *a);
  out.points.assign(num_points, IntVector(out.dim));

  std::int64_t row = 0;
  for (; at < lines.size() && row < *a; ++at) {
    const auto toks = tokens(lines[at]);
    if (toks.empty()) continue;
    if (static_cast<std::int64_t>(toks.size()) != *b) {
      throw Error(Errc::ShapeMismatch, "line " + std::to_string(at + 1) + ": expected " + std::to_string(*b) +
                                           " integers, got " + std::to_string(toks.size()));
    }
    for (std::size_t c = 0; c < toks.size(); ++c) {
      const auto v = to_int(toks[c]);
      if (!v) {
        throw Error(Errc::ParseError, "line " + std::to_string(at + 1) + ": '" + std::string(toks[c]) +
                                          "' is not an integer");
      }
      if (columns) {
        out.points[c][row] = *v;
      } else {
        out.points[row][c] = *v;
      }
    }
    ++row;
  }
  if (row < *a) {
    throw Error(Errc::ShapeMismatch, "matrix body truncated: " + std::to_string(row) + " of " + std::to_string(*a) +
                                         " rows present");
  }
  for (; at < lines.size(); ++at) {
    if (!blank(lines[at])) {
      throw Error(Errc::ShapeMismatch, "line " + std::to_string(at + 1) + ": unexpected content after the matrix");
    }
  }
  return out;
}

InputDocument parse_document(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_json(text) : parse_matrix(text);
  }
  throw Error(Errc::ParseError, "empty input document");
}

}  // namespace branecharge
