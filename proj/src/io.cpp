#include "graphcurv/io.hpp"

#include <cctype>
#include <charconv>
#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "graphcurv/errors.hpp"

namespace graphcurv {
namespace {

using nlohmann::json;

void position_of(std::string_view text, std::size_t byte, std::size_t& line, std::size_t& column) {
  line = 1;
  column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::uint64_t parse_id(const Token& t, std::size_t line_no) {
  std::uint64_t v = 0;
  const char* end = t.text.data() + t.text.size();
  const auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
  if (ec != std::errc{} || ptr != end || v > 0xfffffffeULL) {
    throw ParseError("expected a vertex id, got '" + std::string(t.text) + "'", line_no, t.column);
  }
  return v;
}

Graph parse_edge_list(std::string_view source) {
  std::vector<Edge> edges;
  std::optional<std::uint64_t> declared;
  std::uint64_t max_id = 0;
  bool any = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= source.size()) {
    const auto nl = source.find('\n', pos);
    std::string_view line = source.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? source.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;
    if (tokens.front().text == "n") {
      if (tokens.size() != 2) throw ParseError("header must be 'n <count>'", line_no, tokens.front().column);
      if (declared) throw ParseError("duplicate 'n' header", line_no, tokens.front().column);
      declared = parse_id(tokens[1], line_no);
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError("expected two vertex ids per line", line_no,
                       tokens.size() > 2 ? tokens[2].column : tokens.front().column);
    }
    const std::uint64_t u = parse_id(tokens[0], line_no);
    const std::uint64_t v = parse_id(tokens[1], line_no);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no, tokens[0].column);
    max_id = std::max({max_id, u, v});
    any = true;
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  const std::uint64_t inferred = any ? max_id + 1 : 0;
  if (declared && *declared < inferred) {
    throw ParseError("vertex id " + std::to_string(max_id) + " exceeds declared order " +
                         std::to_string(*declared),
                     0, 0);
  }
  return Graph::from_edges(declared ? *declared : inferred, edges);
}

Graph parse_json(std::string_view source) {
  json doc;
  try {
    doc = json::parse(source.begin(), source.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 0, column = 0;
    position_of(source, e.byte == 0 ? 0 : e.byte - 1, line, column);
    throw ParseError(e.what(), line, column);
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw ParseError("expected an object with keys \"n\" and \"edges\"", 1, 1);
  }
  const json& n = doc.at("n");
  if (!n.is_number_unsigned() && !(n.is_number_integer() && n.get<std::int64_t>() >= 0)) {
    throw ParseError("\"n\" must be a nonnegative integer", 1, 1);
  }
  const auto order = n.get<std::uint64_t>();
  const json& list = doc.at("edges");
  if (!list.is_array()) throw ParseError("\"edges\" must be an array", 1, 1);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& e = list[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw ParseError("edge " + std::to_string(i) + " must be a pair of integers", 1, 1);
    }
    const auto u = e[0].get<std::int64_t>();
    const auto v = e[1].get<std::int64_t>();
    if (u < 0 || v < 0 || static_cast<std::uint64_t>(u) >= order || static_cast<std::uint64_t>(v) >= order) {
      throw ParseError("edge " + std::to_string(i) + " references a vertex outside 0..n-1", 1, 1);
    }
    if (u == v) throw ParseError("edge " + std::to_string(i) + " is a self-loop", 1, 1);
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Graph::from_edges(order, edges);
}

}  // namespace

GraphFormat parse_format(std::string_view name) {
  if (name == "edge_list") return GraphFormat::edge_list;
  if (name == "json") return GraphFormat::json;
  throw InputError("unknown graph format '" + std::string(name) + "'");
}

Graph parse_graph(std::string_view source, GraphFormat format) {
  return format == GraphFormat::json ? parse_json(source) : parse_edge_list(source);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  if (format == GraphFormat::json) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return json{{"n", g.order()}, {"edges", edges}}.dump() + "\n";
  }
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  const bool is_json = first != std::string::npos && text[first] == '{';
  return parse_graph(text, is_json ? GraphFormat::json : GraphFormat::edge_list);
}

}  // namespace graphcurv
