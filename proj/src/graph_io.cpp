#include "symbreak/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <sstream>

#include "json.hpp"
#include "symbreak/error.hpp"

namespace symbreak::io {

using nlohmann::json;

GraphFormat parse_format(std::string_view name) {
  if (name == "edgelist") return GraphFormat::kEdgeList;
  if (name == "json") return GraphFormat::kJson;
  if (name == "dot") return GraphFormat::kDot;
  throw Error(ErrorCode::kBadParams, "unknown graph format '" + std::string(name) + "'");
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  for (const auto& [name, v] : g.roles()) out << "# role " << name << ' ' << v << '\n';
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

namespace {

long long parse_int(const std::string& tok, int line_no) {
  try {
    std::size_t used = 0;
    long long value = std::stoll(tok, &used);
    if (used != tok.size() || value < 0) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(line_no) + ": expected nonnegative integer, got '" + tok + "'");
  }
}

}  // namespace

Graph from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  RoleMap roles;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first[0] == '#') {
      std::string word = first == "#" ? "" : first.substr(1);
      if (word.empty()) ls >> word;
      if (word == "role") {
        std::string name;
        std::string idx;
        if (!(ls >> name >> idx)) {
          throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": malformed role");
        }
        roles[name] = static_cast<Vertex>(parse_int(idx, line_no));
      }
      continue;
    }
    std::string second;
    std::string extra;
    if (!(ls >> second) || (ls >> extra)) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ": expected two integers");
    }
    auto a = parse_int(first, line_no);
    auto b = parse_int(second, line_no);
    if (!have_header) {
      n = static_cast<std::size_t>(a);
      m = static_cast<std::size_t>(b);
      have_header = true;
    } else {
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  }
  if (!have_header) throw Error(ErrorCode::kParseError, "missing 'n m' header");
  if (edges.size() != m) {
    throw Error(ErrorCode::kParseError, "header declares " + std::to_string(m) + " edges, found " +
                                            std::to_string(edges.size()));
  }
  return Graph::build(n, edges, std::move(roles));
}

std::string to_json(const Graph& g) {
  json j;
  j["n"] = g.order();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  json roles = json::object();
  for (const auto& [name, v] : g.roles()) roles[name] = v;
  j["roles"] = std::move(roles);
  return j.dump() + "\n";
}

Graph from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  try {
    auto n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::kParseError, "edge must be [u, v]");
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    RoleMap roles;
    if (j.contains("roles")) {
      for (const auto& [name, v] : j["roles"].items()) roles[name] = v.get<Vertex>();
    }
    return Graph::build(n, edges, std::move(roles));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

std::string to_dot(const Graph& g) {
  std::vector<std::string> names(g.order());
  for (const auto& [name, v] : g.roles()) {
    if (!names[v].empty()) names[v] += ",";
    names[v] += name;
  }
  std::ostringstream out;
  out << "graph G {\n";
  for (std::size_t v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (!names[v].empty()) out << " [xlabel=\"" << names[v] << "\"]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string serialize(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::kEdgeList: return to_edge_list(g);
    case GraphFormat::kJson: return to_json(g);
    case GraphFormat::kDot: return to_dot(g);
  }
  return {};
}

Graph parse_graph(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? from_json(text) : from_edge_list(text);
  }
  throw Error(ErrorCode::kParseError, "empty graph input");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error(ErrorCode::kIoError, "write failed for '" + path + "'");
}

}  // namespace symbreak::io
