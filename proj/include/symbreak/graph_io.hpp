#pragma once

#include <string>
#include <string_view>

#include "symbreak/graph.hpp"

namespace symbreak::io {

enum class GraphFormat { kEdgeList, kJson, kDot };

/// Parses "edgelist", "json" or "dot". Throws kBadParams otherwise.
GraphFormat parse_format(std::string_view name);

// Edge-list text: '#' comment lines, a header "n m", then m lines "u v".
// Roles are written as "# role <name> <index>" comments and read back.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

// {"n": int, "edges": [[u,v],...], "roles": {name: index}}
std::string to_json(const Graph& g);
Graph from_json(std::string_view text);

/// Write-only; roles become vertex labels.
std::string to_dot(const Graph& g);

std::string serialize(const Graph& g, GraphFormat format);

/// Sniffs JSON (first non-space char '{') versus edge list.
Graph parse_graph(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace symbreak::io
