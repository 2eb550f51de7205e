// Copyright 2026 The netdecomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netdecomp/graph_io.hpp"

#include <istream>
#include <iterator>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace netdecomp {

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.node_count();
  auto& edges = j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  bool default_ids = true;
  for (Node v = 0; v < g.node_count(); ++v) default_ids = default_ids && g.id(v) == v;
  if (!default_ids) j["ids"] = g.ids();
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    auto n = j.at("n").get<std::size_t>();
    std::vector<std::pair<Node, Node>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw std::runtime_error("edge must be a [u, v] pair");
      auto u = e[0].get<std::int64_t>();
      auto v = e[1].get<std::int64_t>();
      if (u < 0 || v < 0) throw std::invalid_argument("negative edge endpoint");
      edges.emplace_back(static_cast<Node>(u), static_cast<Node>(v));
    }
    std::optional<std::vector<NodeIdent>> ids;
    if (j.contains("ids")) ids = j["ids"].get<std::vector<NodeIdent>>();
    return Graph::from_edge_list(n, edges, std::move(ids));
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed graph JSON: ") + e.what());
  }
}

Graph read_edge_list(std::istream& in) {
  std::vector<std::pair<Node, Node>> edges;
  std::size_t n = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      // "# n=K" declares the node count, so isolated trailing nodes survive.
      std::istringstream comment(line.substr(hash + 1));
      std::string token;
      while (comment >> token) {
        if (token.rfind("n=", 0) == 0) n = std::max<std::size_t>(n, std::stoull(token.substr(2)));
      }
      line.erase(hash);
    }
    std::istringstream fields(line);
    long long u = 0, v = 0;
    if (!(fields >> u)) continue;
    if (!(fields >> v) || u < 0 || v < 0) {
      throw std::runtime_error("malformed edge on line " + std::to_string(line_no));
    }
    std::string extra;
    if (fields >> extra) throw std::runtime_error("trailing text on line " + std::to_string(line_no));
    edges.emplace_back(static_cast<Node>(u), static_cast<Node>(v));
    n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(u, v)) + 1);
  }
  if (n == 0) throw std::runtime_error("edge list contains no nodes");
  return Graph::from_edge_list(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# n=" << g.node_count() << " m=" << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_graph(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error(std::string("malformed graph JSON: ") + e.what());
    }
    // Decomposition outputs embed their input graph.
    if (j.contains("graph") && !j.contains("n")) return graph_from_json(j["graph"]);
    return graph_from_json(j);
  }
  std::istringstream lines(text);
  return read_edge_list(lines);
}

}  // namespace netdecomp
