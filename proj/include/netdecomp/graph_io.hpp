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

#ifndef NETDECOMP_GRAPH_IO_HPP_
#define NETDECOMP_GRAPH_IO_HPP_

#include <iosfwd>
#include <json.hpp>

#include "netdecomp/graph.hpp"

namespace netdecomp {

// JSON: {"n": int, "edges": [[u, v], ...], "ids": [int, ...]}; "ids" optional.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Edge list text: one "u v" pair per line, '#' starts a comment. The node
// count is one more than the largest endpoint, or the value of a "# n=K"
// comment when larger.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// Reads either format; JSON is recognized by a leading '{'.
Graph read_graph(std::istream& in);

}  // namespace netdecomp

#endif  // NETDECOMP_GRAPH_IO_HPP_
