// Copyright 2026 The Supertoken Authors
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

#ifndef SUPERTOKEN_GRAPH_IO_HPP_
#define SUPERTOKEN_GRAPH_IO_HPP_

#include <string>

#include "supertoken/graph.hpp"

namespace supertoken {

// Canonical JSON: {"name": str, "n": int, "labels": [str], "edges": [[u,v],...]}
// with u < v and edges sorted, written compactly on one line in that key order.
// "labels" is optional on input.
std::string ToJson(const Graph& g);
Graph FromJson(const std::string& text);

// Undirected DOT with a label attribute per vertex. FromDot accepts the
// subset that ToDot writes: `graph NAME {`, `  v [label="..."];`, `  u -- v;`.
std::string ToDot(const Graph& g);
Graph FromDot(const std::string& text);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& contents);

// Dispatches on the file extension (.dot, otherwise JSON).
Graph LoadGraph(const std::string& path);

}  // namespace supertoken

#endif  // SUPERTOKEN_GRAPH_IO_HPP_
