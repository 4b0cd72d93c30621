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

#include "supertoken/graph_io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "json.hpp"
#include "supertoken/error.hpp"

namespace supertoken {

using nlohmann::ordered_json;

std::string ToJson(const Graph& g) {
  ordered_json doc;
  doc["name"] = g.name();
  doc["n"] = g.num_vertices();
  doc["labels"] = g.labels();
  ordered_json edges = ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  return doc.dump() + "\n";
}

Graph FromJson(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    Fail(ErrorKind::kInvalidParameter, std::string("graph JSON: ") + e.what());
  }
  Require(doc.is_object() && doc.contains("n") && doc.contains("edges"),
          "graph JSON needs \"n\" and \"edges\"");
  try {
    const int n = doc.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      Require(e.is_array() && e.size() == 2, "graph JSON edge must be [u, v]");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::vector<std::string> labels;
    if (doc.contains("labels"))
      labels = doc.at("labels").get<std::vector<std::string>>();
    std::string name = doc.value("name", std::string{});
    return Graph::FromEdges(n, edges, std::move(labels), std::move(name));
  } catch (const ordered_json::exception& e) {
    Fail(ErrorKind::kInvalidParameter, std::string("graph JSON: ") + e.what());
  }
}

namespace {

std::string Escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string Unescape(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) ++i;
    out += s[i];
  }
  return out;
}

}  // namespace

std::string ToDot(const Graph& g) {
  std::ostringstream out;
  out << "graph \"" << Escape(g.name()) << "\" {\n";
  for (int v = 0; v < g.num_vertices(); ++v)
    out << "  " << v << " [label=\"" << Escape(g.label(v)) << "\"];\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

Graph FromDot(const std::string& text) {
  static const std::regex header(R"re(^\s*graph\s+(?:"((?:[^"\\]|\\.)*)"|(\w*))\s*\{\s*$)re");
  static const std::regex vertex(R"re(^\s*(\d+)\s*\[label="((?:[^"\\]|\\.)*)"\];\s*$)re");
  static const std::regex edge(R"re(^\s*(\d+)\s*--\s*(\d+)\s*;\s*$)re");
  static const std::regex close(R"re(^\s*\}\s*$)re");

  std::istringstream in(text);
  std::string line;
  std::string name;
  bool opened = false;
  bool closed = false;
  std::vector<std::pair<int, std::string>> vertices;
  std::vector<Edge> edges;
  std::smatch m;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!opened) {
      Require(std::regex_match(line, m, header), "DOT: expected graph header");
      name = m[1].matched ? Unescape(m[1].str()) : m[2].str();
      opened = true;
    } else if (std::regex_match(line, m, vertex)) {
      vertices.emplace_back(std::stoi(m[1].str()), Unescape(m[2].str()));
    } else if (std::regex_match(line, m, edge)) {
      edges.emplace_back(std::stoi(m[1].str()), std::stoi(m[2].str()));
    } else if (std::regex_match(line, close)) {
      closed = true;
      break;
    } else {
      Fail(ErrorKind::kInvalidParameter, "DOT: unsupported line '" + line + "'");
    }
  }
  Require(opened && closed, "DOT: unterminated graph");
  const int n = static_cast<int>(vertices.size());
  std::vector<std::string> labels(n);
  std::vector<char> seen(n, 0);
  for (auto& [v, label] : vertices) {
    Require(v >= 0 && v < n && !seen[v], "DOT: vertex ids must be 0..n-1");
    seen[v] = 1;
    labels[v] = std::move(label);
  }
  return Graph::FromEdges(n, edges, std::move(labels), std::move(name));
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  Require(in.good(), "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  Require(out.good(), "cannot write '" + path + "'");
  out << contents;
}

Graph LoadGraph(const std::string& path) {
  const std::string text = ReadFile(path);
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".dot") == 0)
    return FromDot(text);
  return FromJson(text);
}

}  // namespace supertoken
