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

// Command-line front end.
//
//   supertoken build cycle 7 --construction supertoken -k 2 --out f2c7.json
//   supertoken invariants f2c7.json --which alpha,chi
//   supertoken bound table3 --c-max 7 --k-max 9 --format csv
//   supertoken spectrum f2c7.json --format csv
//   supertoken verify all
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or invalid parameter,
// 3 guard exceeded.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "supertoken/bounds.hpp"
#include "supertoken/error.hpp"
#include "supertoken/graph.hpp"
#include "supertoken/graph_io.hpp"
#include "supertoken/invariants.hpp"
#include "supertoken/spectral.hpp"
#include "supertoken/tokens.hpp"
#include "supertoken/verify.hpp"

namespace {

using namespace supertoken;
using ojson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

void Emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    WriteFile(out_path, text);
  }
}

std::string Fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

int Param(const std::vector<std::string>& params, std::size_t i, const char* what) {
  Require(i < params.size(), std::string("missing parameter: ") + what);
  try {
    std::size_t used = 0;
    const int v = std::stoi(params[i], &used);
    Require(used == params[i].size(), std::string("not an integer: ") + params[i]);
    return v;
  } catch (const std::logic_error&) {
    Fail(ErrorKind::kInvalidParameter, std::string("not an integer: ") + params[i]);
  }
}

Graph MakeFamily(const std::string& family, const std::vector<std::string>& params) {
  if (family == "cycle") return MakeCycle(Param(params, 0, "n"));
  if (family == "path") return MakePath(Param(params, 0, "n"));
  if (family == "complete") return MakeComplete(Param(params, 0, "n"));
  if (family == "empty") return MakeEmpty(Param(params, 0, "n"));
  if (family == "hypercube") return MakeHypercube(Param(params, 0, "d"));
  if (family == "cycle-power")
    return MakeCyclePower(Param(params, 0, "n"), Param(params, 1, "d"));
  if (family == "complete-bipartite")
    return MakeCompleteBipartite(Param(params, 0, "a"), Param(params, 1, "b"));
  if (family == "star") return MakeStar(Param(params, 0, "leaves"));
  if (family == "petersen") return MakePetersen();
  if (family == "file") {
    Require(!params.empty(), "missing parameter: path");
    return LoadGraph(params[0]);
  }
  Fail(ErrorKind::kInvalidParameter, "unknown family '" + family + "'");
}

std::string GraphOutput(const Graph& g, const std::string& format) {
  if (format == "dot") return ToDot(g);
  Require(format == "json", "graph output format must be json or dot");
  return ToJson(g);
}

ojson CertificateJson(const Certificate& c) {
  ojson j;
  j["kind"] = CertificateKindName(c.kind);
  j["value"] = c.value;
  switch (c.kind) {
    case CertificateKind::kColoring:
      j["colors"] = c.colors;
      break;
    case CertificateKind::kMatching: {
      j["matching"] = ojson::array();
      for (auto [u, v] : c.matching) j["matching"].push_back({u, v});
      break;
    }
    default:
      j["vertices"] = c.vertices;
  }
  return j;
}

VertexPartition LoadPartition(const std::string& path, int n) {
  const std::string text = ReadFile(path);
  std::vector<std::vector<int>> classes;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      Fail(ErrorKind::kInvalidParameter, "bad partition file: " + std::string(e.what()));
    }
    const auto& list = doc.is_object() ? doc.at("classes") : doc;
    classes = list.get<std::vector<std::vector<int>>>();
  } else {
    // One class per line, whitespace separated.
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
      std::istringstream row(line);
      std::vector<int> cls;
      for (int v; row >> v;) cls.push_back(v);
      if (!cls.empty()) classes.push_back(std::move(cls));
    }
  }
  return VertexPartition::FromClasses(n, std::move(classes));
}

std::string SpectrumOutput(const Spectrum& s, const std::string& format,
                           const std::string& kind) {
  if (format == "csv") {
    std::string out = "index,eigenvalue\n";
    for (int i = 0; i < s.size(); ++i)
      out += std::to_string(i) + "," + Fmt(s.eigenvalues()[i]) + "\n";
    return out;
  }
  Require(format == "json", "spectrum output format must be json or csv");
  const Inertia in = s.inertia();
  ojson j;
  j["kind"] = kind;
  j["size"] = s.size();
  j["zero_tol"] = s.zero_tol();
  j["eigenvalues"] = s.eigenvalues();
  j["inertia"] = {{"negative", in.negative}, {"zero", in.zero}, {"positive", in.positive}};
  return j.dump(2) + "\n";
}

ojson PartitionJson(const ColorClassPartition& p) {
  ojson groups = ojson::array();
  for (const auto& g : p.groups) groups.push_back({{"colors", g.colors}, {"tokens", g.tokens}});
  return {{"k", p.k}, {"class_sizes", p.class_sizes()}, {"groups", groups}};
}

// "0:2,1:1;2:3" -> groups {0 gets 2, 1 gets 1}, {2 gets 3}.
std::vector<ColorGroup> ParseGroups(const std::string& spec) {
  std::vector<ColorGroup> groups;
  std::istringstream blocks(spec);
  for (std::string block; std::getline(blocks, block, ';');) {
    ColorGroup group;
    std::istringstream items(block);
    for (std::string item; std::getline(items, item, ',');) {
      const auto colon = item.find(':');
      Require(colon != std::string::npos, "group item must be colour:tokens");
      group.colors.push_back(Param({item.substr(0, colon)}, 0, "colour"));
      group.tokens.push_back(Param({item.substr(colon + 1)}, 0, "tokens"));
    }
    groups.push_back(std::move(group));
  }
  return groups;
}

std::string Rows(const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows,
                 const std::string& format) {
  if (format == "csv") {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
    out += "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + row[i];
      out += "\n";
    }
    return out;
  }
  Require(format == "json", "output format must be json or csv");
  ojson list = ojson::array();
  for (const auto& row : rows) {
    ojson item;
    for (std::size_t i = 0; i < header.size(); ++i) {
      // Numbers stay numbers in JSON.
      try {
        std::size_t used = 0;
        const double v = std::stod(row[i], &used);
        if (used == row[i].size() && row[i].find_first_of(".eE") == std::string::npos &&
            row[i].size() < 18) {
          item[header[i]] = std::stoll(row[i]);
        } else if (used == row[i].size()) {
          item[header[i]] = v;
        } else {
          item[header[i]] = row[i];
        }
      } catch (const std::logic_error&) {
        item[header[i]] = row[i];
      }
    }
    list.push_back(std::move(item));
  }
  return list.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Token and supertoken graph toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "supertoken 1.0.0");

  std::string out_path;
  std::string format;
  bool force = false;

  // build
  auto* build = app.add_subcommand("build", "Construct a graph and write it as JSON or DOT");
  std::string family;
  std::vector<std::string> params;
  std::string construction = "base";
  int k = 2;
  int p = 0;
  build->add_option("family", family,
                    "cycle|path|complete|empty|hypercube|cycle-power|complete-bipartite|"
                    "star|petersen|file")
      ->required();
  build->add_option("params", params, "Family parameters");
  build->add_option("--construction", construction,
                    "base|token|supertoken|strong|cartesian|augmented")
      ->capture_default_str();
  build->add_option("-k", k, "Number of tokens or factors")->capture_default_str();
  build->add_option("-p", p, "Number of augmented layers (cycle family only)")
      ->capture_default_str();
  build->add_option("--out", out_path, "Output file (default stdout)");
  build->add_option("--format", format, "json|dot (default json)");
  build->add_flag("--force", force, "Lift size guards");

  // invariants
  auto* inv = app.add_subcommand("invariants", "Exact invariants with certificates");
  std::string graph_path;
  std::string which = "all";
  inv->add_option("graph", graph_path, "Graph file (.json or .dot)")->required();
  inv->add_option("--which", which,
                  "Comma list of alpha,omega,chi,metric-dimension,diameter,radius,all")
      ->capture_default_str();
  inv->add_option("--out", out_path, "Output file");
  inv->add_flag("--force", force, "Lift size guards");

  // bound
  auto* bound = app.add_subcommand("bound", "Closed-form bounds");
  bound->require_subcommand(1);
  auto* b_partition = bound->add_subcommand("partition", "Colour-class partition bound");
  std::string groups_spec;
  b_partition->add_option("graph", graph_path, "Graph file")->required();
  b_partition->add_option("-k", k, "Number of tokens")->required();
  b_partition->add_option("--groups", groups_spec,
                          "Explicit grouping, e.g. \"0:2,1:1;2:3\"; default: best grouping");
  b_partition->add_flag("--force", force, "Lift size guards");
  auto* b_bip = bound->add_subcommand("bipartite", "Bipartite lower bound");
  int c1 = 0, c2 = 0;
  b_bip->add_option("c1", c1)->required();
  b_bip->add_option("c2", c2)->required();
  b_bip->add_option("k", k)->required();
  auto* b_2cycle = bound->add_subcommand("alpha-2cycle", "alpha of the 2-supertoken graph of C_n");
  int n = 0;
  b_2cycle->add_option("n", n)->required();
  auto* b_aug = bound->add_subcommand("alpha-augmented", "alpha of F_2^p(C_n)");
  b_aug->add_option("n", n)->required();
  b_aug->add_option("p", p)->required();
  auto* b_rate = bound->add_subcommand("rate", "log2(alpha)/k");
  std::string alpha_text;
  b_rate->add_option("alpha", alpha_text)->required();
  b_rate->add_option("k", k)->required();
  auto* b_table3 = bound->add_subcommand("table3", "Bipartite bound table for even cycles");
  int c_max = 7, k_max = 9;
  b_table3->add_option("--c-max", c_max)->capture_default_str();
  b_table3->add_option("--k-max", k_max)->capture_default_str();
  for (auto* sub : {b_partition, b_bip, b_2cycle, b_aug, b_rate, b_table3}) {
    sub->add_option("--out", out_path, "Output file");
    sub->add_option("--format", format, "json|csv (default json)");
  }

  // spectrum
  auto* spec = app.add_subcommand("spectrum", "Adjacency, Laplacian or quotient spectrum");
  bool laplacian = false;
  std::string quotient_path;
  double zero_tol = -1;
  spec->add_option("graph", graph_path, "Graph file")->required();
  spec->add_flag("--laplacian", laplacian, "Laplacian instead of adjacency");
  spec->add_option("--quotient", quotient_path,
                   "Partition file; prints the spectrum of the quotient matrix");
  spec->add_option("--zero-tol", zero_tol, "Threshold for the inertia (default 1e-8 max(1, rho))");
  spec->add_option("--out", out_path, "Output file");
  spec->add_option("--format", format, "json|csv (default json)");
  spec->add_flag("--force", force, "Lift size guards");

  // verify
  auto* ver = app.add_subcommand("verify", "Regenerate the published tables and claims");
  std::vector<std::string> case_ids;
  double tolerance = -1;
  bool list_cases = false;
  ver->add_option("cases", case_ids, "Case ids or 'all' (default all)");
  ver->add_option("--tolerance", tolerance, "Tolerance for printed decimals");
  ver->add_flag("--list", list_cases, "List case ids");
  ver->add_option("--out", out_path, "Output file");
  ver->add_option("--format", format, "text|json (default text)");

  // rate
  auto* rate = app.add_subcommand("rate", "Information rate per symbol of F_k(G)");
  bool exact = false;
  rate->add_option("graph", graph_path, "Graph file")->required();
  rate->add_option("-k", k, "Number of tokens")->required();
  rate->add_flag("--exact", exact, "Use exact alpha(F_k(G)) instead of the partition bound");
  rate->add_option("--out", out_path, "Output file");
  rate->add_flag("--force", force, "Lift size guards");

  // color-lift
  auto* lift = app.add_subcommand("color-lift", "Lift an optimal colouring of G to F_k(G)");
  lift->add_option("graph", graph_path, "Graph file")->required();
  lift->add_option("-k", k, "Number of tokens")->required();
  lift->add_option("--out", out_path, "Output file");
  lift->add_flag("--force", force, "Lift size guards");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (format.empty()) format = *ver ? "text" : "json";

  try {
    if (*build) {
      Graph base = MakeFamily(family, params);
      Graph g;
      if (construction == "base") {
        g = base;
      } else if (construction == "token") {
        g = TokenGraph(base, k, force);
      } else if (construction == "supertoken") {
        g = SupertokenGraph(base, k, force);
      } else if (construction == "strong") {
        g = StrongPower(base, k, force);
      } else if (construction == "cartesian") {
        g = CartesianPower(base, k, force);
      } else if (construction == "augmented") {
        Require(family == "cycle", "the augmented construction needs the cycle family");
        g = AugmentedTwoTokenCycle(base.num_vertices(), p, force);
      } else {
        Fail(ErrorKind::kInvalidParameter, "unknown construction '" + construction + "'");
      }
      if (g.name().empty()) g = g.WithName(family);
      Emit(out_path, GraphOutput(g, format));
      return kExitOk;
    }

    if (*inv) {
      const Graph g = LoadGraph(graph_path);
      std::vector<std::string> wanted;
      std::istringstream list(which);
      for (std::string item; std::getline(list, item, ',');) wanted.push_back(item);
      auto want = [&](const std::string& name) {
        for (const auto& w : wanted)
          if (w == name || w == "all") return true;
        return false;
      };
      ojson j;
      j["graph"] = g.name();
      j["n"] = g.num_vertices();
      j["m"] = g.num_edges();
      auto add = [&](const char* key, const Certificate& c) {
        ojson cj = CertificateJson(c);
        cj["verified"] = VerifyCertificate(g, c);
        j[key] = cj;
      };
      for (const auto& w : wanted) {
        Require(w == "all" || w == "alpha" || w == "omega" || w == "chi" ||
                    w == "metric-dimension" || w == "diameter" || w == "radius",
                "unknown invariant '" + w + "'");
      }
      if (want("alpha")) add("alpha", IndependenceNumber(g, force));
      if (want("omega")) add("omega", CliqueNumber(g, force));
      if (want("chi")) add("chi", ChromaticNumber(g, force));
      if (want("diameter") || want("radius")) {
        if (IsConnected(g)) {
          if (want("diameter")) j["diameter"] = Diameter(g);
          if (want("radius")) j["radius"] = Radius(g);
        } else if (!want("all")) {
          Diameter(g);  // throws infinite-distance
        } else {
          j["diameter"] = nullptr;
          j["radius"] = nullptr;
        }
      }
      if (want("metric-dimension")) {
        if (IsConnected(g) && (force || g.num_vertices() <= kMetricDimensionGuard)) {
          add("metric_dimension", MetricDimension(g, force));
        } else if (!want("all")) {
          add("metric_dimension", MetricDimension(g, force));
        }
      }
      Emit(out_path, j.dump(2) + "\n");
      return kExitOk;
    }

    if (*bound) {
      if (*b_partition) {
        const Graph g = LoadGraph(graph_path);
        ColorClassPartition partition;
        ojson j;
        if (groups_spec.empty()) {
          const Certificate chi = ChromaticNumber(g, force);
          const BestPartition best = BestPartitionBound(g, chi.colors, k, force);
          partition = best.partition;
          j["mode"] = "best";
          j["value"] = best.value.str();
          j["partitions_enumerated"] = best.partitions_enumerated;
          j["balanced_blocks"] = best.heuristic.balanced;
          j["blocks"] = best.heuristic.blocks;
        } else {
          partition.coloring = ChromaticNumber(g, force).colors;
          partition.groups = ParseGroups(groups_spec);
          partition.k = k;
          j["mode"] = "given";
          j["value"] = PartitionBound(g, partition).str();
        }
        j["partition"] = PartitionJson(partition);
        if (format == "csv") {
          std::vector<std::vector<std::string>> rows;
          for (std::size_t i = 0; i < partition.groups.size(); ++i) {
            const auto& grp = partition.groups[i];
            for (std::size_t h = 0; h < grp.colors.size(); ++h)
              rows.push_back({std::to_string(i), std::to_string(grp.colors[h]),
                              std::to_string(partition.class_sizes()[grp.colors[h]]),
                              std::to_string(grp.tokens[h])});
          }
          Emit(out_path, "# bound " + j["value"].get<std::string>() + "\n" +
                             Rows({"group", "color", "class_size", "tokens"}, rows, "csv"));
        } else {
          Emit(out_path, j.dump(2) + "\n");
        }
        return kExitOk;
      }
      if (*b_bip) {
        Emit(out_path, Rows({"c1", "c2", "k", "bound"},
                            {{std::to_string(c1), std::to_string(c2), std::to_string(k),
                              BipartiteBound(c1, c2, k).str()}},
                            format));
        return kExitOk;
      }
      if (*b_2cycle) {
        Emit(out_path, Rows({"n", "alpha"},
                            {{std::to_string(n), std::to_string(AlphaSupertoken2Cycle(n))}},
                            format));
        return kExitOk;
      }
      if (*b_aug) {
        Emit(out_path, Rows({"n", "p", "alpha"},
                            {{std::to_string(n), std::to_string(p), AlphaAugmented(n, p).str()}},
                            format));
        return kExitOk;
      }
      if (*b_rate) {
        BigInt alpha;
        try {
          alpha = BigInt(alpha_text);
        } catch (const std::exception&) {
          Fail(ErrorKind::kInvalidParameter, "alpha must be an integer");
        }
        Emit(out_path, Rows({"alpha", "k", "rate"},
                            {{alpha.str(), std::to_string(k), Fmt(InformationRate(alpha, k))}},
                            format));
        return kExitOk;
      }
      if (*b_table3) {
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> header = {"c"};
        for (int kk = 0; kk <= k_max; ++kk) header.push_back("k" + std::to_string(kk));
        for (int c = 1; c <= c_max; ++c) {
          std::vector<std::string> row = {std::to_string(c)};
          for (const auto& v : Table3Row(c, k_max)) row.push_back(v.str());
          rows.push_back(std::move(row));
        }
        Emit(out_path, Rows(header, rows, format));
        return kExitOk;
      }
    }

    if (*spec) {
      const Graph g = LoadGraph(graph_path);
      if (!quotient_path.empty()) {
        const VertexPartition partition = LoadPartition(quotient_path, g.num_vertices());
        const auto q = EquitableCheck(g, partition);
        Require(q.has_value(), "partition is not equitable");
        const QuotientMatrix m = laplacian ? LaplacianQuotient(*q) : *q;
        Emit(out_path, SpectrumOutput(QuotientSpectrum(m, zero_tol), format,
                                      laplacian ? "laplacian-quotient" : "adjacency-quotient"));
        return kExitOk;
      }
      const Spectrum s = laplacian ? LaplacianSpectrum(g, force, zero_tol)
                                   : AdjacencySpectrum(g, force, zero_tol);
      Emit(out_path, SpectrumOutput(s, format, laplacian ? "laplacian" : "adjacency"));
      return kExitOk;
    }

    if (*ver) {
      if (list_cases) {
        std::string text;
        for (const auto& id : VerificationCaseIds()) text += id + "\n";
        Emit(out_path, text);
        return kExitOk;
      }
      VerifyOptions options;
      if (tolerance >= 0) options.tolerance = tolerance;
      if (case_ids.empty()) case_ids = {"all"};
      const auto cases = RunVerification(case_ids, options);
      Require(format == "text" || format == "json", "verify format must be text or json");
      Emit(out_path, format == "json" ? FormatReportJson(cases) : FormatReportText(cases));
      return VerificationPassed(cases) ? kExitOk : kExitVerification;
    }

    if (*rate) {
      const Graph g = LoadGraph(graph_path);
      ojson j;
      j["graph"] = g.name();
      j["k"] = k;
      BigInt alpha;
      if (exact) {
        alpha = IndependenceNumber(SupertokenGraph(g, k, force), force).value;
        j["source"] = "exact";
      } else {
        const Certificate chi = ChromaticNumber(g, force);
        alpha = BestPartitionBound(g, chi.colors, k, force).value;
        j["source"] = "partition-bound";
      }
      j["alpha"] = alpha.str();
      j["rate"] = InformationRate(alpha, k);
      j["base_rate"] = InformationRate(IndependenceNumber(g, force).value, 1);
      Emit(out_path, j.dump(2) + "\n");
      return kExitOk;
    }

    if (*lift) {
      const Graph g = LoadGraph(graph_path);
      const ColorLift result = LiftColoring(g, k, force);
      ojson j;
      j["graph"] = g.name();
      j["k"] = k;
      j["chi"] = result.chi;
      j["base_coloring"] = result.base_coloring;
      j["colors_used"] = result.colors_used;
      j["proper"] = true;
      ojson colors = ojson::object();
      for (std::size_t r = 0; r < result.lifted.size(); ++r)
        colors[UnrankConfig(r, g.num_vertices(), k).Label()] = result.lifted[r];
      j["coloring"] = colors;
      Emit(out_path, j.dump(2) + "\n");
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << ErrorKindName(e.kind()) << "): " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::kTooLarge:
        return kExitGuard;
      case ErrorKind::kPropertyViolation:
      case ErrorKind::kFormulaInconsistency:
        return kExitVerification;
      default:
        return kExitUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
