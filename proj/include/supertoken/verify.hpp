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

#ifndef SUPERTOKEN_VERIFY_HPP_
#define SUPERTOKEN_VERIFY_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supertoken/graph.hpp"

namespace supertoken {

// (stem, contents) of every data/goldens/*.json file, compiled in.
const std::vector<std::pair<std::string, std::string>>& EmbeddedGoldens();
// Throws invalid-parameter for an unknown name.
const std::string& GoldenText(const std::string& name);
// One message per golden entry without a valid "source" tag.
std::vector<std::string> GoldenProvenanceErrors();

inline constexpr const char* kSourcePublished = "published";
inline constexpr const char* kSourceDerived = "derived";
inline constexpr const char* kSourceTrivial = "trivial";

struct CheckLine {
  std::string label;
  std::string expected;
  std::string computed;
  std::string source;  // provenance of `expected`; empty for internal checks
  bool ok = true;
  std::string note;
};

enum class CaseStatus { kPass, kFail, kReported };
const char* CaseStatusName(CaseStatus status);

struct VerificationCase {
  std::string id;
  std::string title;
  double tolerance = 0;
  bool reported = false;  // evidence only; never fails a run
  std::vector<CheckLine> lines;

  CaseStatus status() const;
};

struct VerifyOptions {
  // Replaces the per-case tolerance for values printed with few decimals.
  std::optional<double> tolerance;
};

// Known case ids in report order.
const std::vector<std::string>& VerificationCaseIds();

// "all" expands to every case. Unknown ids throw invalid-parameter.
std::vector<VerificationCase> RunVerification(const std::vector<std::string>& ids,
                                              const VerifyOptions& options = {});
VerificationCase RunVerificationCase(const std::string& id,
                                     const VerifyOptions& options = {});

// False iff some non-reported case failed.
bool VerificationPassed(const std::vector<VerificationCase>& cases);

std::string FormatReportText(const std::vector<VerificationCase>& cases);
std::string FormatReportJson(const std::vector<VerificationCase>& cases);

// K_3, K_4, C_4..C_7, P_5, Q_3 and the Petersen graph.
std::vector<Graph> SuiteGraphs();

struct ColorLift {
  int chi = 0;
  std::vector<int> base_coloring;
  std::vector<int> lifted;  // colour of each configuration, by rank
  int colors_used = 0;
};

// Colours configuration A of F_k(G) by sum of c(v) over A, mod chi(G), where
// c is an optimal colouring of G. Throws property-violation if the lift is
// not proper.
ColorLift LiftColoring(const Graph& g, int k, bool force = false);

}  // namespace supertoken

#endif  // SUPERTOKEN_VERIFY_HPP_
