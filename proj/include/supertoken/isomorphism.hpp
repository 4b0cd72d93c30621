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

#ifndef SUPERTOKEN_ISOMORPHISM_HPP_
#define SUPERTOKEN_ISOMORPHISM_HPP_

#include <optional>
#include <vector>

#include "supertoken/graph.hpp"

namespace supertoken {

inline constexpr int kIsomorphismGuard = 40;

// Exact isomorphism test by colour refinement of the disjoint union plus
// individualisation/backtracking. Returns phi with u ~ v in g iff
// phi[u] ~ phi[v] in h. Throws too-large above kIsomorphismGuard vertices
// unless forced.
std::optional<std::vector<int>> FindIsomorphism(const Graph& g, const Graph& h,
                                                bool force = false);

bool IsIsomorphic(const Graph& g, const Graph& h, bool force = false);

}  // namespace supertoken

#endif  // SUPERTOKEN_ISOMORPHISM_HPP_
