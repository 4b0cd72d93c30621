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

#ifndef SUPERTOKEN_KERNELS_HPP_
#define SUPERTOKEN_KERNELS_HPP_

#include <vector>

#include "supertoken/graph.hpp"
#include "supertoken/tokens.hpp"

// Data-parallel inner loops. Each kernel has a serial reference and an OpenMP
// version that produces bit-identical output; tests compare the two and the
// benchmark target times them.
namespace supertoken::kernels {

// Neighbour lists of the token-move graph over `space`: configuration u is
// adjacent to u - e_a + e_b for every edge ab of `base` with u_a > 0 (and
// u_b == 0 for subset spaces). Lists are sorted ascending.
std::vector<std::vector<int>> TokenMoveAdjacencySerial(const Graph& base,
                                                       const ConfigSpace& space);
std::vector<std::vector<int>> TokenMoveAdjacencyParallel(
    const Graph& base, const ConfigSpace& space);

// BFS eccentricity from every vertex; -1 for every vertex if disconnected.
std::vector<int> EccentricitiesSerial(const Graph& g);
std::vector<int> EccentricitiesParallel(const Graph& g);

// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int MaxThreads();

}  // namespace supertoken::kernels

#endif  // SUPERTOKEN_KERNELS_HPP_
