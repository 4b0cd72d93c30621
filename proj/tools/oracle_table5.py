#!/usr/bin/env python3
# Copyright 2026 The Supertoken Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent oracle for the augmented 2-token cycle table.

Builds F_2^p(C_n) with networkx from the edge rules alone and computes alpha
as the clique number of the complement. Output is the JSON list that was
frozen into data/goldens/table5.json.

    python3 tools/oracle_table5.py > /tmp/table5_oracle.json
"""

import itertools
import json

import networkx as nx


def pair(a, b):
    return (min(a, b), max(a, b))


def augmented(n, p):
    g = nx.Graph()
    for i, j in itertools.combinations(range(n), 2):
        g.add_node(((i, j), 0))
    # layer 0 is F_2(C_n): move one token to a free neighbour
    for i, j in itertools.combinations(range(n), 2):
        for a, b in ((i, j), (j, i)):
            for d in (1, -1):
                c = (a + d) % n
                if c != b:
                    g.add_edge(((i, j), 0), (pair(c, b), 0))
    for r in range(1, p + 1):
        for i in range(n):
            if r % 2 == 1:
                g.add_edge(((i, i), r), (pair(i, (i + 1) % n), r - 1))
                g.add_edge(((i, i), r), (pair(i, (i - 1) % n), r - 1))
            else:
                j = (i + 1) % n
                g.add_edge((pair(i, j), r), ((i, i), r - 1))
                g.add_edge((pair(i, j), r), ((j, j), r - 1))
    return g


def alpha(g):
    return max(len(c) for c in nx.find_cliques(nx.complement(g)))


def main():
    out = []
    for n in range(3, 9):
        for p in range(0, 4):
            g = augmented(n, p)
            assert g.number_of_nodes() == n * (n - 1) // 2 + p * n
            out.append({"n": n, "p": p, "alpha": alpha(g),
                        "vertices": g.number_of_nodes(),
                        "edges": g.number_of_edges()})
    print(json.dumps(out))


if __name__ == "__main__":
    main()
