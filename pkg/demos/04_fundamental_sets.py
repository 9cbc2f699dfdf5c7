#!/usr/bin/env python3
"""Fundamental sets: minimum generating subsets under tiling.

For the square system the two minimal graphs generate everything and
neither generates the other, so the fundamental set is the pair.  The
sheared system is stranger: each of its four graphs is a tiling of the
other three, so every three-element subset generates and no pair does.
"""

from kirchgraph import (
    SearchConfig,
    build_row_system,
    enumerate_kirchhoff,
    fundamental_sets,
    span_contains,
)

for label, rows, m_max in (
    ("square", [[2, 0, 1, 1], [0, 2, 1, -1]], 2),
    ("shear", [[1, 0, 2, 1], [0, 1, 1, 2]], 6),
):
    system = build_row_system(rows)
    graphs, _ = enumerate_kirchhoff(system, SearchConfig(m_max=m_max))
    subsets = fundamental_sets(graphs)
    print(f"{label}: {len(graphs)} graphs; fundamental sets (index subsets): {subsets}")

# The relation behind the shear result: each graph is one addition and
# one subtraction away from the other three.
shear = build_row_system([[1, 0, 2, 1], [0, 1, 1, 2]])
graphs, _ = enumerate_kirchhoff(shear, SearchConfig(m_max=6))
for i in range(len(graphs)):
    generators = [g for j, g in enumerate(graphs) if j != i]
    result = span_contains(generators, graphs[i])
    n = len(result.expression.placements)
    signs = "".join("+" if p.sign > 0 else "-" for p in result.expression.placements)
    print(f"    graph {i} from the others: {result.status} ({n} placements, signs {signs})")
