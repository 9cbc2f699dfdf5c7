#!/usr/bin/env python3
"""Tiling algebra: sums, differences, primality, and a prime family.

The square system's two minimal graphs tile the plane in interesting
ways.  Four copies of the spread graph laid out in a 2x2 grid are
composite for an obvious reason, yet removing the doubled graph that
materializes in the middle leaves a graph with no decomposition at all,
and repeating the trick grows primes of unbounded size.
"""

from kirchgraph import (
    SearchConfig,
    add,
    build_infinite_prime_family,
    build_row_system,
    enumerate_kirchhoff,
    find_embeddings,
    is_prime,
    span_contains,
    subtract,
)

square = build_row_system([[2, 0, 1, 1], [0, 2, 1, -1]])
graphs, _ = enumerate_kirchhoff(square, SearchConfig(m_max=2))
spread = next(g for g in graphs if all(c == 1 for _, c in g.edge_items()))
doubled = next(g for g in graphs if any(c > 1 for _, c in g.edge_items()))

print("minimal graphs:", is_prime(spread).status, "and", is_prime(doubled).status)

total = add(spread, doubled, (1, 1))
print("sum at offset (1,1): verdict", total.is_kirchhoff().status, " m =", total.multiplicity().m)

# a 2x2 grid of the spread graph
grid = spread
for offset in ((1, -1), (1, 1), (2, 0)):
    grid = add(grid, spread, offset)
print("\n2x2 grid: m =", grid.multiplicity().m, "->", is_prime(grid).status)

# the doubled graph appears in the interior without ever being placed
interior = find_embeddings(grid, doubled)
print("embeddings of the doubled graph inside the grid:", interior)

residue = subtract(grid, doubled, interior[0])
print("grid minus that copy: m =", residue.multiplicity().m, "->", is_prime(residue).status)

# two decompositions of the same composite graph
print("\nnon-unique decomposition of the grid:")
for label, gens in (("4 spread copies", [spread]), ("residue + doubled", [residue, doubled])):
    result = span_contains(gens, grid)
    print(f"    {label}: {result.status} with {len(result.expression.placements)} placements")

# growing the family: each extra row adds two spread copies and removes
# one more interior doubled copy, keeping the result prime
print("\nprime family by extending the grid row by row:")
for j in (1, 2, 3):
    member = build_infinite_prime_family(j)
    print(
        f"    j={j}: m = {member.multiplicity().m}, "
        f"{member.total_edge_instances()} edge instances -> {is_prime(member).status}"
    )
