"""Tiling algebra over Kirchhoff graphs.

Sums place a second graph's anchor (its canonical-form origin) at a
lattice offset and merge edge multisets; differences remove an embedded
translate.  On top of those two moves sit: subgraph-embedding search,
primality (no bipartition of the edges into two Kirchhoff parts),
bounded span membership ("can the target be tiled from these
generators?"), the arbitrarily-large prime family built from the two
minimal square-system graphs, and fundamental generating sets.

Span membership is a bounded semi-decision: spans are infinite, so a
negative answer only means "not within the given coefficient and offset
bounds".
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from kirchgraph.exactalg import build_row_system
from kirchgraph.vgraph import Coord, VectorGraph

DEFAULT_COEFF_BOUND = 8
DEFAULT_PRIME_BUDGET = 2_000_000


class TilingError(ValueError):
    pass


class SystemMismatch(TilingError):
    pass


class NoEmbeddingAtOffset(TilingError):
    pass


class Vector2ConnectivityLost(TilingError):
    pass


class KirchhoffViolation(TilingError):
    """A sum or difference produced a non-Kirchhoff result."""


class FamilyConstructionError(TilingError):
    """An expected interior embedding was absent while growing the family."""


@dataclass(frozen=True)
class Placement:
    graph: VectorGraph
    offset: Coord
    sign: int  # +1 or -1


@dataclass(frozen=True)
class TilingExpression:
    """Signed placements, evaluated left to right.

    Every subtraction must embed at its point in the sequence; evaluate()
    raises NoEmbeddingAtOffset otherwise.
    """

    placements: tuple[Placement, ...]

    def evaluate(self) -> VectorGraph:
        if not self.placements:
            raise ValueError("empty expression")
        system = self.placements[0].graph.system
        acc = VectorGraph.empty(system)
        for p in self.placements:
            if p.sign > 0:
                acc = add(acc, p.graph, p.offset)
            else:
                acc = subtract(acc, p.graph, p.offset)
        return acc

    def describe(self, names: dict | None = None) -> str:
        """Textual form, e.g. ``1*G0@(0,0) + 1*G1@(1,1) - 1*G0@(2,2)``.

        ``names`` maps labels to graphs; placements of unnamed graphs
        print as ``G``.
        """
        parts = []
        for i, p in enumerate(self.placements):
            label = next(
                (
                    lbl
                    for lbl, g in (names or {}).items()
                    if g.equals_up_to_translation(p.graph)
                ),
                "G",
            )
            term = f"1*{label}@({','.join(str(x) for x in p.offset)})"
            if i == 0:
                parts.append(term if p.sign > 0 else f"- {term}")
            else:
                parts.append(("+ " if p.sign > 0 else "- ") + term)
        return " ".join(parts)


@dataclass(frozen=True)
class PrimalityVerdict:
    status: str  # "prime" | "composite" | "unknown"
    witness: tuple[VectorGraph, VectorGraph] | None = None


def _require_same_system(g1: VectorGraph, g2: VectorGraph) -> None:
    if g1.system.R != g2.system.R:
        raise SystemMismatch("graphs belong to different row systems")


def _shifted_items(g: VectorGraph, offset: Coord):
    off = tuple(offset)
    return [((tuple(a + b for a, b in zip(t, off)), i), c) for (t, i), c in g.edge_items()]


def _verify(result: VectorGraph, context: str) -> VectorGraph:
    verdict = result.is_kirchhoff()
    if verdict.status not in ("ok", "trivial"):
        raise KirchhoffViolation(f"{context} produced a non-Kirchhoff graph: {verdict}")
    if verdict.ok and not result.is_vector_2_connected():
        raise Vector2ConnectivityLost(f"{context} lost vector 2-connectivity")
    return result


def add(g1: VectorGraph, g2: VectorGraph, offset: Coord) -> VectorGraph:
    """Union of g1, as positioned, with g2's anchor placed at ``offset``.

    g2 is re-anchored to its canonical origin before translating; g1 is
    used in place so that chains of placements share one absolute frame
    (pass g1.canonical() for the anchored-at-origin reading).
    Multiplicity is additive; the result is verified Kirchhoff.
    """
    _require_same_system(g1, g2)
    edges = dict(g1._edges)
    for key, c in _shifted_items(g2.canonical(), offset):
        edges[key] = edges.get(key, 0) + c
    return _verify(VectorGraph(g1.system, edges), "sum")


def find_embeddings(host: VectorGraph, pattern: VectorGraph) -> list[Coord]:
    """All offsets x with pattern's canonical form, translated by x, a
    sub-multiset of host.  Empty for no embeddings; the pattern must be
    nonempty (an empty pattern embeds everywhere)."""
    _require_same_system(host, pattern)
    if pattern.is_empty:
        raise ValueError("empty pattern embeds at every offset")
    pat = pattern.canonical().edge_items()
    host_edges = host._edges
    (p0, i0), c0 = pat[0]
    offsets = []
    for (t, i), c in host_edges.items():
        if i != i0 or c < c0:
            continue
        off = tuple(a - b for a, b in zip(t, p0))
        if all(
            host_edges.get((tuple(a + b for a, b in zip(pt, off)), pi), 0) >= pc
            for (pt, pi), pc in pat
        ):
            offsets.append(off)
    return sorted(offsets)


def subtract(g1: VectorGraph, g2: VectorGraph, offset: Coord) -> VectorGraph:
    """Remove the copy of g2 embedded at ``offset`` from g1."""
    _require_same_system(g1, g2)
    if g2.is_empty:
        return g1
    edges = dict(g1._edges)
    for key, c in _shifted_items(g2.canonical(), offset):
        have = edges.get(key, 0)
        if have < c:
            raise NoEmbeddingAtOffset(f"no copy at offset {tuple(offset)}: missing {key}")
        if have == c:
            del edges[key]
        else:
            edges[key] = have - c
    return _verify(VectorGraph(g1.system, edges), "difference")


# -- primality ----------------------------------------------------------


def is_prime(graph: VectorGraph, budget: int = DEFAULT_PRIME_BUDGET) -> PrimalityVerdict:
    """Decide whether the edge multiset splits into two nonempty parts
    that each satisfy both Kirchhoff conditions.

    Depth-first split with propagation: edges are assigned part by part
    in vertex order, and as soon as a vertex has all incident edges
    assigned, both parts' cuts there must lie in the row space or the
    branch dies.  The first edge is pinned to part A to break the A/B
    symmetry.  Exhausting the tree proves primality; ``budget`` caps the
    node count, returning "unknown" when exceeded.
    """
    if graph.is_empty:
        raise ValueError("primality is defined for nonempty graphs")
    if not graph.is_kirchhoff().ok:
        raise ValueError("primality is defined for Kirchhoff graphs")

    system = graph.system
    n = system.n
    cols = system.columns
    keys = [(key, c) for key, c in graph.edge_items()]
    vertices = list(graph.vertices)
    vindex = {v: i for i, v in enumerate(vertices)}

    # incidence: for each vertex, which keys touch it and with what sign
    touching: dict[int, list[tuple[int, int, int]]] = {i: [] for i in range(len(vertices))}
    last_key_at: dict[int, int] = {}
    for ki, ((tail, idx), _) in enumerate(keys):
        head = tuple(a + b for a, b in zip(tail, cols[idx]))
        touching[vindex[tail]].append((ki, idx, +1))
        touching[vindex[head]].append((ki, idx, -1))
        last_key_at[vindex[tail]] = max(last_key_at.get(vindex[tail], -1), ki)
        last_key_at[vindex[head]] = max(last_key_at.get(vindex[head], -1), ki)

    cuts_a = [[0] * n for _ in vertices]
    total_cut = {v: graph.vertex_cut(v) for v in vertices}
    assigned: list[int] = [0] * len(keys)
    nodes = 0

    in_row = system.contains_in_row_space

    def vertex_ok(vi: int) -> bool:
        a = tuple(cuts_a[vi])
        b = tuple(t - x for t, x in zip(total_cut[vertices[vi]], a))
        return in_row(a) and in_row(b)

    def split_rank_ok(part_counts) -> bool:
        part = VectorGraph(system, {keys[i][0]: c for i, c in enumerate(part_counts) if c})
        return part.is_kirchhoff().ok

    def search(ki: int) -> tuple[VectorGraph, VectorGraph] | None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _BudgetExhausted
        if ki == len(keys):
            total = sum(c for _, c in keys)
            na = sum(assigned)
            if na == 0 or na == total:
                return None
            if not split_rank_ok(assigned):
                return None
            complement = [c - a for (_, c), a in zip(keys, assigned)]
            if not split_rank_ok(complement):
                return None
            part_a = VectorGraph(system, {keys[i][0]: c for i, c in enumerate(assigned) if c})
            part_b = VectorGraph(system, {keys[i][0]: c for i, c in enumerate(complement) if c})
            return part_a, part_b
        (tail, idx), count = keys[ki]
        head = tuple(a + b for a, b in zip(tail, cols[idx]))
        ends = (vindex[tail], vindex[head])
        low = 1 if ki == 0 else 0  # pin a copy of the first edge into part A
        for a in range(low, count + 1):
            assigned[ki] = a
            if a:
                cuts_a[ends[0]][idx] += a
                cuts_a[ends[1]][idx] -= a
            ok = all(last_key_at[vi] != ki or vertex_ok(vi) for vi in ends)
            if ok:
                res = search(ki + 1)
                if res is not None:
                    return res
            if a:
                cuts_a[ends[0]][idx] -= a
                cuts_a[ends[1]][idx] += a
        assigned[ki] = 0
        return None

    try:
        witness = search(0)
    except _BudgetExhausted:
        return PrimalityVerdict("unknown")
    if witness is None:
        return PrimalityVerdict("prime")
    return PrimalityVerdict("composite", witness=witness)


class _BudgetExhausted(Exception):
    pass


# -- span membership ------------------------------------------------------


@dataclass(frozen=True)
class SpanResult:
    status: str  # "yes" | "no_within_bounds"
    expression: TilingExpression | None = None

    @property
    def contained(self) -> bool:
        return self.status == "yes"


def _default_window(target: VectorGraph, generators) -> tuple[Coord, Coord]:
    lo, hi = target.bounding_box()
    k = target.system.k
    dilate = [0] * k
    for g in generators:
        glo, ghi = g.canonical().bounding_box()
        for d in range(k):
            dilate[d] = max(dilate[d], ghi[d] - glo[d])
    return (
        tuple(lo[d] - dilate[d] for d in range(k)),
        tuple(hi[d] + dilate[d] for d in range(k)),
    )


def span_contains(
    generators,
    target: VectorGraph,
    coeff_bound: int = DEFAULT_COEFF_BOUND,
    offset_window: tuple[Coord, Coord] | None = None,
) -> SpanResult:
    """Search for a tiling expression over ``generators`` equal to
    ``target`` up to translation, using at most ``coeff_bound`` placements
    with offsets inside ``offset_window``.

    An expression carries one integer coefficient per generator, so all
    placements of a given generator share one sign: copies of it are
    either added or removed, never both.

    The search works on the signed demand target - sum(placements): a
    mismatched edge instance must be covered by adding (deficit) or
    removing (surplus) a generator copy aligned to it, which keeps the
    branching factor at the number of generator edges; the most
    constrained instance is picked first.  Placements found this way
    always reorder into a valid add-then-subtract sequence: postponing
    subtractions only enlarges the intermediate multisets their
    embeddings are checked against.

    A "no_within_bounds" answer is not a proof of non-membership.
    """
    generators = list(generators)
    if not generators:
        raise ValueError("need at least one generator")
    for g in generators:
        _require_same_system(g, target)
        if g.is_empty:
            raise ValueError("generators must be nonempty")
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be >= 1")
    if target.is_empty:
        return SpanResult("yes", TilingExpression(()))

    target = target.canonical()
    window = offset_window or _default_window(target, generators)
    lo, hi = window
    k = target.system.k

    gen_items = [g.canonical().edge_items() for g in generators]
    gen_sizes = [sum(c for _, c in items) for items in gen_items]
    max_size = max(gen_sizes)

    def within(off):
        return all(lo[d] <= off[d] <= hi[d] for d in range(k))

    # demand: edge key -> target count minus placed count (may be negative)
    demand = dict(target._edges)
    memo: set = set()
    committed = [0] * len(generators)  # per-generator sign, 0 while unused

    def options_for(key, sign):
        """Aligned placements of a generator edge over key, honoring the
        one-coefficient-per-generator sign commitments."""
        pos, idx = key
        opts = []
        for gi, items in enumerate(gen_items):
            if committed[gi] == -sign:
                continue
            for (pt, pi), _ in items:
                if pi != idx:
                    continue
                off = tuple(a - b for a, b in zip(pos, pt))
                if within(off):
                    opts.append((gi, off))
        return opts

    def pick_mismatch():
        """Most-constrained pending key (fewest alignments), ties lex."""
        best = None
        for key in sorted(k_ for k_, c in demand.items() if c):
            opts = options_for(key, 1 if demand[key] > 0 else -1)
            if not opts:
                return key, []
            if best is None or len(opts) < len(best[1]):
                best = (key, opts)
                if len(opts) == 1:
                    break
        return best if best else (None, [])

    def apply_gen(gi, off, sign):
        for (pt, pi), pc in gen_items[gi]:
            key = (tuple(a + b for a, b in zip(pt, off)), pi)
            left = demand.get(key, 0) - sign * pc
            if left:
                demand[key] = left
            else:
                demand.pop(key, None)

    def search(budget, placements):
        key, opts = pick_mismatch()
        if key is None:
            return list(placements)
        if budget == 0 or not opts:
            return None
        total_gap = sum(abs(c) for c in demand.values())
        if total_gap > budget * max_size:
            return None
        state = (tuple(sorted(demand.items())), tuple(committed), budget)
        if state in memo:
            return None
        memo.add(state)
        sign = 1 if demand[key] > 0 else -1
        for gi, off in opts:
            prev = committed[gi]
            committed[gi] = sign
            apply_gen(gi, off, sign)
            placements.append((gi, off, sign))
            res = search(budget - 1, placements)
            if res is not None:
                return res
            placements.pop()
            apply_gen(gi, off, -sign)
            committed[gi] = prev
        return None

    # iterative deepening: minimal placement count first
    solution = None
    for budget in range(1, coeff_bound + 1):
        solution = search(budget, [])
        if solution is not None:
            break
    if solution is None:
        return SpanResult("no_within_bounds")
    adds = [p for p in solution if p[2] > 0]
    subs = [p for p in solution if p[2] < 0]
    expr = TilingExpression(
        tuple(
            Placement(generators[gi], off, sign)
            for gi, off, sign in adds + subs
        )
    )
    built = expr.evaluate()
    if not built.equals_up_to_translation(target):
        raise AssertionError("span search returned a non-matching expression")
    return SpanResult("yes", expr)


# -- the arbitrarily-large prime family ----------------------------------


@lru_cache(maxsize=1)
def _square_family_geometry():
    """The two minimal square-system graphs plus the grid periods whose
    2x2 arrangement of the spread graph contains a copy of the doubled
    one in its interior."""
    from kirchgraph.enumerator import SearchConfig, enumerate_kirchhoff
    from itertools import product as iproduct

    system = build_row_system([[2, 0, 1, 1], [0, 2, 1, -1]])
    graphs, _ = enumerate_kirchhoff(system, SearchConfig(m_max=2))
    spread = next(g for g in graphs if all(c == 1 for _, c in g.edge_items()))
    doubled = next(g for g in graphs if any(c > 1 for _, c in g.edge_items()))
    for t1 in iproduct(range(-4, 5), repeat=2):
        for t2 in iproduct(range(-4, 5), repeat=2):
            if t1 >= t2 or t1 == (0, 0) or t2 == (0, 0):
                continue
            grid = spread
            for off in (t1, t2, tuple(a + b for a, b in zip(t1, t2))):
                grid = add(grid, spread, off)
            embs = find_embeddings(grid, doubled)
            if embs:
                return system, spread, doubled, t1, t2, embs[0]
    raise FamilyConstructionError("no grid periods found")


def build_infinite_prime_family(j: int) -> VectorGraph:
    """The j-th member of the arbitrarily-large prime family for the
    square system: (2j+2) copies of the spread graph in a 2-by-(j+1)
    grid, minus the j interior copies of the doubled graph.

    Multiplicity is 2(2j+2) - 2j = 2j + 4.
    """
    if j < 1:
        raise ValueError("j must be >= 1")
    _, spread, doubled, t1, t2, emb0 = _square_family_geometry()
    acc = None
    for row in range(j + 1):
        base = tuple(row * x for x in t2)
        for col_off in ((0, 0), t1):
            off = tuple(a + b for a, b in zip(base, col_off))
            acc = spread.translate(off) if acc is None else add(acc, spread, off)
    for row in range(j):
        off = tuple(a + row * b for a, b in zip(emb0, t2))
        if off not in find_embeddings(acc, doubled):
            raise FamilyConstructionError(f"interior embedding missing at row {row}")
        acc = subtract(acc, doubled, off)
    return acc


# -- fundamental sets ------------------------------------------------------


def fundamental_sets(
    graphs,
    coeff_bound: int = DEFAULT_COEFF_BOUND,
    offset_window: tuple[Coord, Coord] | None = None,
) -> list[tuple[int, ...]]:
    """All minimum-cardinality generating subsets, as index tuples.

    Candidate generators are restricted to the minimal-multiplicity tier
    first; among those, subsets are tried in increasing cardinality and
    every subset whose bounded span covers all inputs at the first
    feasible size is returned.  Results are relative to the bounds.
    """
    from itertools import combinations

    graphs = list(graphs)
    if not graphs:
        raise ValueError("need at least one graph")
    mults = [g.multiplicity().m for g in graphs]
    if any(m is None for m in mults):
        raise ValueError("all graphs must be uniform")
    tier = [i for i, m in enumerate(mults) if m == min(mults)]

    def covers(subset) -> bool:
        gens = [graphs[i] for i in subset]
        return all(
            i in subset
            or span_contains(gens, graphs[i], coeff_bound, offset_window).contained
            for i in range(len(graphs))
        )

    for size in range(1, len(tier) + 1):
        hits = [combo for combo in combinations(tier, size) if covers(combo)]
        if hits:
            return hits
    return []
