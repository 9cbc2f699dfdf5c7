"""Deterministic JSON documents for enumeration results (schema kg-doc/1).

A document echoes the row system, lists each graph with lexicographically
sorted vertices and edges, and annotates chirality pairing and (when
computed) primality.  Graph ids follow canonical-form order, so they are
stable across runs, platforms and worker counts; identical inputs and
flags produce byte-identical output.
"""

from __future__ import annotations

import json

from kirchgraph.exactalg import RowSystem, build_row_system
from kirchgraph.vgraph import VectorGraph

SCHEMA = "kg-doc/1"


def build_document(
    system: RowSystem,
    graphs: list[VectorGraph],
    m_max: int | None = None,
    complete: bool = True,
    primality: dict[int, str] | None = None,
) -> dict:
    """Assemble the document dict for canonical graphs.

    ``primality`` maps graph positions to "prime"/"composite"/"unknown";
    unannotated graphs carry null.
    """
    order = sorted(range(len(graphs)), key=lambda i: graphs[i].canonical_key())
    canon = [graphs[i].canonical() for i in order]
    ids = {canon[pos].canonical_key(): f"G{pos}" for pos in range(len(canon))}

    entries = []
    self_chiral_count = 0
    paired = 0
    for pos, g in enumerate(canon):
        verts = list(g.vertices)
        vid = {v: i for i, v in enumerate(verts)}
        edges = [
            {
                "tail": vid[edge.tail],
                "head": vid[edge.head],
                "vec_index": edge.vec_index,
                "count": count,
            }
            for edge, count in g.edges()
        ]
        chiral_key = g.chiral().canonical_key()
        self_chiral = chiral_key == g.canonical_key()
        if self_chiral:
            self_chiral_count += 1
            chiral_of = None
        else:
            chiral_of = ids.get(chiral_key)
            if chiral_of is not None:
                paired += 1
        source = order[pos] if primality else None
        entries.append(
            {
                "id": f"G{pos}",
                "vertices": [list(v) for v in verts],
                "edges": edges,
                "multiplicity": g.multiplicity().m,
                "self_chiral": self_chiral,
                "chiral_of": chiral_of,
                "prime": primality.get(source) if primality else None,
            }
        )

    prime_count = sum(1 for e in entries if e["prime"] == "prime") if primality else None
    doc = {
        "schema": SCHEMA,
        "system": {
            "n": system.n,
            "k": system.k,
            "q": system.q,
            "R": [list(row) for row in system.R],
            "C": [list(row) for row in system.C],
            "N": [list(row) for row in system.N],
        },
        "m_max": m_max,
        "complete": complete,
        "graphs": entries,
        "summary": {
            "total": len(entries),
            "self_chiral": self_chiral_count,
            "chiral_pairs": paired // 2,
            "primes": prime_count,
        },
    }
    return doc


def document_to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def parse_document(text: str) -> tuple[RowSystem, list[VectorGraph], dict]:
    """Rebuild the system and graphs from document JSON.

    Returns (system, graphs keyed in document order, raw document dict).
    """
    doc = json.loads(text)
    if doc.get("schema") != SCHEMA:
        raise ValueError(f"unsupported schema {doc.get('schema')!r}")
    system = build_row_system(doc["system"]["R"])
    if [list(r) for r in system.N] != doc["system"]["N"]:
        raise ValueError("stored null matrix disagrees with the row matrix")
    graphs = []
    for entry in doc["graphs"]:
        verts = [tuple(v) for v in entry["vertices"]]
        edges = {}
        for e in entry["edges"]:
            key = (verts[e["tail"]], e["vec_index"])
            edges[key] = edges.get(key, 0) + e["count"]
            head = tuple(
                a + b for a, b in zip(verts[e["tail"]], system.columns[e["vec_index"]])
            )
            if head != verts[e["head"]]:
                raise ValueError(f"edge {e} is geometrically inconsistent")
        graphs.append(VectorGraph(system, edges))
    return system, graphs, doc
