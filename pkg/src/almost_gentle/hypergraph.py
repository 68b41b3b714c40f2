"""The oriented hypergraph of an almost gentle algebra, and its isomorphism test.

Hypergraph vertices are the maximal paths followed by one truncation vertex
``e_v`` for each quiver vertex lying on a single maximal path. Hyperedges are
the quiver vertices. Around a maximal path the hyperedges are listed in the
order the path visits them, both endpoints included.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .brauer import BrauerConfiguration, min_rotation
from .iso import DEFAULT_BUDGET, SearchBudgetExceeded
from .quiver import NotAlmostGentleError, Presentation, maximal_paths, require_almost_gentle

PATH = "path"
TRUNCATION = "truncation"


@dataclass(frozen=True)
class HVertex:
    kind: str
    label: str
    decoration: int = 1


@dataclass(frozen=True)
class OrientedHypergraph:
    vertices: tuple[HVertex, ...]
    hyperedges: tuple[tuple[str, tuple[int, ...]], ...]
    orientation: tuple[tuple[str, ...], ...]

    def hyperedge(self, v: str) -> tuple[int, ...]:
        return dict(self.hyperedges)[v]

    @property
    def edge_names(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.hyperedges)


@dataclass(frozen=True)
class HypergraphIso:
    vertex_map: dict[int, int]
    edge_map: dict[str, str]


def truncation_vertices(p: Presentation) -> list[str]:
    require_almost_gentle(p)
    q = p.quiver
    out = []
    for v in q.vertices:
        ins, outs = q.arrows_to(v), q.arrows_from(v)
        if len(outs) == 1 and not ins:
            out.append(v)
        elif len(ins) == 1 and not outs:
            out.append(v)
        elif len(ins) == 1 and len(outs) == 1 and not p.is_relation(ins[0], outs[0]):
            out.append(v)
    return out


def _hyperedges(orientation, names) -> tuple:
    members = {v: Counter() for v in names}
    for x, seq in enumerate(orientation):
        for v in seq:
            members[v][x] += 1
    return tuple((v, tuple(sorted(members[v].elements()))) for v in names)


def hypergraph_of(p: Presentation) -> OrientedHypergraph:
    require_almost_gentle(p)
    q = p.quiver
    if not q.arrows:
        raise NotAlmostGentleError("the hypergraph needs at least one arrow")
    mps = maximal_paths(p)
    vertices = [HVertex(PATH, str(m)) for m in mps]
    orientation = [m.vertex_sequence(q) for m in mps]
    for v in truncation_vertices(p):
        vertices.append(HVertex(TRUNCATION, f"e_{v}"))
        orientation.append((v,))
    return OrientedHypergraph(
        tuple(vertices), _hyperedges(orientation, q.vertices), tuple(orientation)
    )


def reduce_to_configuration(h: OrientedHypergraph) -> BrauerConfiguration:
    """Drop the truncation vertices, keeping maximal-path vertices in order."""
    keep = [i for i, x in enumerate(h.vertices) if x.kind == PATH]
    renumber = {old: new for new, old in enumerate(keep)}
    polygons = tuple(
        (v, tuple(renumber[i] for i in members if i in renumber)) for v, members in h.hyperedges
    )
    return BrauerConfiguration(
        tuple(h.vertices[i].decoration for i in keep),
        polygons,
        tuple(h.orientation[i] for i in keep),
    )


def _pattern(seq: tuple[str, ...]) -> tuple[int, ...]:
    # orientation shape with hyperedge names forgotten, minimised over rotations
    best = None
    for k in range(len(seq)):
        rot = seq[k:] + seq[:k]
        first: dict[str, int] = {}
        shape = tuple(first.setdefault(v, len(first)) for v in rot)
        if best is None or shape < best:
            best = shape
    return best or ()


def _vertex_signature(h: OrientedHypergraph, i: int):
    x = h.vertices[i]
    sizes = {v: len(m) for v, m in h.hyperedges}
    sizes_around = min_rotation(tuple(sizes[v] for v in h.orientation[i]))
    return (x.kind, x.decoration, len(h.orientation[i]), _pattern(h.orientation[i]), sizes_around)


def invariant_signature(h: OrientedHypergraph):
    """A normal form shared by isomorphic hypergraphs; unequal forms rule isomorphism out."""
    return (
        len(h.vertices),
        len(h.hyperedges),
        tuple(sorted(Counter(x.kind for x in h.vertices).items())),
        tuple(sorted(len(m) for _, m in h.hyperedges)),
        tuple(sorted(len(o) for o in h.orientation)),
        tuple(sorted(_vertex_signature(h, i) for i in range(len(h.vertices)))),
    )


def hypergraphs_isomorphic(
    h1: OrientedHypergraph,
    h2: OrientedHypergraph,
    budget: int = DEFAULT_BUDGET,
    prefilter: bool = True,
) -> Optional[HypergraphIso]:
    """Bijections on vertices and hyperedges preserving kinds, decorations and cyclic orders."""
    if len(h1.vertices) != len(h2.vertices) or len(h1.hyperedges) != len(h2.hyperedges):
        return None
    if prefilter and invariant_signature(h1) != invariant_signature(h2):
        return None

    sig1 = [_vertex_signature(h1, i) for i in range(len(h1.vertices))]
    sig2 = [_vertex_signature(h2, i) for i in range(len(h2.vertices))]
    if not prefilter:
        # without the normal form, compare only what the search itself relies on
        sig1 = [(h1.vertices[i].kind, h1.vertices[i].decoration, len(h1.orientation[i])) for i in range(len(sig1))]
        sig2 = [(h2.vertices[i].kind, h2.vertices[i].decoration, len(h2.orientation[i])) for i in range(len(sig2))]

    order: list[int] = []
    seen_edges: set[str] = set()
    remaining = set(range(len(h1.vertices)))
    while remaining:
        touching = [i for i in remaining if seen_edges & set(h1.orientation[i])]
        pool = touching or list(remaining)
        i = min(pool, key=lambda i: (-len(h1.orientation[i]), i))
        order.append(i)
        remaining.discard(i)
        seen_edges.update(h1.orientation[i])

    vmap: dict[int, int] = {}
    used: set[int] = set()
    emap: dict[str, str] = {}
    einv: dict[str, str] = {}
    steps = 0

    def go(k: int) -> bool:
        nonlocal steps
        if k == len(order):
            return True
        x = order[k]
        o1 = h1.orientation[x]
        n = len(o1)
        for y in range(len(h2.vertices)):
            if y in used or sig2[y] != sig1[x]:
                continue
            o2 = h2.orientation[y]
            tried = set()
            for r in range(n):
                rot = o2[r:] + o2[:r]
                if rot in tried:
                    continue
                tried.add(rot)
                steps += 1
                if steps > budget:
                    raise SearchBudgetExceeded(f"hypergraph search exceeded {budget} steps")
                added = []
                ok = True
                for a, b in zip(o1, rot):
                    if a in emap:
                        if emap[a] != b:
                            ok = False
                            break
                    elif b in einv:
                        ok = False
                        break
                    else:
                        emap[a] = b
                        einv[b] = a
                        added.append(a)
                if ok:
                    vmap[x] = y
                    used.add(y)
                    if go(k + 1):
                        return True
                    del vmap[x]
                    used.discard(y)
                for a in added:
                    del einv[emap.pop(a)]
        return False

    if not go(0):
        return None
    spare1 = [v for v in h1.edge_names if v not in emap]
    spare2 = [v for v in h2.edge_names if v not in einv]
    for a, b in zip(spare1, spare2):
        emap[a] = b
    e1, e2 = dict(h1.hyperedges), dict(h2.hyperedges)
    for a, b in emap.items():
        if sorted(vmap[i] for i in e1[a]) != sorted(e2[b]):
            raise AssertionError(f"orientation map does not carry hyperedge {a} onto {b}")
    return HypergraphIso(dict(vmap), dict(emap))
