"""Random almost gentle presentations for property and acceptance runs.

A random connected quiver is drawn first. A partial injection ``σ`` on the
composable arrow pairs is then grown greedily, refusing any pair that would
close a ``σ``-cycle. Every composable pair outside ``σ`` becomes a relation,
which makes the result almost gentle by construction.
"""

from __future__ import annotations

import random
from typing import Optional

from .quiver import Arrow, Presentation, Quiver


def random_quiver(rng: random.Random, max_vertices: int = 8, max_arrows: int = 12) -> Quiver:
    n = rng.randint(1, max_vertices)
    vertices = [f"v{i + 1}" for i in range(n)]
    ends: list[tuple[str, str]] = []
    for i in range(1, n):
        j = rng.randrange(i)
        ends.append((vertices[i], vertices[j]) if rng.random() < 0.5 else (vertices[j], vertices[i]))
    lo = 1 if n == 1 else 0
    extra = rng.randint(lo, max(lo, max_arrows - len(ends)))
    for _ in range(extra):
        ends.append((rng.choice(vertices), rng.choice(vertices)))
    rng.shuffle(ends)
    return Quiver(tuple(vertices), tuple(Arrow(f"x{k + 1}", s, t) for k, (s, t) in enumerate(ends)))


def random_almost_gentle(rng: random.Random, max_vertices: int = 8, max_arrows: int = 12,
                         keep: Optional[float] = None, name: str = "R") -> Presentation:
    q = random_quiver(rng, max_vertices, max_arrows)
    keep = rng.uniform(0.3, 0.9) if keep is None else keep
    succ: dict[str, str] = {}
    pred: dict[str, str] = {}
    pairs = q.composable_pairs()
    rng.shuffle(pairs)
    for a, b in pairs:
        if a in succ or b in pred or a == b or rng.random() > keep:
            continue
        x = b
        while x in succ and x != a:
            x = succ[x]
        if x == a:
            continue
        succ[a] = b
        pred[b] = a
    rels = frozenset(ab for ab in q.composable_pairs() if succ.get(ab[0]) != ab[1])
    return Presentation(q, rels, name)


def relabel(p: Presentation, rng: random.Random, name: Optional[str] = None) -> Presentation:
    """An isomorphic copy with fresh names and shuffled declaration order."""
    q = p.quiver
    vs = list(q.vertices)
    rng.shuffle(vs)
    vname = {v: f"w{i + 1}" for i, v in enumerate(vs)}
    arrows = list(q.arrows)
    rng.shuffle(arrows)
    aname = {a.name: f"y{i + 1}" for i, a in enumerate(arrows)}
    order = list(q.vertices)
    rng.shuffle(order)
    new_q = Quiver(
        tuple(vname[v] for v in order),
        tuple(Arrow(aname[a.name], vname[a.source], vname[a.target]) for a in arrows),
    )
    rels = frozenset((aname[a], aname[b]) for a, b in p.relations)
    return Presentation(new_q, rels, name or p.name)
