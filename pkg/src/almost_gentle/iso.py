"""Backtracking isomorphism search for presentations and defining pairs.

Both searches map arrows one at a time while keeping the induced vertex map
injective; a pluggable check decides whether a tentative arrow assignment is
consistent with the arrows already placed.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Hashable, Optional

from .pairs import DefiningPair
from .quiver import Presentation, Quiver

DEFAULT_BUDGET = 500_000


class SearchBudgetExceeded(RuntimeError):
    """The search gave up before deciding; this is not a negative answer."""


@dataclass(frozen=True)
class PresentationIso:
    vertex_map: dict[str, str]
    arrow_map: dict[str, str]


def _search_order(q: Quiver, ncand: dict[str, int]) -> list[str]:
    remaining = set(q.arrow_names)
    order: list[str] = []
    touched: set[str] = set()
    while remaining:
        frontier = [a for a in remaining if q.source(a) in touched or q.target(a) in touched]
        pool = frontier or list(remaining)
        a = min(pool, key=lambda x: (ncand[x], q.arrow_index(x)))
        order.append(a)
        remaining.discard(a)
        touched.update((q.source(a), q.target(a)))
    return order


def match_arrows(
    q1: Quiver,
    q2: Quiver,
    vsig1: dict[str, Hashable],
    vsig2: dict[str, Hashable],
    asig1: dict[str, Hashable],
    asig2: dict[str, Hashable],
    consistent: Callable[[str, str, dict[str, str]], bool],
    budget: int = DEFAULT_BUDGET,
) -> Optional[PresentationIso]:
    if len(q1.vertices) != len(q2.vertices) or len(q1.arrows) != len(q2.arrows):
        return None
    if Counter(vsig1.values()) != Counter(vsig2.values()):
        return None
    if Counter(asig1.values()) != Counter(asig2.values()):
        return None

    candidates = {a: [b for b in q2.arrow_names if asig2[b] == asig1[a]] for a in q1.arrow_names}
    order = _search_order(q1, {a: len(c) for a, c in candidates.items()})
    amap: dict[str, str] = {}
    used: set[str] = set()
    vmap: dict[str, str] = {}
    vinv: dict[str, str] = {}
    steps = 0

    def bind(u: str, w: str, added: list[str]) -> bool:
        if u in vmap:
            return vmap[u] == w
        if w in vinv or vsig1[u] != vsig2[w]:
            return False
        vmap[u] = w
        vinv[w] = u
        added.append(u)
        return True

    def go(i: int) -> bool:
        nonlocal steps
        if i == len(order):
            return True
        a = order[i]
        for b in candidates[a]:
            if b in used:
                continue
            steps += 1
            if steps > budget:
                raise SearchBudgetExceeded(f"isomorphism search exceeded {budget} steps")
            added: list[str] = []
            if bind(q1.source(a), q2.source(b), added) and bind(q1.target(a), q2.target(b), added):
                amap[a] = b
                used.add(b)
                if consistent(a, b, amap) and go(i + 1):
                    return True
                del amap[a]
                used.discard(b)
            for u in added:
                del vinv[vmap.pop(u)]
        return False

    if not go(0):
        return None
    rest1 = [v for v in q1.vertices if v not in vmap]
    rest2 = [w for w in q2.vertices if w not in vinv]
    for u in rest1:
        w = next(w for w in rest2 if vsig2[w] == vsig1[u] and w not in vinv)
        vmap[u] = w
        vinv[w] = u
    return PresentationIso(dict(vmap), dict(amap))


def _presentation_signatures(p: Presentation):
    q = p.quiver
    rel_count = Counter()
    for a, b in p.relations:
        rel_count[q.target(a)] += 1
    vsig = {
        v: (len(q.arrows_to(v)), len(q.arrows_from(v)), rel_count[v]) for v in q.vertices
    }
    asig = {}
    for a in q.arrows:
        nexts = q.arrows_from(a.target)
        prevs = q.arrows_to(a.source)
        asig[a.name] = (
            vsig[a.source], vsig[a.target], a.is_loop,
            sum(p.is_relation(a.name, b) for b in nexts),
            sum(p.is_relation(c, a.name) for c in prevs),
            p.is_relation(a.name, a.name),
        )
    return vsig, asig


def presentations_isomorphic(p: Presentation, r: Presentation, budget: int = DEFAULT_BUDGET) -> Optional[PresentationIso]:
    """A vertex/arrow bijection carrying the relations of ``p`` onto those of ``r``, if any."""
    if len(p.relations) != len(r.relations):
        return None
    vs1, as1 = _presentation_signatures(p)
    vs2, as2 = _presentation_signatures(r)

    def consistent(a: str, b: str, amap: dict[str, str]) -> bool:
        for x, y in amap.items():
            if p.is_relation(a, x) != r.is_relation(b, y):
                return False
            if p.is_relation(x, a) != r.is_relation(y, b):
                return False
        return True

    return match_arrows(p.quiver, r.quiver, vs1, vs2, as1, as2, consistent, budget)


def _pair_signatures(pair: DefiningPair):
    q = pair.quiver
    info = {}
    for c in pair.classes:
        for a in c.representative:
            info[a] = (c.length, c.multiplicity)
    vsig = {}
    for v in q.vertices:
        through = sorted(info[a] for a in q.arrows_from(v))
        vsig[v] = (len(q.arrows_to(v)), len(q.arrows_from(v)), tuple(through))
    asig = {a.name: (vsig[a.source], vsig[a.target], a.is_loop) + info[a.name] for a in q.arrows}
    return vsig, asig


def pairs_isomorphic(x: DefiningPair, y: DefiningPair, budget: int = DEFAULT_BUDGET) -> Optional[PresentationIso]:
    """A quiver isomorphism sending cycle classes to cycle classes of equal multiplicity."""
    if sorted((c.length, c.multiplicity) for c in x.classes) != sorted(
        (c.length, c.multiplicity) for c in y.classes
    ):
        return None
    vs1, as1 = _pair_signatures(x)
    vs2, as2 = _pair_signatures(y)
    nx1, nx2 = x.next_arrow(), y.next_arrow()
    pv1 = {b: a for a, b in nx1.items()}
    pv2 = {b: a for a, b in nx2.items()}

    def consistent(a: str, b: str, amap: dict[str, str]) -> bool:
        n = nx1[a]
        if n in amap and amap[n] != nx2[b]:
            return False
        pv = pv1[a]
        if pv in amap and amap[pv] != pv2[b]:
            return False
        return True

    return match_arrows(x.quiver, y.quiver, vs1, vs2, as1, as2, consistent, budget)
