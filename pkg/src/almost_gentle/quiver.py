"""Quivers, paths and quadratic monomial presentations.

A presentation ``KQ/I`` is stored as a quiver together with the set of
arrow pairs ``(a, b)`` whose composite ``ab`` lies in ``I``. Everything in
this module is combinatorial: a monomial algebra has the relation-avoiding
paths as a basis, so no coefficients are ever needed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

import networkx as nx


class NotAlmostGentleError(ValueError):
    """Raised when an operation needs an almost gentle presentation."""


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str

    @property
    def is_loop(self) -> bool:
        return self.source == self.target


@dataclass(frozen=True)
class Path:
    """A path in a quiver; ``arrows == ()`` is the trivial path at ``source``."""

    source: str
    target: str
    arrows: tuple[str, ...] = ()

    @classmethod
    def trivial(cls, vertex: str) -> "Path":
        return cls(vertex, vertex, ())

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def __len__(self) -> int:
        return len(self.arrows)

    def __str__(self) -> str:
        if self.is_trivial:
            return f"e_{self.source}"
        return " ".join(self.arrows)

    def concat(self, other: "Path") -> Optional["Path"]:
        """Plain concatenation in the path algebra, or None if not composable."""
        if self.target != other.source:
            return None
        return Path(self.source, other.target, self.arrows + other.arrows)


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    _arrow: dict = field(init=False, repr=False, compare=False, hash=False)
    _vindex: dict = field(init=False, repr=False, compare=False, hash=False)
    _aindex: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex identifier")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("duplicate arrow identifier")
        vset = set(self.vertices)
        for a in self.arrows:
            if a.source not in vset or a.target not in vset:
                raise ValueError(f"arrow {a.name} has an undeclared endpoint")
        object.__setattr__(self, "_arrow", {a.name: a for a in self.arrows})
        object.__setattr__(self, "_vindex", {v: i for i, v in enumerate(self.vertices)})
        object.__setattr__(self, "_aindex", {a.name: i for i, a in enumerate(self.arrows)})

    @classmethod
    def from_triples(cls, vertices: Iterable[str], arrows: Iterable[tuple[str, str, str]]) -> "Quiver":
        return cls(tuple(vertices), tuple(Arrow(*t) for t in arrows))

    def arrow(self, name: str) -> Arrow:
        try:
            return self._arrow[name]
        except KeyError:
            raise KeyError(f"unknown arrow {name!r}") from None

    def has_arrow(self, name: str) -> bool:
        return name in self._arrow

    def arrow_index(self, name: str) -> int:
        return self._aindex[name]

    def vertex_index(self, v: str) -> int:
        return self._vindex[v]

    @property
    def arrow_names(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.arrows)

    def source(self, name: str) -> str:
        return self.arrow(name).source

    def target(self, name: str) -> str:
        return self.arrow(name).target

    def arrows_from(self, v: str) -> list[str]:
        return [a.name for a in self.arrows if a.source == v]

    def arrows_to(self, v: str) -> list[str]:
        return [a.name for a in self.arrows if a.target == v]

    def composable(self, a: str, b: str) -> bool:
        return self.target(a) == self.source(b)

    def composable_pairs(self) -> list[tuple[str, str]]:
        out = {v: [] for v in self.vertices}
        for a in self.arrows:
            out[a.source].append(a.name)
        return [(a.name, b) for a in self.arrows for b in out[a.target]]

    def path(self, arrows: Iterable[str]) -> Path:
        arrows = tuple(arrows)
        if not arrows:
            raise ValueError("use Path.trivial for trivial paths")
        for a, b in zip(arrows, arrows[1:]):
            if not self.composable(a, b):
                raise ValueError(f"arrows {a} and {b} are not composable")
        return Path(self.source(arrows[0]), self.target(arrows[-1]), arrows)

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from((a.source, a.target) for a in self.arrows)
        return nx.is_connected(g)

    def isolated_vertices(self) -> list[str]:
        touched = {a.source for a in self.arrows} | {a.target for a in self.arrows}
        return [v for v in self.vertices if v not in touched]

    def without_arrows(self, removed: Iterable[str]) -> "Quiver":
        removed = set(removed)
        return Quiver(self.vertices, tuple(a for a in self.arrows if a.name not in removed))


@dataclass(frozen=True)
class Presentation:
    """``KQ/I`` with ``I`` generated by the arrow pairs in ``relations``."""

    quiver: Quiver
    relations: frozenset[tuple[str, str]]
    name: str = field(default="A", compare=False)

    def __post_init__(self):
        rels = list(self.relations)
        if len(set(rels)) != len(rels):
            raise ValueError("duplicate relation")
        for a, b in rels:
            self.quiver.arrow(a)
            self.quiver.arrow(b)
        object.__setattr__(self, "relations", frozenset(map(tuple, rels)))

    def is_relation(self, a: str, b: str) -> bool:
        return (a, b) in self.relations

    def sorted_relations(self) -> list[tuple[str, str]]:
        idx = self.quiver.arrow_index
        return sorted(self.relations, key=lambda r: (idx(r[0]), idx(r[1])))

    def renamed(self, name: str) -> "Presentation":
        return Presentation(self.quiver, self.relations, name)

    @cached_property
    def report(self) -> "ValidationReport":
        return validate(self)

    @cached_property
    def _succ(self) -> dict[str, list[str]]:
        q = self.quiver
        return {
            a.name: [b for b in q.arrows_from(a.target) if (a.name, b) not in self.relations]
            for a in q.arrows
        }

    @cached_property
    def _pred(self) -> dict[str, list[str]]:
        q = self.quiver
        return {
            a.name: [c for c in q.arrows_to(a.source) if (c, a.name) not in self.relations]
            for a in q.arrows
        }


@dataclass(frozen=True)
class ValidationReport:
    structural_errors: tuple[str, ...]
    s1_violations: tuple[tuple[str, str, tuple[str, ...]], ...]
    unrelieved_cycles: tuple[tuple[str, ...], ...]
    gentle_violations: tuple[str, ...]
    is_finite_dimensional: bool

    @property
    def is_almost_gentle(self) -> bool:
        return not self.structural_errors and not self.s1_violations and self.is_finite_dimensional

    @property
    def is_gentle(self) -> bool:
        return self.is_almost_gentle and not self.gentle_violations

    def messages(self) -> list[str]:
        msgs = list(self.structural_errors)
        for arrow, kind, others in self.s1_violations:
            msgs.append(f"S1: arrow {arrow} has several non-relation {kind}s: {', '.join(others)}")
        for cyc in self.unrelieved_cycles:
            msgs.append(f"infinite dimension: cycle {' '.join(cyc)} contains no relation")
        return msgs


def _one_cycle_per_component(g: nx.DiGraph) -> list[tuple[str, ...]]:
    cycles = []
    for comp in nx.strongly_connected_components(g):
        sub = g.subgraph(comp)
        if len(comp) == 1:
            (n,) = comp
            if not sub.has_edge(n, n):
                continue
        start = min(comp, key=lambda n: g.nodes[n]["order"])
        edges = nx.find_cycle(sub, source=start)
        cycles.append(tuple(u for u, _ in edges))
    cycles.sort(key=lambda c: min(g.nodes[n]["order"] for n in c))
    return cycles


def validate(p: Presentation) -> ValidationReport:
    """Check the almost gentle and gentle axioms; problems are reported, never raised."""
    q = p.quiver
    structural = []
    for a, b in p.sorted_relations():
        if not q.composable(a, b):
            structural.append(f"relation {a} {b} is not composable")
    if not q.vertices:
        structural.append("quiver has no vertices")
    elif not (len(q.vertices) == 1 and not q.arrows):
        if q.isolated_vertices():
            structural.append("isolated vertices: " + ", ".join(q.isolated_vertices()))
        if not q.is_connected():
            structural.append("quiver is not connected")

    s1 = []
    for a in q.arrow_names:
        if len(p._succ[a]) > 1:
            s1.append((a, "successor", tuple(p._succ[a])))
        if len(p._pred[a]) > 1:
            s1.append((a, "predecessor", tuple(p._pred[a])))

    g = nx.DiGraph()
    for i, a in enumerate(q.arrow_names):
        g.add_node(a, order=i)
    g.add_edges_from((a, b) for a in q.arrow_names for b in p._succ[a])
    unrelieved = _one_cycle_per_component(g)

    gentle = []
    for a in q.arrow_names:
        forward = [b for b in q.arrows_from(q.target(a)) if p.is_relation(a, b)]
        backward = [c for c in q.arrows_to(q.source(a)) if p.is_relation(c, a)]
        if len(forward) > 1:
            gentle.append(f"S2: {a} has relation successors {', '.join(forward)}")
        if len(backward) > 1:
            gentle.append(f"S2: {a} has relation predecessors {', '.join(backward)}")
    for v in q.vertices:
        if len(q.arrows_to(v)) > 2:
            gentle.append(f"S3: {len(q.arrows_to(v))} arrows end at {v}")
        if len(q.arrows_from(v)) > 2:
            gentle.append(f"S3: {len(q.arrows_from(v))} arrows start at {v}")

    return ValidationReport(
        structural_errors=tuple(structural),
        s1_violations=tuple(s1),
        unrelieved_cycles=tuple(unrelieved),
        gentle_violations=tuple(gentle),
        is_finite_dimensional=not unrelieved,
    )


def require_almost_gentle(p: Presentation) -> None:
    rep = p.report
    if not rep.is_almost_gentle:
        raise NotAlmostGentleError(f"{p.name} is not almost gentle: " + "; ".join(rep.messages()))


def successor(p: Presentation, a: str) -> Optional[str]:
    """The unique arrow b with ab not in I, or None when every continuation is a relation."""
    require_almost_gentle(p)
    p.quiver.arrow(a)
    nxt = p._succ[a]
    assert len(nxt) <= 1
    return nxt[0] if nxt else None


def predecessor(p: Presentation, a: str) -> Optional[str]:
    require_almost_gentle(p)
    p.quiver.arrow(a)
    prv = p._pred[a]
    assert len(prv) <= 1
    return prv[0] if prv else None


@dataclass(frozen=True)
class MaximalPath:
    path: Path
    index: int

    @property
    def length(self) -> int:
        return self.path.length

    @property
    def arrows(self) -> tuple[str, ...]:
        return self.path.arrows

    def vertex_sequence(self, q: Quiver) -> tuple[str, ...]:
        """Vertices passed through, both endpoints included (length ``ℓ + 1``)."""
        return (self.path.source,) + tuple(q.target(a) for a in self.path.arrows)

    def __str__(self) -> str:
        return str(self.path)


def maximal_paths(p: Presentation) -> list[MaximalPath]:
    require_almost_gentle(p)
    q = p.quiver
    seen: set[str] = set()
    found = []
    for a in q.arrow_names:
        if a in seen:
            continue
        start = a
        while (c := predecessor(p, start)) is not None:
            start = c
        arrows = [start]
        while (b := successor(p, arrows[-1])) is not None:
            arrows.append(b)
        assert len(set(arrows)) == len(arrows)
        seen.update(arrows)
        found.append(q.path(arrows))
    found.sort(key=lambda path: q.arrow_index(path.arrows[0]))
    return [MaximalPath(path, i) for i, path in enumerate(found)]


def basis(p: Presentation) -> list[Path]:
    """Trivial paths followed by every subpath of every maximal path."""
    q = p.quiver
    out = [Path.trivial(v) for v in q.vertices]
    for m in maximal_paths(p):
        arrows = m.arrows
        n = len(arrows)
        for length in range(1, n + 1):
            for i in range(n - length + 1):
                out.append(q.path(arrows[i:i + length]))
    return out


def dimension(p: Presentation) -> int:
    mps = maximal_paths(p)
    by_formula = len(p.quiver.vertices) + sum(m.length * (m.length + 1) // 2 for m in mps)
    by_count = len(basis(p))
    if by_formula != by_count:
        raise AssertionError(f"dimension mismatch: formula {by_formula}, basis {by_count}")
    return by_formula


def has_finite_global_dimension(p: Presentation) -> bool:
    """False iff some oriented cycle has all its length-two subpaths in I."""
    require_almost_gentle(p)
    g = nx.DiGraph()
    g.add_nodes_from(p.quiver.arrow_names)
    g.add_edges_from(p.relations)
    return nx.is_directed_acyclic_graph(g)


def brute_force_basis(p: Presentation, max_len: int) -> list[Path]:
    """All relation-avoiding paths of length at most ``max_len``, by breadth-first extension."""
    if not p.report.is_finite_dimensional:
        raise ValueError(f"{p.name} is infinite dimensional; enumeration would not terminate")
    q = p.quiver
    level = [Path.trivial(v) for v in q.vertices]
    out = list(level)
    frontier = deque(level)
    while frontier:
        path = frontier.popleft()
        if path.length >= max_len:
            continue
        for b in q.arrows_from(path.target):
            if path.arrows and p.is_relation(path.arrows[-1], b):
                continue
            longer = Path(path.source, q.target(b), path.arrows + (b,))
            out.append(longer)
            frontier.append(longer)
    return out
