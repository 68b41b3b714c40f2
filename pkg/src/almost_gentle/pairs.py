"""Defining pairs: simple cycles with multiplicities, and the relations they present."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .quiver import Quiver

Cycle = tuple[str, ...]


class InvalidPairError(ValueError):
    def __init__(self, report: "PairReport"):
        super().__init__("; ".join(report.errors))
        self.report = report


def rotations(cycle: Cycle) -> list[Cycle]:
    return [cycle[i:] + cycle[:i] for i in range(len(cycle))]


def canonical_rotation(q: Quiver, cycle: Cycle) -> Cycle:
    """Rotation with the lexicographically smallest sequence of arrow indices."""
    return min(rotations(cycle), key=lambda c: [q.arrow_index(a) for a in c])


def cycle_base(q: Quiver, cycle: Cycle) -> str:
    return q.source(cycle[0])


def cycle_str(cycle: Cycle) -> str:
    return " ".join(cycle)


@dataclass(frozen=True)
class CycleClass:
    representative: Cycle
    multiplicity: int = 1

    @property
    def length(self) -> int:
        return len(self.representative)

    @property
    def members(self) -> list[Cycle]:
        return rotations(self.representative)

    @property
    def arrow_set(self) -> frozenset[str]:
        return frozenset(self.representative)

    def source_sequence(self, q: Quiver) -> tuple[str, ...]:
        return tuple(q.source(a) for a in self.representative)


@dataclass(frozen=True)
class PairReport:
    errors: tuple[str, ...]
    warnings: tuple[str, ...]
    classes: tuple[CycleClass, ...]

    @property
    def ok(self) -> bool:
        return not self.errors


def validate_pair(q: Quiver, cycles: Sequence[Sequence[str]], mult: Optional[Sequence[int]] = None) -> PairReport:
    """Check D0-D4 on a list of cycles; missing rotations are filled in with a warning."""
    if mult is None:
        mult = [1] * len(cycles)
    if len(mult) != len(cycles):
        raise ValueError("one multiplicity per cycle expected")
    errors: list[str] = []
    warnings: list[str] = []

    order: list[Cycle] = []
    given: dict[Cycle, set[Cycle]] = {}
    class_mult: dict[Cycle, set[int]] = {}
    for raw, nu in zip(cycles, mult):
        cyc = tuple(raw)
        if not cyc:
            errors.append("empty cycle")
            continue
        unknown = [a for a in cyc if not q.has_arrow(a)]
        if unknown:
            errors.append(f"cycle {cycle_str(cyc)}: unknown arrows {', '.join(unknown)}")
            continue
        broken = [
            (a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1]) if not q.composable(a, b)
        ]
        if broken:
            a, b = broken[0]
            errors.append(f"cycle {cycle_str(cyc)}: {a} and {b} are not composable")
            continue
        if len(set(cyc)) != len(cyc):
            errors.append(f"cycle {cycle_str(cyc)} is not simple (repeated arrow)")
            continue
        if nu < 1:
            errors.append(f"cycle {cycle_str(cyc)}: multiplicity must be positive")
            continue
        rep = canonical_rotation(q, cyc)
        if rep not in given:
            order.append(rep)
            given[rep] = set()
            class_mult[rep] = set()
        given[rep].add(cyc)
        class_mult[rep].add(nu)

    classes = []
    for rep in order:
        nus = class_mult[rep]
        if len(nus) > 1:
            errors.append(f"D2: rotations of {cycle_str(rep)} have multiplicities {sorted(nus)}")
        nu = max(nus)
        if len(rep) == 1 and nu <= 1:
            errors.append(f"D0: loop {rep[0]} needs multiplicity > 1")
        missing = len(rep) - len(given[rep])
        if missing:
            warnings.append(f"D1: added {missing} missing rotation(s) of {cycle_str(rep)}")
        classes.append(CycleClass(rep, nu))

    owner: dict[str, Cycle] = {}
    for c in classes:
        for a in c.representative:
            if a in owner:
                errors.append(
                    f"D4: arrow {a} lies in {cycle_str(owner[a])} and {cycle_str(c.representative)}"
                )
            else:
                owner[a] = c.representative
    uncovered = [a for a in q.arrow_names if a not in owner]
    if uncovered:
        errors.append("D3: arrows on no cycle: " + ", ".join(uncovered))
    return PairReport(tuple(errors), tuple(warnings), tuple(classes))


@dataclass(frozen=True)
class DefiningPair:
    """A quiver with a valid defining pair, stored as ordered cycle classes."""

    quiver: Quiver
    classes: tuple[CycleClass, ...]
    name: str = field(default="A", compare=False)

    @classmethod
    def build(cls, q: Quiver, cycles: Sequence[Sequence[str]], mult: Optional[Sequence[int]] = None,
              name: str = "A") -> "DefiningPair":
        report = validate_pair(q, cycles, mult)
        if not report.ok:
            raise InvalidPairError(report)
        return cls(q, report.classes, name)

    @property
    def multiplicity_one(self) -> bool:
        return all(c.multiplicity == 1 for c in self.classes)

    def cycles(self) -> list[Cycle]:
        return [r for c in self.classes for r in c.members]

    def class_of(self, arrow: str) -> int:
        for i, c in enumerate(self.classes):
            if arrow in c.arrow_set:
                return i
        raise KeyError(arrow)

    def next_arrow(self) -> dict[str, str]:
        """Cyclic successor of every arrow inside its own cycle."""
        nxt = {}
        for c in self.classes:
            r = c.representative
            for a, b in zip(r, r[1:] + r[:1]):
                nxt[a] = b
        return nxt

    def consecutive_pairs(self) -> frozenset[tuple[str, str]]:
        return frozenset(self.next_arrow().items())


@dataclass(frozen=True)
class PairRelations:
    type1: tuple[tuple[Cycle, Cycle], ...]
    type2: tuple[tuple[Cycle, str], ...]
    type3: tuple[tuple[str, str], ...]


def relations_of_pair(pair: DefiningPair) -> PairRelations:
    q = pair.quiver
    key = lambda c: [q.arrow_index(a) for a in c]
    at_vertex: dict[str, list[Cycle]] = {v: [] for v in q.vertices}
    for c in pair.cycles():
        at_vertex[cycle_base(q, c)].append(c)
    type1 = []
    for v in q.vertices:
        here = sorted(at_vertex[v], key=key)
        type1.extend(itertools.combinations(here, 2))
    type2 = [(c, c[0]) for c in sorted(pair.cycles(), key=key)]
    on_cycle = pair.consecutive_pairs()
    type3 = [ab for ab in q.composable_pairs() if ab not in on_cycle]
    return PairRelations(tuple(type1), tuple(type2), tuple(type3))
