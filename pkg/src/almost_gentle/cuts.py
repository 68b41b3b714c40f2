"""Admissible cuts of a defining pair and the almost gentle algebras they cut out."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .pairs import DefiningPair
from .quiver import Presentation
from .trivext import StarAlgebra


class InvalidCutError(ValueError):
    pass


@dataclass(frozen=True)
class AdmissibleCut:
    """One arrow per cycle class, listed in class order."""

    arrows: tuple[str, ...]

    def __str__(self) -> str:
        return ",".join(self.arrows)


def admissible_cuts(pair: DefiningPair) -> Iterator[AdmissibleCut]:
    for choice in itertools.product(*(c.representative for c in pair.classes)):
        yield AdmissibleCut(choice)


def count_cuts(pair: DefiningPair) -> int:
    n = 1
    for c in pair.classes:
        n *= c.length
    return n


def make_cut(pair: DefiningPair, arrows: Iterable[str]) -> AdmissibleCut:
    """Sort a user-supplied arrow set into class order, checking admissibility."""
    arrows = list(arrows)
    chosen: dict[int, str] = {}
    for a in arrows:
        if not pair.quiver.has_arrow(a):
            raise InvalidCutError(f"unknown arrow {a!r}")
        i = pair.class_of(a)
        if i in chosen:
            raise InvalidCutError(f"arrows {chosen[i]} and {a} lie in the same cycle")
        chosen[i] = a
    missing = [i for i in range(len(pair.classes)) if i not in chosen]
    if missing:
        reps = ["(" + " ".join(pair.classes[i].representative) + ")" for i in missing]
        raise InvalidCutError("no arrow chosen in " + ", ".join(reps))
    return AdmissibleCut(tuple(chosen[i] for i in range(len(pair.classes))))


def cut_algebra(pair: DefiningPair, cut: AdmissibleCut, name: Optional[str] = None) -> Presentation:
    """Delete the cut arrows; keep as relations every surviving pair not adjacent on a cycle."""
    if not pair.multiplicity_one:
        raise NotImplementedError("cut algebras are only built for multiplicity identically one")
    if len(cut.arrows) != len(pair.classes) or any(
        a not in c.arrow_set for a, c in zip(cut.arrows, pair.classes)
    ):
        raise InvalidCutError(f"{cut} is not an admissible cut")
    q = pair.quiver.without_arrows(cut.arrows)
    on_cycle = pair.consecutive_pairs()
    rels = frozenset(ab for ab in q.composable_pairs() if ab not in on_cycle)
    return Presentation(q, rels, pair.name if name is None else name)


def canonical_cut(sa: StarAlgebra) -> AdmissibleCut:
    return AdmissibleCut(sa.new_arrows)
