"""Brauer configurations of defining pairs."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .pairs import DefiningPair


def min_rotation(seq: tuple) -> tuple:
    if not seq:
        return seq
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


@dataclass(frozen=True, eq=False)
class BrauerConfiguration:
    """Configuration vertices are indexed from 0 and labelled ``α1, α2, ...``.

    ``polygons`` has one entry per quiver vertex: the sorted multiset of
    configuration-vertex indices. ``orientation[i]`` is the cyclic sequence
    of polygons (named by their quiver vertex) around vertex ``i``. Two
    configurations are equal when they agree with orientations read up to
    rotation.
    """

    multiplicities: tuple[int, ...]
    polygons: tuple[tuple[str, tuple[int, ...]], ...]
    orientation: tuple[tuple[str, ...], ...]

    def polygon(self, v: str) -> tuple[int, ...]:
        return dict(self.polygons)[v]

    def normal_form(self):
        return (
            self.multiplicities,
            self.polygons,
            tuple(min_rotation(o) for o in self.orientation),
        )

    def __eq__(self, other):
        if not isinstance(other, BrauerConfiguration):
            return NotImplemented
        return self.normal_form() == other.normal_form()

    def __hash__(self):
        return hash(self.normal_form())


def configuration_of_pair(pair: DefiningPair) -> BrauerConfiguration:
    q = pair.quiver
    counts = {v: Counter() for v in q.vertices}
    orientation = []
    for j, c in enumerate(pair.classes):
        seq = c.source_sequence(q)
        for v in seq:
            counts[v][j] += 1
        orientation.append(seq)
    polygons = tuple((v, tuple(sorted(counts[v].elements()))) for v in q.vertices)
    return BrauerConfiguration(
        tuple(c.multiplicity for c in pair.classes), polygons, tuple(orientation)
    )
