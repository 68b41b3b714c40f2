"""The trivial extension of an almost gentle algebra, built two ways.

``star`` builds the algebra defined by the cycles ``m a_m`` (one new arrow
per maximal path). ``TrivialExtension`` multiplies in ``A ⊕ D(A)`` directly
on the basis ``(p, 0)``, ``(0, p^∨)``. ``verify_star_iso`` sends every
relation of the first through the obvious arrow map into the second.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .pairs import DefiningPair, PairRelations, cycle_base, cycle_str, relations_of_pair
from .quiver import (
    Arrow,
    MaximalPath,
    NotAlmostGentleError,
    Path,
    Presentation,
    Quiver,
    basis,
    dimension,
    maximal_paths,
    require_almost_gentle,
)

DIRECT = "direct"
DUAL = "dual"


def fresh_name(base: str, taken: set[str]) -> str:
    name = base
    while name in taken:
        name += "'"
    return name


@dataclass(frozen=True)
class StarAlgebra:
    origin: Presentation
    maximal_paths: tuple[MaximalPath, ...]
    new_arrows: tuple[str, ...]
    pair: DefiningPair
    relations: PairRelations

    @property
    def quiver(self) -> Quiver:
        return self.pair.quiver

    def new_arrow_of(self, i: int) -> str:
        return self.new_arrows[i]


def star(p: Presentation) -> StarAlgebra:
    require_almost_gentle(p)
    q = p.quiver
    if not q.arrows:
        raise NotAlmostGentleError("the construction needs at least one arrow")
    mps = maximal_paths(p)
    taken = set(q.arrow_names)
    new_names = []
    for m in mps:
        nm = fresh_name(f"a_m{m.index + 1}", taken)
        taken.add(nm)
        new_names.append(nm)
    new_arrows = [Arrow(nm, m.path.target, m.path.source) for nm, m in zip(new_names, mps)]
    qstar = Quiver(q.vertices, q.arrows + tuple(new_arrows))
    cycles = [m.arrows + (nm,) for m, nm in zip(mps, new_names)]
    pair = DefiningPair.build(qstar, cycles, name=p.name)
    return StarAlgebra(p, tuple(mps), tuple(new_names), pair, relations_of_pair(pair))


def star_dimension(p: Presentation) -> int:
    mps = maximal_paths(p)
    d = 2 * len(p.quiver.vertices) + sum(m.length * (m.length + 1) for m in mps)
    if d != 2 * dimension(p):
        raise AssertionError(f"internal inconsistency: {d} != 2 * {dimension(p)}")
    return d


@dataclass(frozen=True)
class TBasisElement:
    tag: str
    path: Path

    def __str__(self) -> str:
        if self.tag == DIRECT:
            return f"({self.path}, 0)"
        return f"(0, ({self.path})^)"


def direct(path: Path) -> TBasisElement:
    return TBasisElement(DIRECT, path)


def dual(path: Path) -> TBasisElement:
    return TBasisElement(DUAL, path)


class TrivialExtension:
    """Structure constants of ``T(A) = A ⊕ D(A)`` on the monomial basis.

    Every product of two basis elements is either zero or a single basis
    element with coefficient one, so ``mult`` returns ``None`` or a
    ``TBasisElement``.
    """

    def __init__(self, p: Presentation):
        require_almost_gentle(p)
        self.presentation = p
        self.paths = basis(p)
        self._paths = set(self.paths)

    @property
    def basis(self) -> list[TBasisElement]:
        return [direct(x) for x in self.paths] + [dual(x) for x in self.paths]

    @property
    def dimension(self) -> int:
        return 2 * len(self.paths)

    def _check(self, x: TBasisElement) -> None:
        if x.tag not in (DIRECT, DUAL) or x.path not in self._paths:
            raise ValueError(f"{x} is not a basis element of T({self.presentation.name})")

    def path_product(self, p: Path, q: Path) -> Optional[Path]:
        pq = p.concat(q)
        if pq is None or pq not in self._paths:
            return None
        return pq

    def mult(self, x: TBasisElement, y: TBasisElement) -> Optional[TBasisElement]:
        self._check(x)
        self._check(y)
        if x.tag == DIRECT and y.tag == DIRECT:
            pq = self.path_product(x.path, y.path)
            return None if pq is None else direct(pq)
        if x.tag == DUAL and y.tag == DUAL:
            return None
        if x.tag == DIRECT:
            # p . r^∨ = s^∨ where s p = r
            p, r = x.path, y.path
            if r.target != p.target or len(r) < len(p) or r.arrows[len(r) - len(p):] != p.arrows:
                return None
            s = Path(r.source, p.source, r.arrows[:len(r) - len(p)])
        else:
            # r^∨ . q = s^∨ where q s = r
            r, q = x.path, y.path
            if r.source != q.source or len(r) < len(q) or r.arrows[:len(q)] != q.arrows:
                return None
            s = Path(q.target, r.target, r.arrows[len(q):])
        if s not in self._paths:
            return None
        return dual(s)

    def product(self, factors: Iterable[TBasisElement]) -> Optional[TBasisElement]:
        factors = iter(factors)
        acc = next(factors)
        for f in factors:
            acc = self.mult(acc, f)
            if acc is None:
                return None
        return acc


def tmult(p: Presentation, x: TBasisElement, y: TBasisElement) -> Optional[TBasisElement]:
    return TrivialExtension(p).mult(x, y)


@dataclass(frozen=True)
class RelationCheck:
    kind: str
    relation: str
    value: str
    ok: bool


@dataclass(frozen=True)
class StarIsoReport:
    name: str
    checks: tuple[RelationCheck, ...]
    socle_checks: tuple[RelationCheck, ...]
    star_dimension: int
    trivial_extension_dimension: int
    generated: int
    failures: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return (
            all(c.ok for c in self.checks)
            and all(c.ok for c in self.socle_checks)
            and self.star_dimension == self.trivial_extension_dimension
            and self.generated == self.trivial_extension_dimension
        )


def _show(x: Optional[TBasisElement]) -> str:
    return "0" if x is None else str(x)


def verify_star_iso(p: Presentation) -> StarIsoReport:
    """Evaluate a_m -> (0, m^∨), a -> (a, 0) on every defining relation of the star algebra."""
    sa = star(p)
    t = TrivialExtension(p)
    q = p.quiver
    phi = {a: direct(q.path([a])) for a in q.arrow_names}
    for m, nm in zip(sa.maximal_paths, sa.new_arrows):
        phi[nm] = dual(m.path)

    def image(word) -> Optional[TBasisElement]:
        return t.product(phi[a] for a in word)

    checks = []
    for c1, c2 in sa.relations.type1:
        v1, v2 = image(c1), image(c2)
        checks.append(RelationCheck(
            "type1", f"{cycle_str(c1)} - {cycle_str(c2)}", f"{_show(v1)} - {_show(v2)}",
            v1 == v2))
    for c, a in sa.relations.type2:
        v = image(c + (a,))
        checks.append(RelationCheck("type2", f"{cycle_str(c)} {a}", _show(v), v is None))
    for a, b in sa.relations.type3:
        v = image((a, b))
        checks.append(RelationCheck("type3", f"{a} {b}", _show(v), v is None))

    socle = []
    for c in sa.pair.cycles():
        v = image(c)
        want = dual(Path.trivial(cycle_base(sa.quiver, c)))
        socle.append(RelationCheck("socle", cycle_str(c), _show(v), v == want))

    generators = [direct(Path.trivial(v)) for v in q.vertices]
    generators += [phi[a] for a in sa.quiver.arrow_names]
    reached = set(generators)
    frontier = list(generators)
    while frontier:
        x = frontier.pop()
        for g in generators:
            y = t.mult(x, g)
            if y is not None and y not in reached:
                reached.add(y)
                frontier.append(y)

    return StarIsoReport(
        name=p.name,
        checks=tuple(checks),
        socle_checks=tuple(socle),
        star_dimension=star_dimension(p),
        trivial_extension_dimension=t.dimension,
        generated=len(reached),
        failures=tuple(c.relation for c in checks + socle if not c.ok),
    )
