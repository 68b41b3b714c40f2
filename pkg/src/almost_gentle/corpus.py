"""Named example algebras shipped with the package."""

from __future__ import annotations

from importlib import resources
from typing import Union

from .formats import parse
from .pairs import DefiningPair
from .quiver import Presentation

NAMES = ("LIN", "LOOP", "A2CYC", "AG1", "AG2")


def source(name: str) -> str:
    return resources.files(__package__).joinpath("corpus", f"{name.lower()}.alg").read_text(encoding="utf-8")


def load(name: str) -> Union[Presentation, DefiningPair]:
    return parse(source(name))


def presentations() -> dict[str, Presentation]:
    return {n: load(n) for n in NAMES}
