"""Finite powerset Boolean algebras: the value carrier for everything else.

The desk-scale stand-in for a complete Boolean algebra: k named atoms,
elements are atom subsets, operations are set operations. k is capped so
exhaustive scans stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

DEFAULT_MAX_ATOMS = 16


class AlgebraMismatch(ValueError):
    """Operands belong to different algebras."""


@dataclass(frozen=True)
class AlgebraSpec:
    """Atom names in declaration order; the algebra is their powerset."""

    atoms: tuple[str, ...]
    max_atoms: int = field(default=DEFAULT_MAX_ATOMS, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "atoms", tuple(self.atoms))
        if len(self.atoms) < 1:
            raise ValueError("an algebra needs at least one atom")
        if len(self.atoms) > self.max_atoms:
            raise ValueError(
                f"{len(self.atoms)} atoms exceed the configured maximum {self.max_atoms}"
            )
        seen: set[str] = set()
        for name in self.atoms:
            if not isinstance(name, str) or not name.isidentifier():
                raise ValueError(f"bad atom name: {name!r}")
            if name in seen:
                raise ValueError(f"duplicate atom name: {name!r}")
            seen.add(name)

    @property
    def k(self) -> int:
        return len(self.atoms)

    def element(self, names: Iterable[str] = ()) -> Element:
        return Element(self, frozenset(names))

    def bottom(self) -> Element:
        return self.element()

    def top(self) -> Element:
        return self.element(self.atoms)


@dataclass(frozen=True)
class Element:
    """A subset of its algebra's atoms; equal iff the atom sets are equal."""

    algebra: AlgebraSpec
    atoms: frozenset[str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "atoms", frozenset(self.atoms))
        stray = self.atoms - set(self.algebra.atoms)
        if stray:
            raise ValueError(f"atoms not declared in the algebra: {sorted(stray)}")

    def __str__(self) -> str:
        ordered = [a for a in self.algebra.atoms if a in self.atoms]
        return "{" + ",".join(ordered) + "}"


def _same_algebra(x: Element, y: Element) -> None:
    if x.algebra != y.algebra:
        raise AlgebraMismatch(f"algebra mismatch: {x.algebra.atoms} vs {y.algebra.atoms}")


def meet(x: Element, y: Element) -> Element:
    _same_algebra(x, y)
    return Element(x.algebra, x.atoms & y.atoms)


def join(x: Element, y: Element) -> Element:
    _same_algebra(x, y)
    return Element(x.algebra, x.atoms | y.atoms)


def complement(x: Element) -> Element:
    return Element(x.algebra, frozenset(x.algebra.atoms) - x.atoms)


def leq(x: Element, y: Element) -> bool:
    _same_algebra(x, y)
    return x.atoms <= y.atoms


def element_index(x: Element) -> int:
    """Position of x in the binary-counting enumeration (atom i is bit i)."""
    return sum(1 << i for i, a in enumerate(x.algebra.atoms) if a in x.atoms)


def enumerate_elements(spec: AlgebraSpec) -> Iterator[Element]:
    """All 2^k elements, in binary-counting order over atom positions."""
    for index in range(1 << spec.k):
        yield Element(spec, frozenset(a for i, a in enumerate(spec.atoms) if index >> i & 1))


def element_to_json(x: Element) -> list[str]:
    return [a for a in x.algebra.atoms if a in x.atoms]


def element_from_json(spec: AlgebraSpec, data: Iterable[str]) -> Element:
    if isinstance(data, str):
        raise ValueError("an element is a list of atom names, not a string")
    return spec.element(data)


def algebra_to_json(spec: AlgebraSpec) -> dict:
    return {"atoms": list(spec.atoms)}


def algebra_from_json(data: dict) -> AlgebraSpec:
    if not isinstance(data, dict) or "atoms" not in data:
        raise ValueError('an algebra is {"atoms": [names]}')
    return AlgebraSpec(tuple(data["atoms"]))
