import random

import pytest

from illoc import AlgebraSpec
from illoc.syntax import And, Atom, Force, Implies, Not, Or


@pytest.fixture
def k1():
    return AlgebraSpec(("a",))


@pytest.fixture
def k2():
    return AlgebraSpec(("a", "b"))


@pytest.fixture
def k3():
    return AlgebraSpec(("a", "b", "c"))


ATOM_POOL = ("p", "q", "r", "s0", "x_1")
FORCE_POOL = ("think", "promise", "order", "f", "g2")


def random_formula(rng: random.Random, depth: int, atoms=ATOM_POOL, forces=FORCE_POOL):
    """Random act-free formula of the given maximum depth."""
    if depth <= 0:
        return Atom(rng.choice(atoms))
    kind = rng.randrange(6)
    if kind == 0:
        return Atom(rng.choice(atoms))
    if kind == 1:
        return Not(random_formula(rng, depth - 1, atoms, forces))
    if kind == 2:
        return And(random_formula(rng, depth - 1, atoms, forces),
                   random_formula(rng, depth - 1, atoms, forces))
    if kind == 3:
        return Or(random_formula(rng, depth - 1, atoms, forces),
                  random_formula(rng, depth - 1, atoms, forces))
    if kind == 4:
        return Implies(random_formula(rng, depth - 1, atoms, forces),
                       random_formula(rng, depth - 1, atoms, forces))
    return Force(rng.choice(forces), random_formula(rng, depth - 1, atoms, forces))


def random_force_free(rng: random.Random, depth: int, atoms=("p", "q")):
    """Random formula over atoms and connectives only."""
    if depth <= 0:
        return Atom(rng.choice(atoms))
    kind = rng.randrange(5)
    if kind == 0:
        return Atom(rng.choice(atoms))
    if kind == 1:
        return Not(random_force_free(rng, depth - 1, atoms))
    if kind == 2:
        return And(random_force_free(rng, depth - 1, atoms),
                   random_force_free(rng, depth - 1, atoms))
    if kind == 3:
        return Or(random_force_free(rng, depth - 1, atoms),
                  random_force_free(rng, depth - 1, atoms))
    return Implies(random_force_free(rng, depth - 1, atoms),
                   random_force_free(rng, depth - 1, atoms))
