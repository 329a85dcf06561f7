"""Shared helpers for the test suite.

Models built here bypass the coverage repair in ``new_model`` on purpose:
random generators guarantee coverage by construction, and golden fixtures
sometimes need an exact atom set that the repair pass would extend.
"""

import random

from atomlat.core import Atom, Duple, Signature, Term, canonical_key
from atomlat.model import Model


def sig_of(names):
    return Signature.of(names)


def mk(names, *atom_texts):
    """Build a model from space-separated constant names for each atom."""
    sig = Signature.of(names)
    atoms = sorted((sig.atom(text) for text in atom_texts), key=canonical_key)
    return Model(sig, tuple(atoms))


def duple(sig, left, right):
    return Duple(sig.term(left), sig.term(right))


def random_term(rng, n, max_side=3):
    mask = 0
    for _ in range(rng.randint(1, max_side)):
        mask |= 1 << rng.randrange(n)
    return Term(mask)


def random_duple(rng, n, max_side=3):
    return Duple(random_term(rng, n, max_side), random_term(rng, n, max_side))


def random_model(rng, names, max_atoms=6, ensure_singleton=False):
    """Random covered model; optionally force a singleton atom in.

    The singleton keeps the reduced model away from the all-constants
    atom alone, which matters for decomposition tests.
    """
    sig = Signature.of(names)
    n = len(sig.names)
    full = (1 << n) - 1
    masks = {rng.randint(1, full) for _ in range(rng.randint(1, max_atoms))}
    if ensure_singleton:
        masks.add(1 << rng.randrange(n))
    covered = 0
    for mask in masks:
        covered |= mask
    if covered != full:
        masks.add(full)
    atoms = sorted((Atom(mask) for mask in masks), key=canonical_key)
    return Model(sig, tuple(atoms))


def seeded(seed):
    return random.Random(seed)
