"""Atomized models over a signature.

A model is a deduplicated, canonically ordered set of atoms. The atoms fully
determine the order between terms: t <= s holds exactly when every atom below
t is also below s, where "atom below term" means the atom's upper constant
segment meets the term's components. Everything in this module is a pure
function of immutable values.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable

from .core import Atom, Duple, Signature, SignedDuple, Term, bit_indices, canonical_key, zero_atom
from .errors import CapExceeded, CoverageRepairWarning, SignatureMismatch

ENUM_CAP_DEFAULT = 10


@dataclass(frozen=True)
class Model:
    """An atomized model: a signature plus canonically ordered atoms.

    Build through :func:`new_model`, which deduplicates, sorts and repairs
    constant coverage; direct construction performs no checks.
    """

    sig: Signature
    atoms: tuple[Atom, ...]

    def covered_mask(self) -> int:
        out = 0
        for atom in self.atoms:
            out |= atom.mask
        return out

    def __repr__(self) -> str:
        inner = ", ".join(atom.label(self.sig) for atom in self.atoms)
        return f"Model<{' '.join(self.sig.names)}>[{inner}]"


@dataclass(frozen=True)
class ElementClass:
    """A class of terms naming the same element; the representative is the
    largest member (term classes are closed under the idempotent sum)."""

    representative: Term
    terms: tuple[Term, ...]


@dataclass(frozen=True)
class TheorySlice:
    """Every ordered pair of terms over the signature, classified."""

    sig: Signature
    positives: frozenset[Duple]
    negatives: frozenset[Duple]


def new_model(sig: Signature, atoms: Iterable[Atom] = ()) -> Model:
    """Canonical model constructor.

    Deduplicates the atoms and sorts them canonically. If some constant ends
    up covered by no atom, the zero atom is inserted so that the result is a
    model, and a :class:`CoverageRepairWarning` is emitted.
    """
    full = sig.full_mask
    masks = set()
    for atom in atoms:
        if atom.mask & ~full:
            raise SignatureMismatch(
                f"atom {atom.indices()} uses constants outside the signature"
            )
        masks.add(atom.mask)
    covered = 0
    for mask in masks:
        covered |= mask
    if covered != full:
        uncovered = sig.names_of(full & ~covered)
        warnings.warn(
            f"constants {' '.join(uncovered)} covered by no atom; zero atom inserted",
            CoverageRepairWarning,
            stacklevel=2,
        )
        masks.add(full)
    ordered = sorted((Atom(m) for m in masks), key=canonical_key)
    return Model(sig, tuple(ordered))


def lower_atomic_segment(model: Model, t: Term) -> tuple[Atom, ...]:
    """The atoms of the model below the term, in canonical order."""
    return tuple(atom for atom in model.atoms if atom.mask & t.mask)


def discriminant(model: Model, a: Term, b: Term) -> tuple[Atom, ...]:
    """The atoms below ``a`` but not below ``b``; empty iff a <= b holds."""
    return tuple(
        atom for atom in model.atoms if atom.mask & a.mask and not atom.mask & b.mask
    )


def holds(model: Model, d: SignedDuple) -> bool:
    """Whether the signed duple is satisfied by the model."""
    empty = not discriminant(model, d.left, d.right)
    return empty if d.positive else not empty


def is_redundant(model: Model, phi: Atom) -> bool:
    """Whether ``phi`` adds nothing to the model's atoms.

    An atom is redundant when each constant above it is witnessed by a
    strictly narrower atom of the model; equivalently, when it is a union of
    such atoms. The atom itself need not belong to the model.
    """
    cover = 0
    for eta in model.atoms:
        if eta.mask != phi.mask and eta.mask & ~phi.mask == 0:
            cover |= eta.mask
    return cover == phi.mask


def reduce(model: Model) -> Model:
    """The unique non-redundant atomization of the same semilattice.

    Every atom redundant against the full original atom set is dropped in one
    simultaneous pass; the witnesses of a non-redundant atom are themselves
    non-redundant, so they survive the drop.
    """
    kept = tuple(
        atom for atom in model.atoms if not is_redundant(model, atom)
    )
    if kept == model.atoms:
        return model
    return Model(model.sig, kept)


def union_model(a: Model, b: Model) -> Model:
    """The model atomized by the union of both atom sets."""
    _require_same_sig(a, b)
    return new_model(a.sig, a.atoms + b.atoms)


def is_freer(a: Model, b: Model) -> bool:
    """Whether ``a`` is freer than or as free as ``b``.

    Holds exactly when every atom of ``b`` is an atom of ``a`` or a union of
    atoms of ``a``; equivalently, every negative sentence of ``b`` is a
    negative sentence of ``a``.
    """
    _require_same_sig(a, b)
    for phi in b.atoms:
        cover = 0
        for eta in a.atoms:
            if eta.mask & ~phi.mask == 0:
                cover |= eta.mask
        if cover != phi.mask:
            return False
    return True


def _require_same_sig(a: Model, b: Model):
    if a.sig != b.sig:
        raise SignatureMismatch(
            f"models over {a.sig.names} and {b.sig.names} cannot be combined"
        )


def _check_cap(sig: Signature, cap: int):
    if len(sig) > cap:
        raise CapExceeded(
            f"{len(sig)} constants exceed the enumeration cap of {cap}"
        )


def segment_signatures(model: Model) -> list[int]:
    """For every term mask, a bitmask over atom positions of its segment.

    Index 0 is unused (terms are non-empty). Built in one pass per term using
    linearity: the segment of s + t is the union of the segments.
    """
    per_constant = [0] * len(model.sig)
    for pos, atom in enumerate(model.atoms):
        for i in bit_indices(atom.mask):
            per_constant[i] |= 1 << pos
    out = [0] * (model.sig.full_mask + 1)
    for t in range(1, model.sig.full_mask + 1):
        low = t & -t
        out[t] = out[t ^ low] | per_constant[low.bit_length() - 1]
    return out


def enumerate_elements(model: Model, cap: int = ENUM_CAP_DEFAULT) -> tuple[ElementClass, ...]:
    """Group all terms over the signature by equal lower atomic segments."""
    _check_cap(model.sig, cap)
    segs = segment_signatures(model)
    groups: dict[int, list[int]] = {}
    for t in range(1, model.sig.full_mask + 1):
        groups.setdefault(segs[t], []).append(t)
    classes = []
    for members in groups.values():
        union = 0
        for m in members:
            union |= m
        classes.append(
            ElementClass(
                representative=Term(union),
                terms=tuple(sorted((Term(m) for m in members), key=canonical_key)),
            )
        )
    classes.sort(key=lambda c: canonical_key(c.representative))
    return tuple(classes)


def enumerate_theory(model: Model, cap: int = ENUM_CAP_DEFAULT) -> TheorySlice:
    """Classify every ordered pair of terms over the signature."""
    _check_cap(model.sig, cap)
    segs = segment_signatures(model)
    positives = []
    negatives = []
    for left in range(1, model.sig.full_mask + 1):
        sl = segs[left]
        for right in range(1, model.sig.full_mask + 1):
            pair = Duple(Term(left), Term(right))
            if sl & ~segs[right] == 0:
                positives.append(pair)
            else:
                negatives.append(pair)
    return TheorySlice(model.sig, frozenset(positives), frozenset(negatives))
