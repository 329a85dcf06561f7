"""The full-crossing engine.

Crossing a positive duple replaces the atoms that falsify it (the
discriminant) with their unions against every atom below the right-hand term.
Iterating over a list of duples, starting from the singleton atoms, builds
the freest model of those sentences; which is also how consistency of a mixed
positive/negative sentence set is decided.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Atom, Duple, Signature, Term
from .errors import SignatureMismatch
from .model import Model, discriminant, holds, new_model, reduce

REDUCE_POLICIES = ("after_each", "at_end", "never")


def full_crossing(model: Model, r: Duple) -> Model:
    """The freest model satisfying the model's positive theory plus ``r``.

    If the duple already holds, the model is returned unchanged. Otherwise
    the discriminant atoms are replaced by their unions with every atom below
    the right term; duplicates produced by the union grid merge immediately.
    """
    full = model.sig.full_mask
    if (r.left.mask | r.right.mask) & ~full:
        raise SignatureMismatch("duple uses constants outside the model's signature")
    moved = {a.mask for a in model.atoms if a.mask & r.left.mask and not a.mask & r.right.mask}
    if not moved:
        return model
    below_right = [a.mask for a in model.atoms if a.mask & r.right.mask]
    masks = {a.mask for a in model.atoms} - moved
    for h in moved:
        for b in below_right:
            masks.add(h | b)
    return new_model(model.sig, (Atom(m) for m in masks))


def freest_model(
    sig: Signature,
    positives: tuple[Duple, ...] | list[Duple] = (),
    reduce_policy: str = "after_each",
) -> Model:
    """Cross the positive duples, in order, into the singleton-atom model.

    The result atomizes the freest model of the given sentences. The policy
    only controls when redundant atoms are dropped; the semilattice itself is
    independent of it, and of the duple order.
    """
    if reduce_policy not in REDUCE_POLICIES:
        raise ValueError(f"reduce_policy must be one of {REDUCE_POLICIES}")
    model = new_model(sig, (Atom(1 << i) for i in range(len(sig))))
    for r in positives:
        model = full_crossing(model, r)
        if reduce_policy == "after_each":
            model = reduce(model)
    if reduce_policy == "at_end":
        model = reduce(model)
    return model


@dataclass(frozen=True)
class ConsistencyReport:
    """Outcome of checking negative sentences against crossed positives."""

    model: Model
    satisfiable: tuple[Duple, ...]
    entailed: tuple[Duple, ...]

    @property
    def consistent(self) -> bool:
        return not self.entailed


def check_consistency(
    sig: Signature,
    positives: tuple[Duple, ...] | list[Duple],
    negatives: tuple[Duple, ...] | list[Duple],
) -> ConsistencyReport:
    """Decide which negatives survive alongside the positives.

    A negative duple is satisfiable together with the positives exactly when
    it still fails in their freest model; if the positives force it, keeping
    it negative is inconsistent.
    """
    model = freest_model(sig, tuple(positives))
    satisfiable = []
    entailed = []
    for r in negatives:
        if holds(model, r.signed(True)):
            entailed.append(r)
        else:
            satisfiable.append(r)
    return ConsistencyReport(model, tuple(satisfiable), tuple(entailed))
