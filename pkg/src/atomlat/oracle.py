"""Independent verification oracles.

Two oracles decide term entailment without touching atoms or crossing: one by
deductive closure over all canonical terms, one by brute-force enumeration of
semilattice congruences. They exist so the crossing engine can be checked
against machinery that shares none of its code paths. A third entry point
checks a model directly against the defining axioms.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import Duple, Signature, Term, bit_indices
from .errors import CapExceeded, SignatureMismatch
from .model import ENUM_CAP_DEFAULT, Model, holds, segment_signatures


def closure_oracle(
    sig: Signature,
    positives: tuple[Duple, ...] | list[Duple] = (),
    cap: int = ENUM_CAP_DEFAULT,
) -> frozenset[Duple]:
    """The least entailment relation on all terms over the signature.

    Starts from the containment pairs (components of the left term inside the
    right) plus the given positives, then iterates to a genuine fixed point
    under transitivity and join-monotonicity (s <= t entails s+u <= t+u).
    Monotonicity is applied one constant at a time; together with transitivity
    that reaches the same fixed point as arbitrary-term monotonicity, since u
    can be joined in constant by constant.

    Returns the relation as a set of positive duples.
    """
    n = len(sig)
    if n > cap:
        raise CapExceeded(f"{n} constants exceed the enumeration cap of {cap}")
    full = sig.full_mask
    # rows[s] has bit t set when s <= t is derived; bit positions are term masks.
    rows = [0] * (full + 1)
    for s in range(1, full + 1):
        t = s
        while True:
            rows[s] |= 1 << t
            if t == full:
                break
            t = (t + 1) | s
    fresh: list[tuple[int, int]] = []
    for d in positives:
        if (d.left.mask | d.right.mask) & ~full:
            raise SignatureMismatch("duple uses constants outside the signature")
        bit = 1 << d.right.mask
        if not rows[d.left.mask] & bit:
            rows[d.left.mask] |= bit
            fresh.append((d.left.mask, d.right.mask))
    # Only pairs beyond the containment seed can produce anything new:
    # monotonicity maps containment pairs to containment pairs, which are all
    # present from the start. Each new pair is expanded exactly once, and
    # transitive closure over the full rows runs after every batch.
    constant_bits = [1 << i for i in range(n)]
    while fresh:
        batch = fresh
        fresh = []
        for s, t in batch:
            for c in constant_bits:
                s2 = s | c
                t2 = t | c
                bit = 1 << t2
                if not rows[s2] & bit:
                    rows[s2] |= bit
                    fresh.append((s2, t2))
        stable = False
        while not stable:
            stable = True
            for s in range(1, full + 1):
                row = rows[s]
                acc = row
                rest = row
                while rest:
                    low = rest & -rest
                    rest ^= low
                    acc |= rows[low.bit_length() - 1]
                new = acc & ~row
                if new:
                    rows[s] = acc
                    stable = False
                    for t in bit_indices(new):
                        fresh.append((s, t))
    return frozenset(
        Duple(Term(s), Term(t))
        for s in range(1, full + 1)
        for t in bit_indices(rows[s])
    )


def _set_partitions(count: int):
    """Yield all partitions of range(count) as restricted-growth strings."""
    assignment = [0] * count

    def grow(position: int, next_class: int):
        if position == count:
            yield tuple(assignment)
            return
        for cls in range(next_class + 1):
            assignment[position] = cls
            yield from grow(position + 1, max(next_class, cls + 1))

    yield from grow(0, 0)


@lru_cache(maxsize=None)
def _semilattice_congruences(n: int) -> tuple[tuple[int, ...], ...]:
    """All congruences of the free semilattice on n generators.

    Each congruence is returned as a table indexed by term mask (entry 0
    unused) giving the class id of the term. A partition is a congruence when
    joining any term onto two equivalent terms lands them in one class.
    """
    full = (1 << n) - 1
    terms = list(range(1, full + 1))
    found = []
    for assignment in _set_partitions(len(terms)):
        table = [0] * (full + 1)
        for idx, t in enumerate(terms):
            table[t] = assignment[idx]
        members: dict[int, list[int]] = {}
        for t in terms:
            members.setdefault(table[t], []).append(t)
        ok = True
        for group in members.values():
            first = group[0]
            for other in group[1:]:
                if any(table[first | u] != table[other | u] for u in terms):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(tuple(table))
    return tuple(found)


def congruence_oracle(
    sig: Signature,
    positives: tuple[Duple, ...] | list[Duple] = (),
) -> frozenset[Duple]:
    """Entailment by quantifying over every congruence quotient.

    Enumerates all semilattice congruences of the free model over the
    signature, keeps those whose quotient satisfies the positives, and
    declares s <= t exactly when it holds in every surviving quotient. Only
    feasible for up to three constants, where the free model has at most
    seven elements.
    """
    n = len(sig)
    if n > 3:
        raise CapExceeded("the congruence oracle only runs on up to 3 constants")
    full = sig.full_mask
    for d in positives:
        if (d.left.mask | d.right.mask) & ~full:
            raise SignatureMismatch("duple uses constants outside the signature")
    valid = [
        table
        for table in _semilattice_congruences(n)
        if all(table[d.left.mask | d.right.mask] == table[d.right.mask] for d in positives)
    ]
    pairs = []
    for s in range(1, full + 1):
        for t in range(1, full + 1):
            if all(table[s | t] == table[t] for table in valid):
                pairs.append(Duple(Term(s), Term(t)))
    return frozenset(pairs)


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    passed: bool
    note: str


@dataclass(frozen=True)
class AxiomReport:
    checks: tuple[AxiomCheck, ...]

    @property
    def ok(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> tuple[AxiomCheck, ...]:
        return tuple(check for check in self.checks if not check.passed)


def axiom_check(model: Model, cap: int = ENUM_CAP_DEFAULT) -> AxiomReport:
    """Check the defining axioms directly on a model's atom set.

    Intended for models built by hand (bypassing the canonical constructor),
    where coverage or deduplication may fail. The order and linearity checks
    enumerate all terms, so the signature must fit under the cap.
    """
    n = len(model.sig)
    if n > cap:
        raise CapExceeded(f"{n} constants exceed the enumeration cap of {cap}")
    full = model.sig.full_mask
    masks = [atom.mask for atom in model.atoms]

    in_range = all(0 < m and m & ~full == 0 for m in masks)
    checks = [
        AxiomCheck(
            "atoms-nonempty",
            in_range,
            "every atom sits below at least one signature constant",
        ),
        AxiomCheck(
            "no-element-below-atom",
            True,
            "structurally guaranteed: regular elements exist only as term classes",
        ),
    ]

    segs = segment_signatures(model) if in_range else None
    if segs is None:
        order_ok = False
        linear_ok = False
        order_note = "skipped: atom masks invalid"
        linear_note = order_note
    else:
        order_ok = True
        for left in range(1, full + 1):
            for right in range(1, full + 1):
                direct = holds(model, Duple(Term(left), Term(right)).signed(True))
                if direct != (segs[left] & ~segs[right] == 0):
                    order_ok = False
                    break
            if not order_ok:
                break
        order_note = "term order agrees with atom discrimination on every pair"
        linear_ok = True
        for s in range(1, full + 1):
            for t in range(1, full + 1):
                if segs[s | t] != segs[s] | segs[t]:
                    linear_ok = False
                    break
            if not linear_ok:
                break
        linear_note = "segment of a sum is the union of the segments"
    checks.append(AxiomCheck("order-from-atoms", order_ok, order_note))
    checks.append(AxiomCheck("sum-linearity", linear_ok, linear_note))
    checks.append(
        AxiomCheck(
            "atoms-distinct",
            len(set(masks)) == len(masks),
            "no two atoms share an upper constant segment",
        )
    )
    covered = 0
    for m in masks:
        covered |= m
    checks.append(
        AxiomCheck(
            "constants-covered",
            covered == full,
            "every constant has an atom below it",
        )
    )
    return AxiomReport(tuple(checks))
