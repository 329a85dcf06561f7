"""Structural constructions over atomized models.

Everything here is built from two primitives: renaming constants (each source
constant maps to a set of target constants, possibly empty, applied to every
atom's upper segment) and full crossing. Restriction, quotients, joins,
subalgebras, products, the embedding into a free model and the subdirect
decomposition are all short compositions of those two.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .core import Atom, Duple, Signature, Term, bit_indices, zero_atom
from .errors import (
    EmptyRestrictionSet,
    NameCollision,
    RenameMapIncomplete,
    TrivialModel,
    UnknownConstant,
    UnknownTargetConstant,
)
from .crossing import full_crossing
from .model import Model, is_redundant, new_model, reduce


@dataclass(frozen=True, eq=False)
class RenameMap:
    """Maps each source constant name to a set of target constant names.

    An empty target set deletes the constant from every atom; an atom whose
    upper segment maps to the empty set is annihilated.
    """

    target: Signature
    mapping: Mapping[str, tuple[str, ...]]

    @classmethod
    def of(
        cls,
        mapping: Mapping[str, Iterable[str]],
        targets: str | Iterable[str],
    ) -> "RenameMap":
        target = Signature.of(targets)
        fixed = {}
        for source, names in mapping.items():
            names = tuple(names)
            for name in names:
                if name not in target:
                    raise UnknownTargetConstant(
                        f"{source!r} maps to {name!r}, which the target signature lacks"
                    )
            fixed[source] = names
        return cls(target, fixed)


def rename(model: Model, rmap: RenameMap) -> Model:
    """Apply a rename map to every atom's upper segment.

    The map must cover every source constant. Atoms mapping to the empty set
    disappear; duplicate images merge; if a target constant ends up uncovered
    the usual zero-atom repair fires with its warning.
    """
    extra = set(rmap.mapping) - set(model.sig.names)
    if extra:
        raise UnknownConstant(
            f"rename map mentions constants not in the model: {sorted(extra)}"
        )
    image_masks = []
    for name in model.sig.names:
        if name not in rmap.mapping:
            raise RenameMapIncomplete(f"no target set for constant {name!r}")
        image_masks.append(rmap.target.mask_of_names(rmap.mapping[name]))
    atoms = []
    for atom in model.atoms:
        image = 0
        for i in bit_indices(atom.mask):
            image |= image_masks[i]
        if image:
            atoms.append(Atom(image))
    return new_model(rmap.target, atoms)


def restrict(model: Model, keep: str | Iterable[str]) -> Model:
    """The subalgebra generated by a subset of the constants.

    Each atom's upper segment is intersected with the kept constants; empty
    intersections drop the atom. The kept constants retain their original
    relative order.
    """
    if isinstance(keep, str):
        keep = keep.split()
    wanted = {model.sig.index_of(name) for name in keep}
    if not wanted:
        raise EmptyRestrictionSet("restriction needs at least one constant")
    return _restrict_to_indices(model, sorted(wanted))


def _restrict_to_indices(model: Model, indices: list[int]) -> Model:
    sub_sig = Signature(tuple(model.sig.names[i] for i in indices))
    positions = {old: new for new, old in enumerate(indices)}
    atoms = []
    for atom in model.atoms:
        image = 0
        for i in bit_indices(atom.mask):
            if i in positions:
                image |= 1 << positions[i]
        if image:
            atoms.append(Atom(image))
    return new_model(sub_sig, atoms)


def quotient(model: Model, a: Term, b: Term) -> Model:
    """The quotient by the principal congruence identifying two terms.

    Computed by crossing both directions: first b <= a, then a <= b.
    """
    return full_crossing(full_crossing(model, Duple(b, a)), Duple(a, b))


def _shift_atoms(model: Model, offset: int) -> list[Atom]:
    return [Atom(atom.mask << offset) for atom in model.atoms]


def _fresh_prime(name: str, taken: set[str]) -> str:
    fresh = name + "'"
    while fresh in taken:
        fresh += "'"
    return fresh


def join(m: Model, n: Model) -> Model:
    """The freest model over the merged constants satisfying both theories.

    With disjoint constant sets this is just the union of the atom sets. A
    shared constant c is first split: n's copy is renamed to a fresh primed
    name c', the models are united over the extended signature, c = c' is
    enforced by crossing both directions, and the primes are restricted away.
    """
    shared = [name for name in n.sig.names if name in m.sig]
    offset = len(m.sig)
    if not shared:
        ext = Signature(m.sig.names + n.sig.names)
        return new_model(ext, list(m.atoms) + _shift_atoms(n, offset))
    taken = set(m.sig.names) | set(n.sig.names)
    primed = {}
    for name in shared:
        primed[name] = _fresh_prime(name, taken)
        taken.add(primed[name])
    ext = Signature(m.sig.names + tuple(primed.get(name, name) for name in n.sig.names))
    crossed = new_model(ext, list(m.atoms) + _shift_atoms(n, offset))
    for name in shared:
        original = Term(1 << m.sig.index_of(name))
        copy = Term(1 << (offset + n.sig.index_of(name)))
        crossed = full_crossing(crossed, Duple(copy, original))
        crossed = full_crossing(crossed, Duple(original, copy))
    kept = [i for i, name in enumerate(ext.names) if name not in primed.values()]
    return _restrict_to_indices(crossed, kept)


SUBALGEBRA_ROUTES = ("rename", "crossing")


def subalgebra(
    model: Model,
    generators: Sequence[Term],
    names: str | Sequence[str],
    route: str = "rename",
) -> Model:
    """The subalgebra generated by the given terms, one fresh name per term.

    The rename route maps each source constant onto the names of the
    generators containing it. The crossing route adjoins the fresh names as
    free constants, forces each equal to its generator term by crossing both
    directions, and restricts to the fresh names. Both atomize the same
    semilattice and agree after reduction.
    """
    if isinstance(names, str):
        names = names.split()
    names = tuple(names)
    generators = tuple(generators)
    if route not in SUBALGEBRA_ROUTES:
        raise ValueError(f"route must be one of {SUBALGEBRA_ROUTES}")
    if len(names) != len(generators):
        raise ValueError("need exactly one name per generator term")
    if len(set(names)) != len(names):
        raise NameCollision(f"repeated generator name in {names}")
    for name in names:
        if name in model.sig:
            raise NameCollision(f"generator name {name!r} already in the signature")
    full = model.sig.full_mask
    for term in generators:
        if term.mask & ~full:
            raise UnknownConstant("generator term uses constants outside the signature")

    if route == "rename":
        target = Signature(names)
        image_masks = []
        for k in range(len(model.sig)):
            image = 0
            for i, term in enumerate(generators):
                if term.mask >> k & 1:
                    image |= 1 << i
            image_masks.append(image)
        atoms = []
        for atom in model.atoms:
            image = 0
            for i in bit_indices(atom.mask):
                image |= image_masks[i]
            if image:
                atoms.append(Atom(image))
        return new_model(target, atoms)

    offset = len(model.sig)
    ext = Signature(model.sig.names + names)
    crossed = new_model(
        ext,
        list(model.atoms) + [Atom(1 << (offset + i)) for i in range(len(names))],
    )
    for i, term in enumerate(generators):
        fresh = Term(1 << (offset + i))
        crossed = full_crossing(crossed, Duple(term, fresh))
        crossed = full_crossing(crossed, Duple(fresh, term))
    return _restrict_to_indices(crossed, list(range(offset, offset + len(names))))


def product(m: Model, n: Model, identify_diagonal: bool = False) -> Model:
    """The product model, over one constant per pair of source constants.

    The pair (a, b) becomes the constant "a*b". Each m-atom spreads over the
    rows of the pair grid, each n-atom over the columns, and the product is
    the union of the two spreads. Constants shared between the operands are
    treated as disjoint; with ``identify_diagonal`` each shared c is glued
    back in by renaming "c*c" to c.
    """
    n_count = len(n.sig)
    pair_names = tuple(
        f"{a}*{b}" for a in m.sig.names for b in n.sig.names
    )
    grid = Signature(pair_names)
    row_masks = []
    for i in range(len(m.sig)):
        row = 0
        for j in range(n_count):
            row |= 1 << (i * n_count + j)
        row_masks.append(row)
    col_masks = []
    for j in range(n_count):
        col = 0
        for i in range(len(m.sig)):
            col |= 1 << (i * n_count + j)
        col_masks.append(col)
    atoms = []
    for atom in m.atoms:
        image = 0
        for i in bit_indices(atom.mask):
            image |= row_masks[i]
        atoms.append(Atom(image))
    for atom in n.atoms:
        image = 0
        for j in bit_indices(atom.mask):
            image |= col_masks[j]
        atoms.append(Atom(image))
    result = new_model(grid, atoms)
    if not identify_diagonal:
        return result
    shared = [name for name in m.sig.names if name in n.sig]
    if not shared:
        return result
    diagonal = {f"{name}*{name}": name for name in shared}
    mapping = {g: (diagonal.get(g, g),) for g in grid.names}
    target_names = tuple(diagonal.get(g, g) for g in grid.names)
    return rename(result, RenameMap.of(mapping, target_names))


@dataclass(frozen=True)
class SubdirectComponent:
    """A two-element factor of the subdirect decomposition.

    The component model has one constant strictly below the other: the atom
    under ``top_name`` alone pins the order, the one under both is the zero.
    """

    atom: Atom
    top_name: str
    bottom_name: str

    def component_model(self) -> Model:
        sig = Signature((self.top_name, self.bottom_name))
        return Model(sig, (Atom(0b01), Atom(0b11)))


@dataclass(frozen=True)
class Decomposition:
    """A reduced model presented inside a product of two-element factors."""

    source: Model
    components: tuple[SubdirectComponent, ...]
    generators: tuple[tuple[str, tuple[str, ...]], ...]

    def generator_for(self, name: str) -> tuple[str, ...]:
        for constant, coords in self.generators:
            if constant == name:
                return coords
        raise UnknownConstant(f"constant {name!r} is not in the decomposed model")


def subdirect_decomposition(model: Model) -> Decomposition:
    """Present the model as a subdirect product of two-element semilattices.

    One component per non-zero atom of the reduced model. The tuple for a
    constant takes the component's top name when the atom lies below the
    constant and the bottom name otherwise. Rebuilding the product of the
    components and taking the subalgebra generated by the tuples recovers the
    model's theory.
    """
    red = reduce(model)
    full = red.sig.full_mask
    picked = [atom for atom in red.atoms if atom.mask != full]
    if not picked:
        raise TrivialModel("the one-element model has no subdirect decomposition")
    components = tuple(
        SubdirectComponent(atom, f"z{j + 1}", f"zb{j + 1}")
        for j, atom in enumerate(picked)
    )
    generators = []
    for i, name in enumerate(red.sig.names):
        coords = tuple(
            comp.top_name if comp.atom.mask >> i & 1 else comp.bottom_name
            for comp in components
        )
        generators.append((name, coords))
    return Decomposition(red, components, tuple(generators))


def embed_in_free(model: Model) -> tuple[Signature, tuple[Term, ...]]:
    """One free constant per atom; each source constant becomes a term.

    The term for constant c sums exactly the constants standing for the atoms
    below c. The subalgebra of the free model over the returned signature
    generated by the returned terms reproduces the model.
    """
    free_sig = Signature(tuple(f"z{k + 1}" for k in range(len(model.atoms))))
    terms = []
    for i in range(len(model.sig)):
        mask = 0
        for k, atom in enumerate(model.atoms):
            if atom.mask >> i & 1:
                mask |= 1 << k
        terms.append(Term(mask))
    return free_sig, tuple(terms)


def restriction_homomorphism_exists(model: Model, keep: str | Iterable[str]) -> bool:
    """Whether restriction to the kept constants extends to a homomorphism.

    Holds exactly when the zero atom of the restriction is non-redundant
    there; equivalently, when the restriction has a bottom constant.
    """
    restricted = restrict(model, keep)
    return not is_redundant(restricted, zero_atom(restricted.sig))
