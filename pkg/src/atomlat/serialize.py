"""JSON documents and DOT diagrams."""

from __future__ import annotations

import json

from .algebra import Decomposition, RenameMap
from .core import Signature, Term, bit_indices
from .model import ENUM_CAP_DEFAULT, Model, enumerate_elements, new_model, segment_signatures


def model_to_dict(model: Model) -> dict:
    return {
        "constants": list(model.sig.names),
        "atoms": [list(atom.names(model.sig)) for atom in model.atoms],
    }


def model_from_dict(doc) -> Model:
    if not isinstance(doc, dict) or set(doc) != {"constants", "atoms"}:
        raise ValueError("model document needs exactly the keys 'constants' and 'atoms'")
    sig = Signature.of(doc["constants"])
    return new_model(sig, (sig.atom(names) for names in doc["atoms"]))


def model_to_json(model: Model) -> str:
    return json.dumps(model_to_dict(model), indent=2) + "\n"


def model_from_json(text: str) -> Model:
    return model_from_dict(json.loads(text))


def rename_map_from_dict(doc) -> RenameMap:
    if not isinstance(doc, dict) or set(doc) != {"map", "targets"}:
        raise ValueError("rename document needs exactly the keys 'map' and 'targets'")
    return RenameMap.of(doc["map"], doc["targets"])


def rename_map_from_json(text: str) -> RenameMap:
    return rename_map_from_dict(json.loads(text))


def decomposition_to_dict(dec: Decomposition) -> dict:
    sig = dec.source.sig
    return {
        "constants": list(sig.names),
        "components": [
            {
                "atom": list(component.atom.names(sig)),
                "top": component.top_name,
                "bottom": component.bottom_name,
            }
            for component in dec.components
        ],
        "generators": {name: list(coords) for name, coords in dec.generators},
    }


def embedding_to_dict(model: Model, free_sig: Signature, terms: tuple[Term, ...]) -> dict:
    return {
        "constants": list(free_sig.names),
        "generators": {
            name: list(term.names(free_sig))
            for name, term in zip(model.sig.names, terms)
        },
    }


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def model_to_dot(model: Model, cap: int = ENUM_CAP_DEFAULT) -> str:
    """The Hasse diagram of the element classes.

    Nodes are element classes labelled by their representative term; edges
    are covering relations. Atoms appear as an ``atoms`` attribute listing
    the lower atomic segment of each node, not as nodes of their own.
    """
    classes = enumerate_elements(model, cap)
    segs = segment_signatures(model)
    class_seg = [segs[cls.representative.mask] for cls in classes]
    below = []
    for x, seg_x in enumerate(class_seg):
        row = 0
        for y, seg_y in enumerate(class_seg):
            if x != y and seg_x & ~seg_y == 0:
                row |= 1 << y
        below.append(row)
    lines = ["digraph {"]
    labels = [_dot_escape(cls.representative.label(model.sig)) for cls in classes]
    for x, cls in enumerate(classes):
        segment = ", ".join(
            "{" + atom.label(model.sig) + "}"
            for atom in model.atoms
            if atom.mask & cls.representative.mask
        )
        lines.append(f'  "{labels[x]}" [atoms="{_dot_escape(segment)}"];')
    for x in range(len(classes)):
        skip = 0
        for z in bit_indices(below[x]):
            skip |= below[z]
        for y in bit_indices(below[x] & ~skip):
            lines.append(f'  "{labels[x]}" -> "{labels[y]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


