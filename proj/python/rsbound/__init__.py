"""Exact computations with surface group representations over Q(X)."""

import json

from ._rsbound import (
    DegreeBoundExceeded,
    Flags,
    ParseError,
    RepresentationError,
    SchemaError,
    TransversalityError,
    canonical,
    commands,
    crossratio,
    distance,
    is_symplectic,
    jordan,
    maslov,
    pants_images,
    sign,
    translation_length,
    valuation,
)
from ._rsbound import pants_document as _pants_document
from ._rsbound import run_json as _run_json

__all__ = [
    "DegreeBoundExceeded",
    "Flags",
    "ParseError",
    "RepresentationError",
    "SchemaError",
    "TransversalityError",
    "canonical",
    "commands",
    "crossratio",
    "distance",
    "is_symplectic",
    "jordan",
    "maslov",
    "pants_document",
    "pants_images",
    "run",
    "sign",
    "translation_length",
    "valuation",
]


def pants_document(order="aplus:0"):
    return json.loads(_pants_document(order))


def run(command, input=None, **flags):
    """Run a CLI subcommand in process and return its result object.

    Keyword arguments are the CLI flags with dashes as underscores,
    e.g. run("closed-point", doc, order="aplus:1", radius=4).
    """
    f = Flags()
    for key, value in flags.items():
        if not hasattr(f, key):
            raise TypeError(f"unknown flag {key!r}")
        setattr(f, key, value)
    text = "" if input is None else json.dumps(input)
    return json.loads(_run_json(command, text, f))
