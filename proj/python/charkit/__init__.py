"""Exact character tables and classification of irreducible characters."""

import json

from ._charkit import (
    CapExceeded,
    CharacterTable,
    CharkitError,
    Cyclotomic,
    Group,
    ParseError,
    character_table,
    check_ids,
    default_catalog,
    group,
)
from . import _charkit

__all__ = [
    "CapExceeded",
    "CharacterTable",
    "CharkitError",
    "Cyclotomic",
    "Group",
    "ParseError",
    "character_table",
    "check_ids",
    "classify",
    "default_catalog",
    "group",
    "verify",
]


def _as_group(g):
    return group(g) if isinstance(g, str) else g


def classify(g):
    """Classification report of every irreducible character, as a dict."""
    return json.loads(_charkit.classify_json(_as_group(g)))


def verify(catalog=None, checks=None, max_order=None, seed=1):
    """Run the check suite; returns one dict per (group, check) pair."""
    catalog = default_catalog() if catalog is None else list(catalog)
    checks = check_ids() if checks is None else list(checks)
    lines = _charkit.verify_json_lines(catalog, checks, seed=seed, max_order=max_order)
    return [json.loads(line) for line in lines.splitlines()]
