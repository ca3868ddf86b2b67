"""JSON schemas for every JSON document the command line emits."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

import jsonschema

NAMES = ("words", "counts", "distribution", "series", "verification", "mapped", "dyck", "conformance",
         "registry")


@lru_cache(maxsize=None)
def load(name: str) -> dict:
    if name not in NAMES:
        raise KeyError(f"unknown schema {name!r}")
    return json.loads(resources.files(__package__).joinpath(f"{name}.json").read_text(encoding="utf-8"))


def validate(obj, name: str) -> None:
    """Raise ``jsonschema.ValidationError`` if ``obj`` does not match schema ``name``."""
    jsonschema.validate(obj, load(name))
