"""Exact J-function coefficients of flag manifolds from the fermionic recursion."""

import json
import os

from ._core import (
    CacheCorruptError,
    ConfigError,
    ExponentOverflowError,
    InvariantError,
    JfunError,
    MalformedTypeError,
    MismatchError,
    PoleError,
    UnsupportedTypeError,
    cli_run,
    deligne_pair,
    engine_version,
)
from . import _core

_bundled = os.path.join(os.path.dirname(__file__), "jfun.schema.json")
schema_path = _bundled if os.path.exists(_bundled) else _core.schema_path


def schema():
    with open(schema_path) as f:
        return json.load(f)


def _alpha(alpha):
    if isinstance(alpha, str):
        return alpha
    return ",".join(str(int(a)) for a in alpha)


def datum(type_label, unverified_affine=False):
    return json.loads(_core.datum_json(type_label, unverified_affine))


def compute(type_label, alpha, unverified_affine=False):
    """J_alpha as {"alpha", "value" (canonical form), "text"}."""
    return json.loads(_core.compute_json(type_label, _alpha(alpha), unverified_affine))


def stats(type_label, alpha):
    return json.loads(_core.stats_json(type_label, _alpha(alpha)))


def verify_recursion(type_label, height):
    return json.loads(_core.verify_recursion_json(type_label, height))


def run(*args):
    """Run the CLI in-process. Returns (exit_code, stdout, stderr)."""
    return cli_run([str(a) for a in args])


__all__ = [
    "CacheCorruptError", "ConfigError", "ExponentOverflowError", "InvariantError",
    "JfunError", "MalformedTypeError", "MismatchError", "PoleError", "UnsupportedTypeError", "cli_run", "compute",
    "datum", "deligne_pair", "engine_version", "run", "schema", "schema_path", "stats",
    "verify_recursion",
]
