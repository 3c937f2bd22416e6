"""High-precision theta-function products, class invariants and identity checks."""

import json

from . import _core
from ._core import (
    ParseError,
    __version__,
    eval_a,
    eval_b,
    eval_invariant,
    eval_nome,
    eval_radical,
    identity_ids,
    registry_ids,
)

__all__ = [
    "ParseError",
    "__version__",
    "eval_a",
    "eval_b",
    "eval_invariant",
    "eval_nome",
    "eval_radical",
    "identity_ids",
    "registry_ids",
    "verify_identity",
    "verify_corollary",
    "reproduce",
    "run_suite",
]


def _records(text):
    lines = [json.loads(line) for line in text.splitlines() if line]
    return {"checks": lines[:-1], "summary": lines[-1]["summary"]}


def verify_identity(identity="all", mode="both", digits=100, series_order=720, probes=None, catalogue=None):
    """Check catalogued identities; returns {"checks": [...], "summary": {...}}."""
    return _records(
        _core._verify_identity(identity, mode, digits, series_order, [str(p) for p in probes or []], catalogue or "")
    )


def verify_corollary(record="all", digits=100, registry=None):
    return _records(_core._verify_corollary(record, digits, registry or ""))


def reproduce(record="all", digits=100, registry=None):
    return _records(_core._reproduce(record, digits, registry or ""))


def run_suite(digits=100, series_order=720, probes=None, catalogue=None, registry=None):
    return _records(
        _core._run_suite(digits, series_order, [str(p) for p in probes or []], catalogue or "", registry or "")
    )
