"""Canonical JSON serialization shared by layout, render, service and CLI.

Floats are quantized to 9 significant digits before encoding so that
documents are byte-stable and diff-friendly; key order is insertion order.
"""

from __future__ import annotations

import json
from typing import Any


def round9(x: float) -> float:
    return float(format(x, ".9g"))


def _quantize(value: Any) -> Any:
    if isinstance(value, float):
        return round9(value)
    if isinstance(value, dict):
        return {k: _quantize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_quantize(v) for v in value]
    return value


def dumps(doc: Any) -> str:
    return json.dumps(
        _quantize(doc), separators=(",", ":"), ensure_ascii=False, allow_nan=False
    )
