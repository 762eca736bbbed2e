"""Deterministic numeric/JSON rendering shared by reports and the CLI."""

from __future__ import annotations

import json

__all__ = ["fmt_float", "json_scalar"]


def fmt_float(x: float) -> str:
    """Fixed 15-significant-digit decimal rendering."""
    return f"{x:.15g}"


def json_scalar(x) -> str:
    """Render one JSON scalar; floats at 15 significant digits."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if x is None:
        return "null"
    if isinstance(x, float):
        return fmt_float(x)
    if isinstance(x, int):
        return str(x)
    return json.dumps(x)
