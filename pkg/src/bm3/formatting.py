"""Deterministic number and JSON/CSV rendering for reproducible output.

Numbers print with 15 significant digits, plain decimal inside
[1e-4, 1e6) and lowercase scientific outside, independent of locale, so
fixed inputs always produce byte-identical files.
"""

from __future__ import annotations

import math
from typing import Any, Iterable


def format_number(x: float) -> str:
    """Render a finite float with 15 significant digits."""
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise TypeError(f"expected a real number, got {x!r}")
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot render non-finite value {x!r}")
    if x == 0.0:
        return "0"
    mag = abs(x)
    if 1e-4 <= mag < 1e6:
        exponent = math.floor(math.log10(mag))
        decimals = max(0, 14 - exponent)
        s = f"{x:.{decimals}f}"
        if "." in s:
            s = s.rstrip("0").rstrip(".")
        return s if s not in ("-0", "") else "0"
    s = f"{x:.14e}"
    mantissa, exp = s.split("e")
    if "." in mantissa:
        mantissa = mantissa.rstrip("0").rstrip(".")
    return f"{mantissa}e{exp}"


def _render(value: Any) -> str:
    if isinstance(value, str):
        escaped = value.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{escaped}"'
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_number(value)
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_render(v) for v in value) + "]"
    if isinstance(value, dict):
        items = ",".join(f'{_render(str(k))}:{_render(v)}' for k, v in value.items())
        return "{" + items + "}"
    raise TypeError(f"cannot render {type(value).__name__} deterministically")


def render_json(obj: Any) -> str:
    """Compact JSON text with insertion-ordered keys and formatted numbers."""
    return _render(obj)


def render_csv(header: Iterable[str], rows: Iterable[Iterable[Any]]) -> str:
    """CSV text (header + rows, newline-terminated) with formatted numbers."""
    lines = [",".join(header)]
    for row in rows:
        lines.append(
            ",".join(
                format_number(v) if isinstance(v, float) else str(v) for v in row
            )
        )
    return "\n".join(lines) + "\n"
