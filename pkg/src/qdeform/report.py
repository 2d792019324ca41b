"""Deterministic JSON rendering for CLI report envelopes.

The stdlib json module renders floats with shortest-round-trip repr, which is
not stable across value histories; reports here pin floats to 17 significant
digits (enough to reconstruct the exact double), keep dict insertion order,
and therefore re-serialize byte-identically after a parse.
"""

from __future__ import annotations

import json
from typing import Any


def format_float(x: float) -> str:
    """17-significant-digit decimal form; always visibly a float."""
    s = format(x, ".17g")
    if "e" not in s and "." not in s and "n" not in s:  # 1.0 -> '1'
        s += ".0"
    return s


def render_json(obj: Any, indent: int = 0) -> str:
    """Serialize dicts/lists/str/int/float/bool/None with fixed float format
    and dict insertion order preserved."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        rows = [f"{inner}{json.dumps(str(k))}: {render_json(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(rows) + f"\n{pad}}}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        rows = [f"{inner}{render_json(v, indent + 1)}" for v in obj]
        return "[\n" + ",\n".join(rows) + f"\n{pad}]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def envelope(
    command: str,
    inputs: dict[str, Any],
    results: dict[str, Any],
    checks: list[dict[str, Any]],
    version: str,
) -> dict[str, Any]:
    """Standard report structure shared by every subcommand."""
    return {
        "command": command,
        "inputs": inputs,
        "results": results,
        "checks": checks,
        "version": version,
    }


def check_entry(name: str, passed: bool, max_residual: float) -> dict[str, Any]:
    return {"name": name, "passed": bool(passed), "max_residual": float(max_residual)}


def render_table(env: dict[str, Any]) -> str:
    """Human-oriented flat rendering of a report envelope."""
    lines = [f"command: {env['command']}    (version {env['version']})"]

    def emit(prefix: str, value: Any) -> None:
        if isinstance(value, dict):
            for k, v in value.items():
                emit(f"{prefix}.{k}" if prefix else str(k), v)
        elif isinstance(value, (list, tuple)) and value and isinstance(value[0], (list, tuple, dict)):
            for i, v in enumerate(value):
                emit(f"{prefix}[{i}]", v)
        elif isinstance(value, (list, tuple)):
            rendered = ", ".join(format_float(v) if isinstance(v, float) else str(v) for v in value)
            lines.append(f"  {prefix}: [{rendered}]")
        elif isinstance(value, float):
            lines.append(f"  {prefix}: {format_float(value)}")
        else:
            lines.append(f"  {prefix}: {value}")

    emit("inputs", env["inputs"])
    emit("results", env["results"])
    if env["checks"]:
        lines.append("  checks:")
        width = max(len(c["name"]) for c in env["checks"])
        for c in env["checks"]:
            status = "pass" if c["passed"] else "FAIL"
            lines.append(
                f"    {c['name']:<{width}}  {status}  max_residual={format_float(c['max_residual'])}"
            )
    return "\n".join(lines)
