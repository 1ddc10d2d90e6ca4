"""Parsing of grid and list arguments.

A grid is either a comma-separated list of numbers (``0,0.5,1``) or a range
``start:stop:count:scale`` with ``scale`` in ``{linear, geometric}``; the
scale may be omitted and defaults to linear.  Both endpoints are included.
"""

from __future__ import annotations

import numpy as np

from ..errors import ConfigError

SCALES = ("linear", "geometric")


def parse_grid(text: str) -> list[float]:
    text = text.strip()
    if not text:
        raise ConfigError("empty grid specification")
    if ":" in text:
        parts = text.split(":")
        if len(parts) not in (3, 4):
            raise ConfigError(f"grid {text!r} must look like start:stop:count[:scale]")
        try:
            start, stop = float(parts[0]), float(parts[1])
            count = int(parts[2])
        except ValueError as exc:
            raise ConfigError(f"grid {text!r}: {exc}") from None
        scale = parts[3] if len(parts) == 4 else "linear"
        if scale not in SCALES:
            raise ConfigError(f"grid scale must be one of {SCALES}, got {scale!r}")
        if count < 1:
            raise ConfigError("grid count must be at least 1")
        if scale == "geometric":
            if start <= 0 or stop <= 0:
                raise ConfigError("geometric grids need positive endpoints")
            values = np.geomspace(start, stop, count)
        else:
            values = np.linspace(start, stop, count)
        return [float(v) for v in values]
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise ConfigError(f"grid {text!r}: {exc}") from None


def parse_int_list(text: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise ConfigError(f"integer list {text!r}: {exc}") from None
    if not values:
        raise ConfigError("empty integer list")
    return values
