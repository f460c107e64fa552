"""Order caps for the exhaustive algorithms.

Every cap can be overridden at once through the ``ORBISTRUCT_ORDER_CAP``
environment variable; it is read at call time so tests can monkeypatch it.
"""

from __future__ import annotations

import os

ENV_VAR = "ORBISTRUCT_ORDER_CAP"

CLOSURE_CAP = 10_000
SUBGROUP_CAP = 120
ISOMORPHISM_CAP = 60
CHAIN_CAP = 120


def order_cap(default: int) -> int:
    raw = os.environ.get(ENV_VAR)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{ENV_VAR} must be a positive integer, got {raw!r}")
    return value
