"""Resource caps, overridable through environment variables.

``CUBECALC_TERM_LIMIT``  max terms held by any expansion (default 1_000_000)
``CUBECALC_DP_LIMIT``    max simultaneously open factors in the subset DP (default 20)
``CUBECALC_TT_LIMIT``    max variables for the truth-table oracle (default 24)
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import PreconditionError


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise PreconditionError(f"{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise PreconditionError(f"{name} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class Limits:
    term_limit: int = 1_000_000
    dp_limit: int = 20
    truth_table_vars: int = 24

    @classmethod
    def from_env(cls) -> "Limits":
        return cls(
            term_limit=_env_int("CUBECALC_TERM_LIMIT", cls.term_limit),
            dp_limit=_env_int("CUBECALC_DP_LIMIT", cls.dp_limit),
            truth_table_vars=_env_int("CUBECALC_TT_LIMIT", cls.truth_table_vars),
        )


def term_limit(explicit: int | None = None) -> int:
    return explicit if explicit is not None else Limits.from_env().term_limit


def dp_limit(explicit: int | None = None) -> int:
    return explicit if explicit is not None else Limits.from_env().dp_limit


def truth_table_limit(explicit: int | None = None) -> int:
    return explicit if explicit is not None else Limits.from_env().truth_table_vars
