"""Enumeration budgets, overridable through ``TILDE_ISO_BUDGET``.

The variable holds comma separated ``key=value`` pairs, for example
``TILDE_ISO_BUDGET="brute=12,search=24"``.  Unknown keys are an error so
that typos do not silently fall back to the defaults.
"""

import os
from functools import lru_cache
from dataclasses import dataclass, fields, replace

from .errors import TildeError

ENV_VAR = "TILDE_ISO_BUDGET"


@dataclass(frozen=True)
class Budget:
    oracle: int = 16        # max word length for the BFS distance oracle
    search: int = 20        # max distance for the f-free existence search
    enumerate: int = 6      # max distance for full order enumeration
    brute: int = 16         # max word length for brute-force isometry sweeps
    subgraph: int = 14      # max word length for the op-graph audit
    sweep: int = 32         # max word length for exhaustive word sweeps


@lru_cache(maxsize=16)
def parse_budget(text, base=None):
    base = base or Budget()
    known = {f.name for f in fields(Budget)}
    updates = {}
    for item in filter(None, (part.strip() for part in text.split(","))):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in known:
            raise TildeError(f"bad {ENV_VAR} entry {item!r}; keys are {sorted(known)}")
        try:
            updates[key] = int(value)
        except ValueError:
            raise TildeError(f"bad {ENV_VAR} value in {item!r}") from None
    return replace(base, **updates)


def current_budget():
    return parse_budget(os.environ.get(ENV_VAR, ""))
