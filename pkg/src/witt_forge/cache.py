"""Persistent cache of Schur and monomial transition columns.

The cache is derived data only. A missing, stale, or corrupt file is ignored
and rebuilt; no verdict ever depends on it.
"""
from __future__ import annotations

import json
import logging
import os
from pathlib import Path

from .partitions import DEFAULT_DEGREE_BOUND
from . import symfunc
from .symfunc import MONOMIAL_COLUMNS, SCHUR_COLUMNS

FORMAT_VERSION = 1
ENV_VAR = "WITT_FORGE_CACHE"

log = logging.getLogger(__name__)

_BUILDERS = {"s": SCHUR_COLUMNS, "m": MONOMIAL_COLUMNS}


def default_path() -> Path:
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "witt-forge" / "cache.json"


def resolve_path(cli_path: str | None = None) -> Path:
    if cli_path:
        return Path(cli_path)
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return default_path()


def _key(mu: tuple) -> str:
    return ",".join(str(x) for x in mu)


def load(path, max_weight: int | None = None) -> int:
    """Preload cached columns; returns the number loaded (0 on any problem)."""
    path = Path(path)
    if not path.exists():
        return 0
    try:
        data = json.loads(path.read_text())
        if data.get("format") != FORMAT_VERSION:
            log.info("ignoring cache %s with format %r", path, data.get("format"))
            return 0
        count = 0
        for kind, builder in _BUILDERS.items():
            for key, column in data.get("columns", {}).get(kind, {}).items():
                mu = tuple(int(x) for x in key.split(",")) if key else ()
                if max_weight is not None and sum(mu) > max_weight:
                    continue
                builder.preload(mu, [int(v) for v in column])
                count += 1
        return count
    except (OSError, ValueError, TypeError, AttributeError) as exc:
        log.warning("ignoring unreadable cache %s: %s", path, exc)
        return 0


def save(path, degree_bound: int = DEFAULT_DEGREE_BOUND) -> int:
    """Write every memoized column; returns the number written."""
    path = Path(path)
    columns = {}
    count = 0
    for kind, builder in _BUILDERS.items():
        columns[kind] = {}
        for mu, column in builder.items():
            if not mu:
                continue
            columns[kind][_key(mu)] = [int(v) for v in column]
            count += 1
    payload = {"format": FORMAT_VERSION, "degree_bound": degree_bound, "columns": columns}
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(json.dumps(payload, separators=(",", ":")))
    os.replace(tmp, path)
    return count


def clear_memory():
    """Drop all in-process column memos, including the expansions built on them."""
    for builder in _BUILDERS.values():
        builder.clear()
    symfunc._schur_in_psi.cache_clear()
    symfunc._monomial_in_psi.cache_clear()
