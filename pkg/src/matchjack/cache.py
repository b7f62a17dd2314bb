"""
On-disk cache of Jack expansions, one JSON file per degree.

The cache directory comes from ``MATCHJACK_CACHE_DIR`` or from
``configure()``; with neither, the library computes everything in memory.
Files carry a format version and a SHA-256 of their payload; a file that fails
either check is ignored and rewritten.  Writes go through a temporary file
and ``os.replace`` so concurrent processes never see a partial file.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path

from .exact import RatFunc, Var
from .partitions import from_str, to_str

log = logging.getLogger(__name__)

FORMAT = "matchjack-jacks"
VERSION = 1
ENV_VAR = "MATCHJACK_CACHE_DIR"
DEFAULT_DIR = Path.home() / ".cache" / "matchjack"

_configured: Path | None = None
_disabled = False


def configure(path: str | os.PathLike | None = None, enabled: bool = True):
    """Point the cache at ``path`` (None = env var or default dir), or disable it."""
    global _configured, _disabled
    _disabled = not enabled
    if enabled:
        _configured = Path(path) if path else Path(os.environ.get(ENV_VAR) or DEFAULT_DIR)
    else:
        _configured = None


def cache_dir() -> Path | None:
    if _disabled:
        return None
    if _configured is not None:
        return _configured
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else None


def _path(n: int) -> Path | None:
    d = cache_dir()
    return None if d is None else d / f"jack_{n}.json"


def _digest(payload) -> str:
    return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()


def encode_jacks(n: int, table: dict) -> dict:
    jacks = [
        [to_str(theta), [[to_str(lam), *c.to_json()] for lam, c in sorted(row.items())]]
        for theta, row in sorted(table.items())
    ]
    payload = {"format": FORMAT, "version": VERSION, "degree": n, "jacks": jacks}
    return {**payload, "sha256": _digest(payload)}


def decode_jacks(n: int, data: dict) -> dict | None:
    footer = data.get("sha256")
    payload = {k: v for k, v in data.items() if k != "sha256"}
    if payload.get("format") != FORMAT or payload.get("version") != VERSION:
        return None
    if payload.get("degree") != n or footer != _digest(payload):
        return None
    out = {}
    for theta, row in payload["jacks"]:
        out[from_str(theta)] = {
            from_str(lam): RatFunc.from_json([num, den], Var.ALPHA) for lam, num, den in row
        }
    return out


def load_jacks(n: int) -> dict | None:
    path = _path(n)
    if path is None or not path.exists():
        return None
    try:
        data = json.loads(path.read_text())
    except (OSError, ValueError):
        log.warning("unreadable cache file %s, ignoring", path)
        return None
    table = decode_jacks(n, data)
    if table is None:
        log.warning("stale or corrupt cache file %s, ignoring", path)
    return table


def save_jacks(n: int, table: dict) -> None:
    path = _path(n)
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(encode_jacks(n, table), fh)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
