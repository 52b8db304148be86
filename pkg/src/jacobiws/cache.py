"""Disk cache for enumerations and quotient spaces.

Cache files live under ``$JACOBIWS_CACHE`` (or ``~/.cache/jacobiws``), one
file per object, named by a content hash of the degree and the relation
generation version.  Every file starts with the versioned header line
``jacobiws-cache v1``; stale or unparseable files are ignored and rebuilt.
"""

from __future__ import annotations

import hashlib
import os
from fractions import Fraction
from pathlib import Path

from .diagrams import diagram_from_key
from .linalg import QuotientSpace, RowReducer

CACHE_ENV = "JACOBIWS_CACHE"
HEADER = "jacobiws-cache v1"

# bump when the STU generation or enumeration conventions change
RELATION_VERSION = 1

_override_dir: Path | None = None
_disabled = False


def set_cache_dir(path) -> None:
    global _override_dir
    _override_dir = Path(path) if path is not None else None


def disable_cache(flag: bool = True) -> None:
    global _disabled
    _disabled = flag


def cache_dir() -> Path | None:
    if _disabled:
        return None
    if _override_dir is not None:
        return _override_dir
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    home = os.environ.get("HOME")
    if not home:
        return None
    return Path(home) / ".cache" / "jacobiws"


def _cache_file(name: str) -> Path | None:
    base = cache_dir()
    if base is None:
        return None
    digest = hashlib.sha256(
        ("%s|v%d|%s" % (HEADER, RELATION_VERSION, name)).encode()
    ).hexdigest()[:12]
    return base / ("%s-%s.txt" % (name, digest))


def _read(name: str) -> list[str] | None:
    path = _cache_file(name)
    if path is None or not path.exists():
        return None
    try:
        lines = path.read_text().splitlines()
    except OSError:
        return None
    if not lines or lines[0] != HEADER:
        return None
    return lines[1:]


def _write(name: str, lines) -> None:
    path = _cache_file(name)
    if path is None:
        return
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text("\n".join([HEADER, *lines]) + "\n")
        tmp.replace(path)
    except OSError:
        pass


# -- diagram lists ----------------------------------------------------------

# canonical keys are multi-line; ';' is a legal statement separator in the
# diagram grammar, so a key fits on one cache line with '\n' -> ';'


def inline_key(key: str) -> str:
    return key.rstrip("\n").replace("\n", ";")


def _load_diagram_list(name: str):
    lines = _read(name)
    if lines is None:
        return None
    try:
        return tuple(diagram_from_key(line.replace(";", "\n") + "\n")
                     for line in lines if line)
    except Exception:
        return None


def _store_diagram_list(name: str, diagrams) -> None:
    from .diagrams import canonical_key

    _write(name, [inline_key(canonical_key(d)) for d in diagrams])


def cached_connected_characters(d: int, producer):
    name = "components-d%d" % d
    got = _load_diagram_list(name)
    if got is not None:
        return got
    out = producer(d)
    _store_diagram_list(name, out)
    return out


def cached_ccds(n: int, producer):
    name = "ccds-n%d" % n
    got = _load_diagram_list(name)
    if got is not None:
        return got
    out = producer(n)
    _store_diagram_list(name, out)
    return out


def install_enumeration_hooks() -> None:
    from . import diagrams

    diagrams._connected_cache_hook = cached_connected_characters
    diagrams._ccd_cache_hook = cached_ccds


# -- quotient spaces ---------------------------------------------------------


def _frac(text: str) -> Fraction:
    return Fraction(text)


def store_quotient(name: str, space: QuotientSpace) -> None:
    lines = ["ambient %d" % len(space.ambient)]
    lines.extend(inline_key(k) for k in space.ambient)
    rows = space.reducer.pivots
    lines.append("rows %d" % len(rows))
    for col in sorted(rows):
        entries = " ".join(
            "%d:%s" % (c, v) for c, v in sorted(rows[col].items())
        )
        lines.append("row %s" % entries)
    _write(name, lines)


def load_quotient(name: str) -> QuotientSpace | None:
    lines = _read(name)
    if lines is None:
        return None
    try:
        it = iter(lines)
        head = next(it).split()
        assert head[0] == "ambient"
        count = int(head[1])
        ambient = tuple(
            next(it).replace(";", "\n") + "\n" for _ in range(count)
        )
        head = next(it).split()
        assert head[0] == "rows"
        nrows = int(head[1])
        reducer = RowReducer()
        for _ in range(nrows):
            parts = next(it).split()
            assert parts[0] == "row"
            row = {}
            for item in parts[1:]:
                c, v = item.split(":")
                row[int(c)] = _frac(v)
            reducer.pivots[min(row)] = row
        index = {key: i for i, key in enumerate(ambient)}
        pivot_cols = set(reducer.pivots)
        basis = tuple(k for i, k in enumerate(ambient) if i not in pivot_cols)
        return QuotientSpace(
            ambient=ambient, reducer=reducer, index=index, basis=basis
        )
    except Exception:
        return None


def cached_quotient(name: str, producer) -> QuotientSpace:
    got = load_quotient(name)
    if got is not None:
        return got
    space = producer()
    store_quotient(name, space)
    return space
