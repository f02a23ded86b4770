"""Ring description files (JSON, ``"schema": 1``).

Three kinds are understood::

    {"schema": 1, "kind": "monoid", "lattice_rank": 3,
     "generators": [[0, 0, 1], [1, 0, 1], [0, 1, 1], [1, 1, 1]]}

    {"schema": 1, "kind": "hyperbola", "exponents": [3, 3],
     "base_is_local": true}

    {"schema": 1, "kind": "determinantal", "m": 2, "n": 2, "k": 2}

A monoid ring may give ``"facet_normals"`` instead of ``"generators"``. A
hyperbola over a non-local base sets ``"base_is_local": false`` and may carry
a symmetric boolean ``"comaximal"`` matrix.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from .catalog import DeterminantalDatum
from .errors import AffclassError
from .hyperbola import HyperbolaDatum
from .monoid import MonoidRing

SCHEMA_VERSION = 1
Ring = Union[MonoidRing, HyperbolaDatum, DeterminantalDatum]

_FIELDS = {
    "monoid": {"lattice_rank", "generators", "facet_normals"},
    "hyperbola": {"exponents", "base_is_local", "comaximal"},
    "determinantal": {"m", "n", "k"},
}


class RingFileError(AffclassError):
    pass


def _int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise RingFileError(f"field '{where}': expected an integer, got {value!r}")
    return value


def _int_vectors(value: Any, where: str) -> list[list[int]]:
    if not isinstance(value, list) or not value:
        raise RingFileError(f"field '{where}': expected a non-empty list of integer vectors")
    out = []
    for i, v in enumerate(value):
        if not isinstance(v, list):
            raise RingFileError(f"field '{where}[{i}]': expected a list of integers")
        out.append([_int(x, f"{where}[{i}][{j}]") for j, x in enumerate(v)])
    return out


def parse_ring(data: Any) -> Ring:
    if not isinstance(data, dict):
        raise RingFileError("top level: expected a JSON object")
    if data.get("schema") != SCHEMA_VERSION:
        raise RingFileError(f"field 'schema': expected {SCHEMA_VERSION}, got {data.get('schema')!r}")
    kind = data.get("kind")
    if kind not in _FIELDS:
        raise RingFileError(f"field 'kind': expected one of {sorted(_FIELDS)}, got {kind!r}")
    extra = set(data) - _FIELDS[kind] - {"schema", "kind", "name"}
    if extra:
        raise RingFileError(f"field '{sorted(extra)[0]}': not allowed for kind '{kind}'")

    if kind == "monoid":
        if "lattice_rank" not in data:
            raise RingFileError("field 'lattice_rank': missing")
        d = _int(data["lattice_rank"], "lattice_rank")
        if d < 1:
            raise RingFileError("field 'lattice_rank': must be at least 1")
        has_g, has_n = "generators" in data, "facet_normals" in data
        if has_g == has_n:
            raise RingFileError("field 'generators': give exactly one of generators, facet_normals")
        key = "generators" if has_g else "facet_normals"
        vecs = _int_vectors(data[key], key)
        for i, v in enumerate(vecs):
            if len(v) != d:
                raise RingFileError(f"field '{key}[{i}]': length {len(v)} != lattice_rank {d}")
        try:
            if has_g:
                return MonoidRing.from_generators(d, vecs)
            return MonoidRing.from_normals(d, vecs)
        except AffclassError as exc:
            raise RingFileError(f"field '{key}': {type(exc).__name__}: {exc}") from exc

    if kind == "hyperbola":
        if "exponents" not in data:
            raise RingFileError("field 'exponents': missing")
        exps = data["exponents"]
        if not isinstance(exps, list) or not exps:
            raise RingFileError("field 'exponents': expected a non-empty list of positive integers")
        exps = [_int(x, f"exponents[{i}]") for i, x in enumerate(exps)]
        for i, x in enumerate(exps):
            if x < 1:
                raise RingFileError(f"field 'exponents[{i}]': must be positive, got {x}")
        local = data.get("base_is_local", True)
        if not isinstance(local, bool):
            raise RingFileError("field 'base_is_local': expected true or false")
        cm = data.get("comaximal")
        if cm is not None:
            if (not isinstance(cm, list) or
                    not all(isinstance(row, list) and all(isinstance(x, bool) for x in row) for row in cm)):
                raise RingFileError("field 'comaximal': expected a matrix of booleans")
            cm = tuple(tuple(row) for row in cm)
        try:
            return HyperbolaDatum(tuple(exps), local, cm)
        except ValueError as exc:
            raise RingFileError(f"field 'comaximal': {exc}") from exc

    vals = {}
    for key in ("m", "n", "k"):
        if key not in data:
            raise RingFileError(f"field '{key}': missing")
        vals[key] = _int(data[key], key)
    try:
        return DeterminantalDatum(**vals)
    except AffclassError as exc:
        raise RingFileError(f"field 'k': {exc}") from exc


def load_ring(path: str | Path) -> Ring:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise RingFileError(f"{path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RingFileError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    try:
        return parse_ring(data)
    except RingFileError as exc:
        raise RingFileError(f"{path}: {exc}") from exc
