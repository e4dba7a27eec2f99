"""JSON structure descriptions and the built-in catalog.

A structure file looks like::

    {"name": "...",
     "brackets": [{"i": 2, "j": 3, "k": 1, "c": "-1"}, ...],
     "phi": [{"idx": [1, 2, 7], "c": "1"}, ...],
     "pair": "opposite"}

A bracket entry means ``[e_i, e_j]`` has coefficient ``c`` on ``e_k``; the
``[e_j, e_i]`` entry is filled in automatically.  ``phi`` defaults to the
standard form and ``pair`` is optional.  Errors carry JSON pointers such as
``/brackets/0/k``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .forms import AltForm
from .g2core import G2FormData, NotAG2FormError, standard_phi
from .liegeom import LieAlgebra, validate
from .scalar import Scalar
from .tensor import DIM, QTensor, _zeros

__all__ = [
    "SpecError",
    "StructureSpec",
    "parse_spec",
    "load_spec",
    "catalog_names",
    "catalog_spec",
]

PAIR_KINDS = ("opposite",)


class SpecError(ValueError):
    """Invalid structure description; ``errors`` holds ``(pointer, message)`` pairs."""

    def __init__(self, errors: list[tuple[str, str]]):
        self.errors = errors
        super().__init__("; ".join(f"{p or '/'}: {m}" for p, m in errors))


@dataclass(frozen=True)
class StructureSpec:
    name: str
    algebra: LieAlgebra
    forms: G2FormData
    pair: str | None = None
    description: str = ""


def _index(value, ptr: str, errors: list) -> int | None:
    if isinstance(value, bool) or not isinstance(value, int):
        errors.append((ptr, f"expected an integer index, got {json.dumps(value)}"))
        return None
    if not 1 <= value <= DIM:
        errors.append((ptr, f"index {value} outside 1..{DIM}"))
        return None
    return value


def _scalar(value, ptr: str, errors: list) -> Scalar | None:
    if isinstance(value, bool):
        errors.append((ptr, "expected a scalar string"))
        return None
    if isinstance(value, int):
        return Scalar(value)
    if not isinstance(value, str):
        errors.append((ptr, f"expected a scalar string, got {json.dumps(value)}"))
        return None
    try:
        return Scalar.parse(value)
    except ValueError as exc:
        errors.append((ptr, str(exc)))
        return None


def _object(value, ptr: str, keys: tuple[str, ...], errors: list) -> dict | None:
    if not isinstance(value, dict):
        errors.append((ptr, "expected an object"))
        return None
    missing = [k for k in keys if k not in value]
    for k in missing:
        errors.append((f"{ptr}/{k}", "missing"))
    return None if missing else value


def _brackets(raw, errors: list) -> QTensor | None:
    if not isinstance(raw, list):
        errors.append(("/brackets", "expected a list"))
        return None
    rat, irr = _zeros((DIM,) * 3), _zeros((DIM,) * 3)
    entries = []
    for n, item in enumerate(raw):
        ptr = f"/brackets/{n}"
        obj = _object(item, ptr, ("i", "j", "k", "c"), errors)
        if obj is None:
            continue
        i, j, k = (_index(obj[key], f"{ptr}/{key}", errors) for key in "ijk")
        c = _scalar(obj["c"], f"{ptr}/c", errors)
        if None in (i, j, k, c):
            continue
        if i == j:
            errors.append((ptr, f"[e{i}, e{i}] is zero by antisymmetry"))
            continue
        entries.append((i, j, k, c))
    if errors:
        return None
    # exact common denominator for the integer storage
    den = 1
    for *_, c in entries:
        for part in (c.rat, c.sqrt2):
            den = den * part.denominator // _gcd(den, part.denominator)
    seen = {}
    for n, (i, j, k, c) in enumerate(entries):
        a, b = (i, j) if i < j else (j, i)
        sign = 1 if i < j else -1
        key = (a, b, k)
        if key in seen:
            errors.append((f"/brackets/{n}", f"duplicates /brackets/{seen[key]}"))
            continue
        seen[key] = n
        r, s = int(c.rat * den), int(c.sqrt2 * den)
        rat[a - 1, b - 1, k - 1] += sign * r
        rat[b - 1, a - 1, k - 1] -= sign * r
        irr[a - 1, b - 1, k - 1] += sign * s
        irr[b - 1, a - 1, k - 1] -= sign * s
    return None if errors else QTensor(rat, irr, den)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _phi(raw, errors: list) -> AltForm | None:
    if not isinstance(raw, list):
        errors.append(("/phi", "expected a list"))
        return None
    terms = []
    for n, item in enumerate(raw):
        ptr = f"/phi/{n}"
        obj = _object(item, ptr, ("idx", "c"), errors)
        if obj is None:
            continue
        idx = obj["idx"]
        c = _scalar(obj["c"], f"{ptr}/c", errors)
        if not isinstance(idx, list) or len(idx) != 3:
            errors.append((f"{ptr}/idx", "expected three indices"))
            continue
        ids = [_index(v, f"{ptr}/idx/{m}", errors) for m, v in enumerate(idx)]
        if None in ids or c is None:
            continue
        if not ids[0] < ids[1] < ids[2]:
            errors.append((f"{ptr}/idx", "indices must be strictly increasing"))
            continue
        terms.append((tuple(ids), c))
    return None if errors else AltForm.from_terms(3, terms)


def parse_spec(data: bytes | str) -> StructureSpec:
    """Validate a JSON structure description; raises :class:`SpecError` listing every problem."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SpecError([("", f"not UTF-8: {exc}")]) from None
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise SpecError([("", f"malformed JSON: {exc}")]) from None
    errors: list[tuple[str, str]] = []
    if not isinstance(doc, dict):
        raise SpecError([("", "expected a JSON object")])
    name = doc.get("name", "")
    if not isinstance(name, str):
        errors.append(("/name", "expected a string"))
    if "brackets" not in doc:
        errors.append(("/brackets", "missing"))
    pair = doc.get("pair")
    if pair is not None and pair not in PAIR_KINDS:
        errors.append(("/pair", f"unknown pairing {json.dumps(pair)}; known: {', '.join(PAIR_KINDS)}"))
    c = _brackets(doc["brackets"], errors) if "brackets" in doc else None
    phi = _phi(doc["phi"], errors) if "phi" in doc else None
    if errors:
        raise SpecError(errors)

    algebra = LieAlgebra(c, check=False)
    violations = validate(algebra)
    if violations:
        raise SpecError([("/brackets", str(v)) for v in violations])
    if phi is None:
        forms = standard_phi()
    else:
        try:
            forms = G2FormData(phi)
        except NotAG2FormError as exc:
            raise SpecError([("/phi", str(exc))]) from None
    return StructureSpec(name, algebra, forms, pair, str(doc.get("description", "")))


def load_spec(path) -> StructureSpec:
    with open(path, "rb") as fh:
        return parse_spec(fh.read())


def _catalog_dir():
    return resources.files("g2forge") / "catalog"


def catalog_names() -> list[str]:
    return sorted(p.name[:-5] for p in _catalog_dir().iterdir() if p.name.endswith(".json"))


def catalog_spec(name: str) -> StructureSpec:
    names = catalog_names()
    if name not in names:
        raise KeyError(f"unknown catalog entry {name!r}; available: {', '.join(names)}")
    return parse_spec((_catalog_dir() / f"{name}.json").read_bytes())
