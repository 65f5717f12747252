"""Canonical JSON, DOT and CSV forms for instances, results and reports.

Rationals are written as ``"p/q"`` strings in lowest terms (``"3"`` when the
denominator is 1); ideal zero sets are 1-based on the wire.
"""

from __future__ import annotations

import csv
import io
import json
import re
from fractions import Fraction
from typing import Any, Iterable, Sequence

from .lalg import LIdeal, LVec
from .order import FinBoolAlg, FinPoset, ValidationError

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


def frac_str(q: Fraction | int) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_frac(s: str | int) -> Fraction:
    if isinstance(s, bool):
        raise ValidationError(f"not a rational: {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str) or not _RATIONAL.match(s.strip()):
        raise ValidationError(f"not a 'p/q' rational: {s!r}")
    q = Fraction(s.strip())
    return q


def to_jsonable(x: Any) -> Any:
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return frac_str(x)
    if isinstance(x, LVec):
        return lvec_to_json(x)
    if isinstance(x, LIdeal):
        return ideal_to_json(x)
    if isinstance(x, FinPoset):
        return poset_to_json(x)
    if isinstance(x, FinBoolAlg):
        return {"atoms": [str(a) for a in x.atoms]}
    if hasattr(x, "to_json") and callable(x.to_json):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (set, frozenset)):
        return sorted((to_jsonable(v) for v in x), key=lambda v: json.dumps(v, sort_keys=True))
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    raise TypeError(f"cannot serialize {type(x).__name__}")


def decode_inputs(x: Any) -> Any:
    """Inverse of :func:`to_jsonable` for check inputs (vectors, ideals, rationals)."""
    if isinstance(x, dict):
        keys = set(x)
        if keys == {"dim", "coords"}:
            return lvec_from_json(x)
        if keys == {"dim", "zeroSet"}:
            return ideal_from_json(x)
        return {k: decode_inputs(v) for k, v in x.items()}
    if isinstance(x, list):
        return [decode_inputs(v) for v in x]
    if isinstance(x, str) and _RATIONAL.match(x):
        return Fraction(x)
    return x


def dumps(obj: Any) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2) + "\n"


# -- individual kinds -----------------------------------------------------------

def lvec_to_json(a: LVec) -> dict:
    return {"dim": a.dim, "coords": [frac_str(c) for c in a.coords]}


def lvec_from_json(d: dict) -> LVec:
    coords = [parse_frac(c) for c in d["coords"]]
    if int(d.get("dim", len(coords))) != len(coords):
        raise ValidationError("dim does not match number of coordinates")
    return LVec(tuple(coords))


def ideal_to_json(I: LIdeal) -> dict:
    return {"dim": I.dim, "zeroSet": sorted(i + 1 for i in I.zero_set)}


def ideal_from_json(d: dict) -> LIdeal:
    return LIdeal(int(d["dim"]), frozenset(int(i) - 1 for i in d["zeroSet"]))


def poset_to_json(P: FinPoset) -> dict:
    return {"elements": list(P.elements),
            "le": [[P.elements[i], P.elements[j]] for i, j in P.pairs()]}


def poset_from_json(d: dict) -> FinPoset:
    if "elements" not in d or "le" not in d:
        raise ValidationError("poset JSON needs 'elements' and 'le'")
    return FinPoset.from_labels(d["elements"], [tuple(p) for p in d["le"]])


def boolalg_from_json(d: dict) -> FinBoolAlg:
    return FinBoolAlg(d["atoms"])


def load_instance(d: dict) -> Any:
    """Rebuild an instance from its JSON form, recognised by its keys."""
    keys = set(d)
    if {"elements", "le"} <= keys:
        return poset_from_json(d)
    if keys == {"atoms"}:
        return boolalg_from_json(d)
    if keys == {"dim", "coords"}:
        return lvec_from_json(d)
    if keys == {"dim", "vectors"}:
        vs = [lvec_from_json(v) for v in d["vectors"]]
        if any(v.dim != int(d["dim"]) for v in vs):
            raise ValidationError("vector dimension does not match dim")
        return vs
    if keys == {"dim", "zeroSet"}:
        return ideal_from_json(d)
    if keys == {"poset", "values"}:
        from .normal import NormalFn
        return NormalFn.from_json(d)
    if {"instance", "checks"} <= keys:
        return d
    raise ValidationError(f"unrecognised instance with keys {sorted(keys)}")


# -- DOT and CSV ----------------------------------------------------------------

def _dot_id(label: Any) -> str:
    return '"' + str(label).replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(P: FinPoset, name: str = "hasse") -> str:
    """Hasse diagram: one node per element, one edge per cover (drawn upward)."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for e in P.elements:
        lines.append(f"  {_dot_id(e)};")
    for i, j in P.covers():
        lines.append(f"  {_dot_id(P.elements[i])} -> {_dot_id(P.elements[j])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_edges(text: str) -> list[tuple[str, str]]:
    return [tuple(s.strip().strip(";").strip('"') for s in line.split("->"))
            for line in text.splitlines() if "->" in line]


def csv_table(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    # the minimal dialect leaves a bare carriage return unquoted
    wq = csv.writer(buf, lineterminator="\n", quoting=csv.QUOTE_ALL)
    w.writerow(header)
    for row in rows:
        cells = [frac_str(v) if isinstance(v, Fraction) else v for v in row]
        (wq if any("\r" in str(c) for c in cells) else w).writerow(cells)
    return buf.getvalue()


def read_csv(text: str) -> list[list[str]]:
    return list(csv.reader(io.StringIO(text, newline="")))
