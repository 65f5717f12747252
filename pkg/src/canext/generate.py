"""Seeded instance generators: posets, boolean algebras and vectors in Q^n."""

from __future__ import annotations

import random
from fractions import Fraction

from .lalg import LVec
from .order import FinBoolAlg, FinPoset, ValidationError

KINDS = ("poset", "boolalg", "lalg")


def _rng(kind: str, params: dict, seed: int) -> random.Random:
    key = ",".join(f"{k}={params[k]}" for k in sorted(params))
    return random.Random(f"{kind}:{key}:{seed}")


def random_poset(n: int, seed: int = 0, density: float = 0.35) -> FinPoset:
    """Transitive closure of a random DAG on ``n`` points (edges go low index to high)."""
    if n < 1:
        raise ValidationError("a poset needs at least one element")
    rng = _rng("poset", {"n": n, "density": density}, seed)
    rel = [[i == j for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                rel[i][j] = True
    for k in range(n):
        for i in range(n):
            if rel[i][k]:
                for j in range(n):
                    if rel[k][j]:
                        rel[i][j] = True
    return FinPoset([f"x{k}" for k in range(n)],
                    [(i, j) for i in range(n) for j in range(n) if rel[i][j]])


def random_vectors(dim: int, count: int, seed: int = 0, bound: int = 5,
                   den: int = 4) -> list[LVec]:
    rng = _rng("lalg", {"dim": dim, "count": count, "bound": bound, "den": den}, seed)
    return [LVec(tuple(Fraction(rng.randint(-bound * den, bound * den), rng.randint(1, den))
                       for _ in range(dim))) for _ in range(count)]


def generate_instance(kind: str, params: dict, seed: int = 0) -> dict:
    """JSON descriptor of a generated instance; same inputs give the same output."""
    from .serialize import lvec_to_json, poset_to_json
    try:
        if kind == "poset":
            n = int(params.get("n", 5))
            density = float(params.get("density", 0.35))
            if not 0 <= density <= 1:
                raise ValidationError("density must lie in [0, 1]")
            return poset_to_json(random_poset(n, seed, density))
        if kind == "boolalg":
            atoms = int(params.get("atoms", 3))
            if atoms < 1:
                raise ValidationError("atoms must be positive")
            return {"atoms": list(FinBoolAlg.of_size(atoms).atoms)}
        if kind == "lalg":
            dim = int(params.get("dim", 2))
            count = int(params.get("count", 5))
            if dim < 1 or count < 0:
                raise ValidationError("dim must be positive and count nonnegative")
            return {"dim": dim,
                    "vectors": [lvec_to_json(v) for v in random_vectors(dim, count, seed)]}
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError(f"bad parameters for {kind}: {exc}") from exc
    raise ValidationError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")


def test_posets(max_size: int = 8, per_size: int = 2, seed: int = 0) -> list[FinPoset]:
    """Named small posets plus seeded random ones of every size up to ``max_size``."""
    out = [FinPoset.vee(), FinPoset.chain(3), FinPoset.antichain(3)]
    for n in range(1, max_size + 1):
        for k in range(per_size):
            out.append(random_poset(n, seed * 1000 + k, density=(0.2, 0.5)[k % 2]))
    return out
