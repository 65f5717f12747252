"""The bounded archimedean l-algebra Q^n with exact rational arithmetic.

Every l-ideal of Q^n is a coordinate ideal: the vectors vanishing on a fixed
zero set Z.  Archimedean hulls, the frame of archimedean ideals, the Yosida
space of maximal ideals, idempotents and Specker algebras all live here.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from itertools import combinations
from math import floor
from typing import Callable, Iterable, Sequence, Union

from . import order
from .order import FinBoolAlg, FinDistLattice, ValidationError
from .checks import counterexample, register, run_check
from .report import Report

Scalar = Union[int, Fraction]


_ZERO, _ONE = Fraction(0), Fraction(1)


class MorphismError(ValueError):
    """A map that should be a morphism breaks one of its laws."""


def _q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise ValidationError("floats are not exact; pass ints, Fractions or 'p/q' strings")
    return Fraction(x)


@dataclass(frozen=True, slots=True)
class LVec:
    """An element of Q^n; all operations are coordinatewise."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coords:
            raise ValidationError("dimension must be positive")

    @classmethod
    def of(cls, *values) -> "LVec":
        return cls(tuple(_q(v) for v in values))

    @classmethod
    def const(cls, dim: int, r: Scalar) -> "LVec":
        return cls((_q(r),) * dim)

    @classmethod
    def unit(cls, dim: int, i: int) -> "LVec":
        return cls(tuple(Fraction(int(k == i)) for k in range(dim)))

    @classmethod
    def chi(cls, dim: int, Z: Iterable[int]) -> "LVec":
        Z = frozenset(Z)
        return cls(tuple(_ONE if k in Z else _ZERO for k in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __repr__(self) -> str:
        return "LVec(" + ", ".join(str(c) for c in self.coords) + ")"

    def _other(self, other) -> tuple:
        if isinstance(other, LVec):
            if other.dim != self.dim:
                raise ValidationError(f"dimension mismatch {self.dim} vs {other.dim}")
            return other.coords
        return (_q(other),) * self.dim

    def __add__(self, other) -> "LVec":
        return LVec(tuple(a + b for a, b in zip(self.coords, self._other(other))))

    __radd__ = __add__

    def __sub__(self, other) -> "LVec":
        return LVec(tuple(a - b for a, b in zip(self.coords, self._other(other))))

    def __rsub__(self, other) -> "LVec":
        return LVec(tuple(b - a for a, b in zip(self.coords, self._other(other))))

    def __mul__(self, other) -> "LVec":
        return LVec(tuple(a * b for a, b in zip(self.coords, self._other(other))))

    __rmul__ = __mul__

    def __neg__(self) -> "LVec":
        return LVec(tuple(-a for a in self.coords))

    def __and__(self, other) -> "LVec":
        return LVec(tuple(min(a, b) for a, b in zip(self.coords, self._other(other))))

    def __or__(self, other) -> "LVec":
        return LVec(tuple(max(a, b) for a, b in zip(self.coords, self._other(other))))

    def __le__(self, other) -> bool:
        return all(a <= b for a, b in zip(self.coords, self._other(other)))

    def __ge__(self, other) -> bool:
        return all(a >= b for a, b in zip(self.coords, self._other(other)))

    def plus(self) -> "LVec":
        return LVec(tuple(max(a, 0) for a in self.coords))

    def minus(self) -> "LVec":
        return LVec(tuple(max(-a, 0) for a in self.coords))

    def __abs__(self) -> "LVec":
        return LVec(tuple(abs(a) for a in self.coords))

    def norm(self) -> Fraction:
        return max(abs(a) for a in self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def support(self) -> frozenset[int]:
        return frozenset(i for i, a in enumerate(self.coords) if a)

    def is_idempotent(self) -> bool:
        return all(a in (0, 1) for a in self.coords)


@dataclass(frozen=True)
class Decomposition:
    pos: LVec
    neg: LVec
    abs: LVec
    norm: Fraction


def decompose(a: LVec) -> Decomposition:
    return Decomposition(a.plus(), a.minus(), abs(a), a.norm())


def norm_by_inf(a: LVec) -> Fraction:
    """Least rational r with |a| <= r; only coordinate values can be that least bound."""
    cands = sorted({abs(c) for c in a.coords} | {Fraction(0)})
    for r in cands:
        if abs(a) <= r:
            return r
    raise AssertionError("unreachable")


def random_lvec(rng: random.Random, dim: int, bound: int = 5, den: int = 4) -> LVec:
    return LVec(tuple(Fraction(rng.randint(-bound * den, bound * den), rng.randint(1, den))
                      for _ in range(dim)))


def random_nonneg(rng: random.Random, dim: int, bound: int = 5, den: int = 4) -> LVec:
    return abs(random_lvec(rng, dim, bound, den))


# -- the algebra and its ideals -------------------------------------------------

class LAlg:
    """The algebra Q^n with unit (1, ..., 1)."""

    def __init__(self, dim: int):
        if not isinstance(dim, int) or dim < 1:
            raise ValidationError("dimension must be a positive integer")
        self.dim = dim
        self.zero = LVec.const(dim, 0)
        self.one = LVec.const(dim, 1)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LAlg) and other.dim == self.dim

    def __hash__(self) -> int:
        return hash(("LAlg", self.dim))

    def __repr__(self) -> str:
        return f"LAlg({self.dim})"

    def vec(self, *values) -> LVec:
        v = LVec.of(*values)
        if v.dim != self.dim:
            raise ValidationError(f"expected {self.dim} coordinates, got {v.dim}")
        return v

    def unit(self, i: int) -> LVec:
        return LVec.unit(self.dim, i)

    def chi(self, Z: Iterable[int]) -> LVec:
        return LVec.chi(self.dim, Z)

    def const(self, r: Scalar) -> LVec:
        return LVec.const(self.dim, r)

    def ideal(self, zero_set: Iterable[int]) -> "LIdeal":
        return LIdeal(self.dim, frozenset(zero_set))

    def ideals(self) -> list["LIdeal"]:
        """All 2^n coordinate ideals, largest first."""
        n = self.dim
        return [LIdeal(n, frozenset(Z)) for k in range(n + 1)
                for Z in combinations(range(n), k)]

    def proper_ideals(self) -> list["LIdeal"]:
        return [I for I in self.ideals() if I.zero_set]

    def whole(self) -> "LIdeal":
        return LIdeal(self.dim, frozenset())

    def zero_ideal(self) -> "LIdeal":
        return LIdeal(self.dim, frozenset(range(self.dim)))


@dataclass(frozen=True)
class LIdeal:
    """The coordinate ideal of vectors vanishing on ``zero_set`` (0-based)."""

    dim: int
    zero_set: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "zero_set", frozenset(self.zero_set))
        if self.dim < 1:
            raise ValidationError("dimension must be positive")
        if not all(isinstance(i, int) and 0 <= i < self.dim for i in self.zero_set):
            raise ValidationError(f"zero set {sorted(self.zero_set)} out of range")

    def contains(self, a: LVec) -> bool:
        return all(a.coords[i] == 0 for i in self.zero_set)

    __contains__ = contains

    def __le__(self, other: "LIdeal") -> bool:
        return other.zero_set <= self.zero_set

    def __lt__(self, other: "LIdeal") -> bool:
        return self <= other and self != other

    def __add__(self, other: "LIdeal") -> "LIdeal":
        """Ideal sum: ``a + b`` with ``a`` in one and ``b`` in the other."""
        return LIdeal(self.dim, self.zero_set & other.zero_set)

    def meet(self, other: "LIdeal") -> "LIdeal":
        return LIdeal(self.dim, self.zero_set | other.zero_set)

    def join(self, other: "LIdeal") -> "LIdeal":
        return arch_hull(self + other)

    @property
    def is_whole(self) -> bool:
        return not self.zero_set

    @property
    def is_proper(self) -> bool:
        return bool(self.zero_set)

    @property
    def is_maximal(self) -> bool:
        return len(self.zero_set) == 1

    def label(self) -> str:
        return "I{" + ",".join(str(i + 1) for i in sorted(self.zero_set)) + "}"

    def __repr__(self) -> str:
        return f"LIdeal({self.dim}, {self.label()})"

    def sort_key(self) -> tuple:
        return (-len(self.zero_set), tuple(sorted(self.zero_set)))


def _dim_of(S: Sequence[LVec], dim: int | None) -> int:
    if dim is not None:
        return dim
    if not S:
        raise ValidationError("dimension needed for an empty generating set")
    return S[0].dim


def lideal_generated(S: Iterable[LVec], dim: int | None = None) -> LIdeal:
    """Smallest l-ideal containing ``S``: zero set is where every generator vanishes."""
    S = list(S)
    n = _dim_of(S, dim)
    return LIdeal(n, frozenset(i for i in range(n) if all(a.coords[i] == 0 for a in S)))


def generated_member(S: Sequence[LVec], x: LVec) -> bool:
    """``|x| <= m |a|`` for some m >= 1, with ``a`` the sum of ``|s|`` over ``S``.

    For a single generator this is the textbook description; for several, the
    sum of absolute values is the one generator that dominates them all.
    """
    if not S:
        return x.is_zero()
    a = S[0] * 0
    for s in S:
        a = a + abs(s)
    return dominated(x, a)


def dominated(x: LVec, a: LVec) -> bool:
    """Whether ``|x| <= m |a|`` for some integer ``m >= 1``."""
    m = 1
    for xi, ai in zip(x.coords, a.coords):
        xi, ai = abs(xi), abs(ai)
        if ai == 0:
            if xi != 0:
                return False
        else:
            m = max(m, -(-xi // ai) if xi else 1)
    return abs(x) <= m * abs(a)


def dominating_multiplier(x: LVec, a: LVec) -> int | None:
    """Smallest ``m >= 1`` with ``|x| <= m |a|``, or ``None``."""
    if not dominated(x, a):
        return None
    m = 1
    for xi, ai in zip(x.coords, a.coords):
        if ai:
            m = max(m, int(-(-abs(xi) // abs(ai))))
    return m


# -- archimedean hulls -----------------------------------------------------------

def _critical_n(x: LVec) -> int:
    """An n with n|x_j| > 1 at every nonzero coordinate."""
    n = 1
    for c in x.coords:
        if c:
            n = max(n, floor(1 / abs(c)) + 1)
    return n


def hull_clause(I: LIdeal, x: LVec, n: int) -> bool:
    """``(n|x| - 1)^+`` lies in ``I``."""
    return I.contains((n * abs(x) - 1).plus())


def hull_member(I: LIdeal, x: LVec) -> bool:
    """``x`` is in the archimedean hull of ``I``: ``(n|x|-1)^+`` in ``I`` for all n >= 1.

    The clause is monotone in n, so it holds for every n iff it holds at one n
    large enough to push every nonzero ``n|x_j|`` past 1.
    """
    return hull_clause(I, x, _critical_n(x))


def hull_member_upto(I: LIdeal, x: LVec, n_max: int) -> bool:
    return all(hull_clause(I, x, n) for n in range(1, n_max + 1))


def _ideal_from_test(dim: int, test: Callable[[LVec], bool]) -> LIdeal:
    # an l-ideal of Q^n is decided by which unit vectors it holds
    return LIdeal(dim, frozenset(i for i in range(dim) if not test(LVec.unit(dim, i))))


def arch_hull(I: Union[LIdeal, Iterable[LVec]], dim: int | None = None) -> LIdeal:
    if not isinstance(I, LIdeal):
        I = lideal_generated(I, dim)
    return _hull_of_ideal(I)


@lru_cache(maxsize=4096)
def _hull_of_ideal(I: LIdeal) -> LIdeal:
    return _ideal_from_test(I.dim, lambda e: hull_member(I, e))


def clear_caches() -> None:
    """Drop memoized hulls (needed when a membership test is swapped out)."""
    _hull_of_ideal.cache_clear()


def k_member(I: LIdeal, a: LVec, b: LVec | None = None) -> bool:
    """``(n|a| - b)^+`` in ``I`` for all n >= 1, for the given ``b >= 0`` or for some.

    With ``b`` fixed, a coordinate j in the zero set with ``a_j != 0`` fails as
    soon as ``n|a_j| > b_j``.  Any ``b`` that works makes ``a`` vanish on the
    zero set, and then ``b = 0`` works too, so the existential reduces to it.
    """
    if b is None:
        b = a * 0
    if not b >= 0:
        raise ValidationError("b must be nonnegative")
    n = 1
    for j in I.zero_set:
        if a.coords[j]:
            n = max(n, floor(b.coords[j] / abs(a.coords[j])) + 1)
    return I.contains((n * abs(a) - b).plus())


def k_operator(I: LIdeal) -> LIdeal:
    return _ideal_from_test(I.dim, lambda e: k_member(I, e))


def k_iterate(I: LIdeal, limit: int = 10) -> tuple[LIdeal, int]:
    """Iterate ``k`` until it stops moving; returns the fixed point and step count."""
    cur = k_operator(I)
    for step in range(1, limit + 1):
        nxt = k_operator(cur)
        if nxt == cur:
            return cur, step
        cur = nxt
    raise AssertionError("k did not stabilize")


def is_archimedean_quotient(I: LIdeal, a: LVec) -> bool:
    """The archimedean law in ``A/I`` at ``a``: ``n a <= 1`` for all n forces ``a <= 0``.

    The premise is tested at one n large enough to exceed 1 wherever a
    surviving coordinate is positive, which decides it for every n.
    """
    if I.is_whole:
        return True
    q = Quotient(I).project(a)
    n = _critical_n(q)
    prem = q * n <= 1
    return (not prem) or q <= 0


def hull_oracle(I: LIdeal) -> LIdeal:
    """Intersection of every archimedean coordinate ideal containing ``I``."""
    n = I.dim
    Z: set[int] = set()
    for J in LAlg(n).ideals():
        if I <= J and all(is_archimedean_quotient(J, LVec.chi(n, W) - LVec.chi(n, V))
                          for W in _small_subsets(n) for V in _small_subsets(n)):
            Z |= J.zero_set
    return LIdeal(n, frozenset(Z))


def _small_subsets(n: int) -> list[frozenset[int]]:
    return [frozenset(), *(frozenset({i}) for i in range(n)), frozenset(range(n))]


def sum_to_unit_witness(I: LIdeal, J: LIdeal) -> tuple[LVec, LVec] | None:
    """``0 <= a`` in I and ``0 <= b`` in J with ``a + b = 1``, when ``I + J`` is everything."""
    if (I + J).zero_set:
        return None
    a = LVec.chi(I.dim, range(I.dim)) - LVec.chi(I.dim, I.zero_set)
    return a, 1 - a


def unit_multiplier(x: LVec, i: int) -> LVec:
    """``m`` with ``m x = e_i``: an ideal holding ``x`` with ``x_i != 0`` holds ``e_i``."""
    if not x.coords[i]:
        raise ValidationError(f"coordinate {i} of x is zero")
    return LVec.unit(x.dim, i) * (1 / x.coords[i])


# -- quotients --------------------------------------------------------------------

class Quotient:
    """``A/I`` realised as the coordinates in the zero set of ``I``."""

    def __init__(self, I: LIdeal):
        self.ideal = I
        self.coords = tuple(sorted(I.zero_set))
        self.dim = len(self.coords)

    @property
    def degenerate(self) -> bool:
        return self.dim == 0

    def project(self, a: LVec) -> LVec:
        if self.degenerate:
            raise ValidationError("quotient by the whole algebra is the zero algebra")
        return LVec(tuple(a.coords[i] for i in self.coords))

    def nonneg(self, a: LVec) -> bool:
        return self.project(a) >= 0

    def kernel_contains(self, a: LVec) -> bool:
        return self.project(a).is_zero()


def quotient(I: LIdeal) -> Quotient:
    return Quotient(I)


# -- the frame of archimedean ideals --------------------------------------------

def arch_frame(dim: int) -> FinDistLattice:
    return FinDistLattice(LAlg(dim).ideals(), lambda I, J: I <= J)


# -- Yosida space ------------------------------------------------------------------

class Yosida:
    """Maximal ideals ``M_i``; a function on them is a vector indexed by i."""

    def __init__(self, dim: int):
        self.dim = dim
        self.points = tuple(LIdeal(dim, frozenset({i})) for i in range(dim))

    def z_ell(self, I: LIdeal) -> frozenset[int]:
        """Indices of the maximal ideals containing ``I``."""
        return frozenset(k for k, M in enumerate(self.points) if I <= M)

    def zeta(self, a: LVec) -> LVec:
        # a + M_i = a_i + M_i
        return LVec(tuple(a.coords[i] for i in range(self.dim)))


def yosida(dim: int) -> Yosida:
    return Yosida(dim)


# -- idempotents -------------------------------------------------------------------

class IdempotentAlg:
    """0/1 vectors of Q^n with ``e v f = e + f - ef``, ``e ^ f = ef``, ``not e = 1 - e``."""

    def __init__(self, dim: int):
        self.dim = dim
        self.bottom = LVec.const(dim, 0)
        self.top = LVec.const(dim, 1)

    def elements(self) -> list[LVec]:
        return [LVec.chi(self.dim, (i for i in range(self.dim) if m >> i & 1))
                for m in range(2 ** self.dim)]

    def __iter__(self):
        return iter(self.elements())

    def __len__(self) -> int:
        return 2 ** self.dim

    def __contains__(self, e: object) -> bool:
        return isinstance(e, LVec) and e.dim == self.dim and e.is_idempotent()

    # on 0/1 vectors the ring formulas reduce to set operations on supports

    def meet(self, e: LVec, f: LVec) -> LVec:
        return LVec.chi(self.dim, e.support() & f.support())

    def join(self, e: LVec, f: LVec) -> LVec:
        return LVec.chi(self.dim, e.support() | f.support())

    def complement(self, e: LVec) -> LVec:
        return LVec.chi(self.dim, frozenset(range(self.dim)) - e.support())

    def leq(self, e: LVec, f: LVec) -> bool:
        return e <= f

    def as_boolalg(self) -> tuple[FinBoolAlg, Callable[[frozenset], LVec]]:
        """Powerset of coordinate indices together with ``Z -> chi_Z``."""
        B = FinBoolAlg(tuple(range(self.dim)))
        return B, lambda Z: LVec.chi(self.dim, Z)


def idempotents(dim: int) -> IdempotentAlg:
    return IdempotentAlg(dim)


def scaled_idempotent_order(r: Fraction, e: LVec, s: Fraction, f: LVec) -> bool:
    """For nonzero idempotents and ``r, s > 0``: ``re <= sf`` implies ``r <= s`` and ``e <= f``."""
    if not (r * e <= s * f):
        return True
    return r <= s and e <= f


# -- Specker algebras --------------------------------------------------------------

class SpeckerAlg:
    """Specker algebra of a finite boolean algebra: Q^atoms, with ``x_e = chi(e)``."""

    def __init__(self, B: FinBoolAlg):
        self.B = B
        self.dim = len(B.atoms)
        self._pos = {a: k for k, a in enumerate(B.atoms)}
        self.id_alg = IdempotentAlg(self.dim)

    def x(self, e: frozenset) -> LVec:
        return LVec.chi(self.dim, (self._pos[a] for a in e))

    def atom_of(self, k: int) -> frozenset:
        return frozenset({self.B.atoms[k]})

    def element_of(self, v: LVec) -> frozenset:
        """Inverse of ``x`` on idempotents."""
        if not v.is_idempotent():
            raise ValidationError(f"{v!r} is not an idempotent")
        return frozenset(self.B.atoms[k] for k in v.support())

    def relation_violations(self) -> list[str]:
        """The four defining relations, checked on every pair."""
        bad = []
        x, B = self.x, self.B
        if not x(B.bottom).is_zero():
            bad.append("x_0 != 0")
        for e in B.elements():
            if x(B.complement(e)) != 1 - x(e):
                bad.append(f"x_not at {B.label(e)}")
            for f in B.elements():
                if x(e & f) != x(e) * x(f):
                    bad.append(f"x_meet at {B.label(e)},{B.label(f)}")
                if x(e | f) != x(e) + x(f) - x(e) * x(f):
                    bad.append(f"x_join at {B.label(e)},{B.label(f)}")
        return bad


def specker_of(B: FinBoolAlg) -> SpeckerAlg:
    return SpeckerAlg(B)


def ortho_decomp(spec: SpeckerAlg, a: LVec) -> list[tuple[Fraction, frozenset]]:
    """``a = sum r_k x_{b_k}``: disjoint ``b_k``, distinct nonzero ``r_k``.

    Terms are ordered by the first atom each ``b_k`` holds.
    """
    if a.dim != spec.dim:
        raise ValidationError("dimension mismatch")
    groups: dict[Fraction, list[int]] = {}
    for k, c in enumerate(a.coords):
        if c:
            groups.setdefault(c, []).append(k)
    terms = sorted(groups.items(), key=lambda item: item[1][0])
    return [(r, frozenset(spec.B.atoms[k] for k in ks)) for r, ks in terms]


def recompose(spec: SpeckerAlg, terms: Sequence[tuple[Fraction, frozenset]]) -> LVec:
    out = LVec.const(spec.dim, 0)
    for r, b in terms:
        out = out + r * spec.x(b)
    return out


def specker_morphism(spec: SpeckerAlg, tau: Callable[[frozenset], LVec],
                     target_dim: int) -> Callable[[LVec], LVec]:
    """The l-algebra map ``sigma`` with ``sigma(x_b) = tau(b)``.

    ``tau`` must be a boolean morphism into the idempotents of Q^target_dim.
    """
    ids = IdempotentAlg(target_dim)
    for b in spec.B.elements():
        v = tau(b)
        if not (isinstance(v, LVec) and v.dim == target_dim and v.is_idempotent()):
            raise MorphismError(f"tau({spec.B.label(b)}) is not an idempotent of Q^{target_dim}")
    law = order.boolean_hom_violation(spec.B, tau, ids)
    if law is not None:
        raise MorphismError(f"tau does not preserve {law}")
    images = [tau(spec.atom_of(k)) for k in range(spec.dim)]

    def sigma(v: LVec) -> LVec:
        out = LVec.const(target_dim, 0)
        for k, c in enumerate(v.coords):
            if c:
                out = out + c * images[k]
        return out
    return sigma


# -- Dedekind completion -----------------------------------------------------------

class Dedekind:
    """Finite-dimensional Q^n is its own Dedekind completion."""

    def __init__(self, dim: int):
        self.dim = dim

    def embed(self, a: LVec) -> LVec:
        return a

    def sup(self, S: Iterable[LVec]) -> LVec:
        S = list(S)
        if not S:
            raise ValidationError("sup of the empty family needs a lower bound")
        out = S[0]
        for v in S[1:]:
            out = out | v
        return out

    def inf(self, S: Iterable[LVec]) -> LVec:
        S = list(S)
        if not S:
            raise ValidationError("inf of the empty family needs an upper bound")
        out = S[0]
        for v in S[1:]:
            out = out & v
        return out

    def join_from_image(self, d: LVec) -> list[LVec]:
        """Elements of the image joining to ``d``: ``d`` itself."""
        return [self.embed(d)]


def dedekind_embed(dim: int) -> Dedekind:
    return Dedekind(dim)


def automorphism_fixing_is_identity(dim: int, f: Callable[[LVec], LVec]) -> bool:
    """An l-algebra map of Q^n that fixes every element is pinned down by unit vectors."""
    return all(f(LVec.unit(dim, i)) == LVec.unit(dim, i) for i in range(dim))


# -- identity suite for l-algebras -------------------------------------------------

def _identity_laws(dim: int) -> dict[str, Callable[..., bool]]:
    Y = Yosida(dim)
    proj = Quotient(LIdeal(dim, frozenset(range(0, dim, 2))))
    return {
        "sum_distributes_over_join": lambda a, b, c, r, s: a + (b | c) == (a + b) | (a + c),
        "sum_distributes_over_meet": lambda a, b, c, r, s: a + (b & c) == (a + b) & (a + c),
        "meet_distributes_over_join": lambda a, b, c, r, s: a & (b | c) == (a & b) | (a & c),
        "negation_swaps_join_meet": lambda a, b, c, r, s: -(a | b) == (-a) & (-b)
        and -(a & b) == (-a) | (-b),
        "negative_part_is_positive_of_negation": lambda a, b, c, r, s: a.minus() == (-a).plus(),
        "positive_minus_negative": lambda a, b, c, r, s: a == a.plus() - a.minus()
        and abs(a) == a.plus() + a.minus(),
        "positive_part_subadditive": lambda a, b, c, r, s: (a + b).plus() <= a.plus() + b.plus()
        and (a + b).minus() <= a.minus() + b.minus(),
        "positive_negative_disjoint": lambda a, b, c, r, s: (a.plus() & a.minus()).is_zero()
        and (a.plus() * a.minus()).is_zero(),
        "scalar_join": lambda a, b, c, r, s: r * (a | b) == (r * a) | (r * b),
        "disjoint_scaling": lambda a, b, c, r, s: not (abs(a) & abs(b)).is_zero()
        or (r * abs(a) & s * abs(b)).is_zero(),
        "product_of_joins": lambda a, b, c, r, s: (abs(a) | abs(b)) * abs(c)
        == (abs(a) * abs(c)) | (abs(b) * abs(c)),
        "morphisms_preserve_abs": lambda a, b, c, r, s: Y.zeta(abs(a)) == abs(Y.zeta(a))
        and (proj.degenerate or proj.project(abs(a)) == abs(proj.project(a))),
        "norm_is_least_bound": lambda a, b, c, r, s: a.norm() == norm_by_inf(a),
    }


IDENTITY_LAWS = tuple(_identity_laws(1))


def _register_identity(name: str) -> None:
    @register(f"identity.{name}")
    def pred(inst: dict, a: LVec, b: LVec, c: LVec, r: Fraction, s: Fraction) -> bool:
        return _identity_laws(int(inst["dim"]))[name](a, b, c, r, s)


for _law in IDENTITY_LAWS:
    _register_identity(_law)


def identity_suite(dim: int, samples: int = 1000, seed: int = 0) -> Report:
    """Lattice-ring identities on seeded random vectors, each exact."""
    rng = random.Random(f"identities:{dim}:{seed}")
    rep = Report({"kind": "identities", "dim": dim})
    laws = _identity_laws(dim)
    fails: dict[str, dict] = {}
    t = time.perf_counter()
    for _ in range(samples):
        a, b, c = (random_lvec(rng, dim) for _ in range(3))
        # disjointness needs actual disjoint supports now and then
        if rng.random() < 0.3:
            cut = rng.randrange(dim + 1)
            a = LVec(tuple(x if k < cut else Fraction(0) for k, x in enumerate(a.coords)))
            b = LVec(tuple(x if k >= cut else Fraction(0) for k, x in enumerate(b.coords)))
        r = Fraction(rng.randint(0, 12), rng.randint(1, 4))
        s = Fraction(rng.randint(0, 12), rng.randint(1, 4))
        for name, law in laws.items():
            if name not in fails and not law(a, b, c, r, s):
                fails[name] = {"a": a, "b": b, "c": c, "r": r, "s": s}
    for name in laws:
        w = None
        if name in fails:
            w = {"counterexample": counterexample(f"identity.{name}", rep.instance, fails[name])}
        rep.record(name, name not in fails, w, sampled=True, started=t)
    return rep


# -- hull suite --------------------------------------------------------------------

def _zero_set(n: int, zeroSet: Sequence[int]) -> LIdeal:
    return LIdeal(n, frozenset(int(z) - 1 for z in zeroSet))


@register("hull.formula")
def _h_formula(inst, I):
    # every coordinate ideal of Q^n is already archimedean
    I = _zero_set(int(inst["dim"]), I)
    return arch_hull(I) == hull_oracle(I) == I


@register("hull.k_one_step")
def _h_k(inst, I):
    I = _zero_set(int(inst["dim"]), I)
    return k_operator(I) == arch_hull(I) and k_iterate(I) == (arch_hull(I), 1)


@register("hull.membership")
def _h_member(inst, I, x):
    # the single critical n decides the clause for every n up to well past it
    I = _zero_set(int(inst["dim"]), I)
    got = hull_member(I, x)
    return got == hull_member_upto(I, x, 2 * _critical_n(x) + 2) == I.contains(x)


@register("hull.archimedean")
def _h_arch(inst, I, a):
    I = _zero_set(int(inst["dim"]), I)
    return is_archimedean_quotient(arch_hull(I), a)


@register("hull.generated")
def _h_generated(inst, S):
    n = int(inst["dim"])
    J = arch_hull(S, n)
    return all(J.contains(x) for x in S) and J == lideal_generated(S, n)


def verify_hulls(dim: int, samples: int = 200, seed: int = 0) -> Report:
    """Hull and k operators against their oracles on every ideal plus sampled vectors."""
    rng = random.Random(f"hulls:{dim}:{seed}")
    rep = Report({"kind": "hulls", "dim": dim})
    zs = [sorted(z + 1 for z in I.zero_set) for I in LAlg(dim).ideals()]
    run_check(rep, "hull_formula", "hull.formula", ({"I": z} for z in zs), sampled=False)
    run_check(rep, "k_one_step", "hull.k_one_step", ({"I": z} for z in zs), sampled=False)
    sparse = lambda: LVec.chi(dim, [i for i in range(dim) if rng.random() < 0.5])  # noqa: E731
    run_check(rep, "membership", "hull.membership",
              ({"I": rng.choice(zs), "x": random_lvec(rng, dim) * sparse()}
               for _ in range(samples)))
    run_check(rep, "archimedean", "hull.archimedean",
              ({"I": rng.choice(zs), "a": random_lvec(rng, dim)} for _ in range(samples)))
    run_check(rep, "generated", "hull.generated",
              ({"S": [random_lvec(rng, dim) * sparse() for _ in range(rng.randint(1, 3))]}
               for _ in range(samples)))
    return rep
