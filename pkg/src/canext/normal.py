"""Normal functions on finite posets with the Alexandroff topology.

The least open neighbourhood of ``x`` is ``up(x)``, so the upper and lower
envelopes are a max and a min over ``up(x)``.  A function is normal when it
equals the lower envelope of its upper envelope.  The second half of the
module ties the normal functions on the poset of proper ideals of Q^n to the
canonical extension built in :mod:`canext.bal`.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Callable, Iterable, Mapping, Sequence

from . import bal, order
from .bal import CanExtContext, context, s_closed_form, s_oracle
from .checks import register, run_check
from .lalg import LIdeal, LVec, random_lvec
from .order import FinPoset, RegularOpenAlgebra, ValidationError
from .report import Report

THREE_VALUES = (Fraction(0), Fraction(1, 2), Fraction(1))


@dataclass(frozen=True)
class NormalFn:
    """A rational-valued function on a finite poset (normal or not)."""

    poset: FinPoset
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.values) != len(self.poset):
            raise ValidationError("one value per poset element is required")
        if type(self.values) is not tuple or not all(type(v) is Fraction for v in self.values):
            object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    @classmethod
    def of(cls, P: FinPoset, values: Mapping | Sequence) -> "NormalFn":
        if isinstance(values, Mapping):
            missing = [x for x in P.elements if x not in values]
            if missing:
                raise ValidationError(f"no value for {missing}")
            return cls(P, tuple(Fraction(values[x]) for x in P.elements))
        return cls(P, tuple(values))

    @classmethod
    def const(cls, P: FinPoset, c) -> "NormalFn":
        return cls(P, (Fraction(c),) * len(P))

    @classmethod
    def indicator(cls, P: FinPoset, U: Iterable[int]) -> "NormalFn":
        U = frozenset(U)
        return cls(P, tuple(Fraction(int(k in U)) for k in range(len(P))))

    def __getitem__(self, label) -> Fraction:
        return self.values[self.poset.index(label)]

    def as_dict(self) -> dict:
        return dict(zip(self.poset.elements, self.values))

    def __repr__(self) -> str:
        body = ", ".join(f"{x}:{v}" for x, v in zip(self.poset.elements, self.values))
        return f"NormalFn({body})"

    def to_json(self) -> dict:
        from .serialize import frac_str, poset_to_json
        return {"poset": poset_to_json(self.poset),
                "values": {str(x): frac_str(v) for x, v in zip(self.poset.elements, self.values)}}

    @classmethod
    def from_json(cls, d: dict) -> "NormalFn":
        from .serialize import parse_frac, poset_from_json
        P = poset_from_json(d["poset"])
        vals = {str(k): parse_frac(v) for k, v in d["values"].items()}
        if set(vals) != {str(x) for x in P.elements}:
            raise ValidationError("values must name every poset element exactly once")
        return cls(P, tuple(vals[str(x)] for x in P.elements))

    # envelopes
    def upper(self) -> "NormalFn":
        """``f^*(x) = max f[up x]``."""
        return self._envelope(max)

    def lower(self) -> "NormalFn":
        """``f_*(x) = min f[up x]``."""
        return self._envelope(min)

    def _keys(self) -> list[int]:
        # integers over a common denominator: same order, cheap comparisons
        den = lcm(*(c.denominator for c in self.values))
        return [c.numerator * (den // c.denominator) for c in self.values]

    def _envelope(self, pick) -> "NormalFn":
        P, v, key = self.poset, self.values, self._keys()
        return NormalFn(P, tuple(v[pick(P.up[x], key=key.__getitem__)] for x in range(len(P))))

    def sharp(self) -> "NormalFn":
        return self.upper().lower()

    def is_normal(self) -> bool:
        return self.sharp() == self

    def __le__(self, other: "NormalFn") -> bool:
        _same(self, other)
        return all(a <= b for a, b in zip(self.values, other.values))

    def is_order_preserving(self) -> bool:
        k = self._keys()
        return all(k[i] <= k[j] for i, j in self.poset.pairs())

    def is_order_reversing(self) -> bool:
        k = self._keys()
        return all(k[i] >= k[j] for i, j in self.poset.pairs())


def _same(f: NormalFn, g: NormalFn) -> None:
    if f.poset != g.poset:
        raise ValidationError("functions live on different posets")


def envelopes(f: NormalFn) -> tuple[NormalFn, NormalFn, NormalFn]:
    return f.upper(), f.lower(), f.sharp()


_POINTWISE: dict[str, Callable[[Fraction, Fraction], Fraction]] = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "join": max,
    "meet": min,
}


def n_ops(f: NormalFn, g: NormalFn, op: str) -> NormalFn:
    """The operation of N(X): the pointwise result, normalized."""
    _same(f, g)
    if op not in _POINTWISE:
        raise ValidationError(f"unknown operation {op!r}; use one of {sorted(_POINTWISE)}")
    fn = _POINTWISE[op]
    return NormalFn(f.poset, tuple(fn(a, b) for a, b in zip(f.values, g.values))).sharp()


def scalar(r, f: NormalFn) -> NormalFn:
    r = Fraction(r)
    return NormalFn(f.poset, tuple(r * v for v in f.values)).sharp()


def idempotents_nx(P: FinPoset, cap: int = order.MAX_BRUTE_FORCE) -> list[frozenset[int]]:
    """Supports of the normal 0/1 functions, by exhaustive search."""
    if len(P) > cap:
        raise ValidationError(f"{len(P)} elements exceeds the exhaustive cap {cap}; "
                              "sample instead")
    out = []
    for bits in itertools.product((0, 1), repeat=len(P)):
        f = NormalFn(P, bits)
        if f.is_normal():
            out.append(frozenset(k for k, b in enumerate(bits) if b))
    return sorted(out, key=order._key)


def to_csv(f: NormalFn) -> str:
    """Table of ``element, f, f^*, f_*, f^#``."""
    from .serialize import csv_table
    up, lo, sh = envelopes(f)
    rows = zip(f.poset.elements, f.values, up.values, lo.values, sh.values)
    return csv_table(["element", "f", "upper", "lower", "normalized"], rows)


# -- the poset of proper ideals -------------------------------------------------

@dataclass
class IdealSpace:
    """Proper ideals of Q^n by inclusion, with the maps into and out of N(X)."""

    ctx: CanExtContext
    X: FinPoset
    ideals: tuple[LIdeal, ...]
    ro: RegularOpenAlgebra
    maximal: tuple[int, ...]
    atom_sets: tuple[frozenset[int], ...]

    @property
    def dim(self) -> int:
        return self.ctx.dim

    def index(self, I: LIdeal) -> int:
        return self.ideals.index(I)

    def up(self, I: LIdeal) -> frozenset[int]:
        return frozenset(k for k, J in enumerate(self.ideals) if I <= J)

    def u_set(self, I: LIdeal) -> frozenset[int]:
        return frozenset(k for k, J in enumerate(self.ideals) if J.join(I).is_whole)


@lru_cache(maxsize=None)
def ideal_space(n: int) -> IdealSpace:
    ctx = context(n)
    ideals = tuple(I for I in ctx.ideals if I.is_proper)
    X = FinPoset([I.label() for I in ideals],
                 [(i, j) for i in range(len(ideals)) for j in range(len(ideals))
                  if ideals[i] <= ideals[j]])
    ro = order.regular_opens(X)
    # the boolean map on B fixed by x_I -> chi of U_I, read off on atoms
    space = IdealSpace(ctx, X, ideals, ro, (), ())
    lam = lambda I: space.u_set(I)  # noqa: E731
    tau = ctx.B.extend(lam, ro)
    space.atom_sets = tuple(tau(ctx.RB.atom_of(k)) for k in range(ctx.RB.dim))
    space.maximal = tuple(ideals.index(M) for M in ctx.Y.points)
    return space


def u_ideal_set(n: int, I: LIdeal) -> tuple[frozenset[int], frozenset[int]]:
    """``(up I, U_I)`` as sets of positions in the ideal poset."""
    S = ideal_space(n)
    return S.up(I), S.u_set(I)


def phi(S: IdealSpace, d: LVec) -> NormalFn:
    """Image of a completion element, summed in N(X) over its atoms."""
    out = NormalFn.const(S.X, 0)
    for k, U in enumerate(S.atom_sets):
        term = NormalFn(S.X, tuple(d.coords[k] if j in U else Fraction(0)
                                   for j in range(len(S.X))))
        out = n_ops(out, term, "add")
    return out


def phi_preimage(S: IdealSpace, f: NormalFn) -> LVec:
    """Join of ``r x_not(I)`` over the ``r chi(up I)`` lying below ``f + t``, minus ``t``."""
    t = max(Fraction(0), -min(f.values))
    g = [v + t for v in f.values]
    out = [Fraction(0)] * S.ctx.RB.dim
    for k, I in enumerate(S.ideals):
        r = min(g[j] for j in S.X.up[k])
        for atom in S.ctx.x_not(I).support():
            out[atom] = max(out[atom], r)
    return LVec(tuple(c - t for c in out))


def psi(S: IdealSpace, f: NormalFn) -> LVec:
    """Restriction to the maximal ideals, as a vector indexed by coordinate."""
    if not f.is_normal():
        raise ValidationError("restriction is only defined on normal functions")
    return LVec(tuple(f.values[k] for k in S.maximal))


def lift(S: IdealSpace, h: LVec) -> NormalFn:
    """``h^u(I) = min h(M)`` over maximal ``M`` above ``I``."""
    return NormalFn(S.X, tuple(min(h.coords[i] for i, m in enumerate(S.maximal)
                                   if m in S.X.up[k])
                               for k in range(len(S.X))))


def gamma(S: IdealSpace, a: LVec) -> NormalFn:
    """``I_Z -> min a[Z]``."""
    return NormalFn(S.X, tuple(s_closed_form(I, a) for I in S.ideals))


def gamma_oracle(S: IdealSpace, a: LVec) -> NormalFn:
    """The same values, each found by bisection on membership of ``(a - r)^-``."""
    t = max(Fraction(0), -min(a.coords, default=Fraction(0)))
    return NormalFn(S.X, tuple(s_oracle(I, a + t) - t for I in S.ideals))


# -- replayable predicates ----------------------------------------------------------

def clear_caches() -> None:
    ideal_space.cache_clear()
    _POSETS.clear()


def _space(inst: dict) -> IdealSpace:
    return ideal_space(int(inst["dim"]))


def _ideal(n: int, zero_set: Sequence[int]) -> LIdeal:
    return LIdeal(n, frozenset(int(z) - 1 for z in zero_set))


_POSETS: dict[str, FinPoset] = {}


def _poset(inst: dict) -> FinPoset:
    from .serialize import poset_from_json
    key = json.dumps(inst["poset"], sort_keys=True)
    if key not in _POSETS:
        _POSETS[key] = poset_from_json(inst["poset"])
    return _POSETS[key]


@register("normal.u_sets")
def _n_u_sets(inst, I):
    S = _space(inst)
    I = _ideal(S.dim, I)
    up, U = S.up(I), S.u_set(I)
    return (up in S.ro and U in S.ro and S.ro.complement(U) == up
            and S.ro.complement(up) == U)


@register("normal.u_lattice_map")
def _n_u_lattice(inst):
    S = _space(inst)
    return order.is_lattice_hom(S.ctx.arch, S.u_set, S.ro)


@register("normal.u_meet")
def _n_u_meet(inst, I, J):
    S = _space(inst)
    I, J = _ideal(S.dim, I), _ideal(S.dim, J)
    return S.u_set(I.meet(J)) == S.u_set(I) & S.u_set(J)


@register("normal.u_extremes")
def _n_u_extremes(inst):
    S = _space(inst)
    n = S.dim
    return S.u_set(LIdeal(n, frozenset())) == S.X.everything and \
        S.u_set(LIdeal(n, frozenset(range(n)))) == frozenset()


@register("normal.zero_locus")
def _n_zero_locus(inst, I):
    S = _space(inst)
    I = _ideal(S.dim, I)
    complement = frozenset(range(S.dim)) - S.ctx.Y.z_ell(I)
    return complement == frozenset(i for i, m in enumerate(S.maximal) if m in S.u_set(I))


@register("normal.phi_generator")
def _n_phi_gen(inst, I):
    S = _space(inst)
    I = _ideal(S.dim, I)
    return phi(S, S.ctx.x(I)) == NormalFn.indicator(S.X, S.u_set(I))


@register("normal.phi_idempotents")
def _n_phi_idem(inst):
    # idempotents of the completion go bijectively onto the regular opens
    S = _space(inst)
    m = S.ctx.RB.dim
    images = []
    for bits in itertools.product((0, 1), repeat=m):
        f = phi(S, LVec(tuple(Fraction(b) for b in bits)))
        if not all(v in (0, 1) for v in f.values):
            return False
        images.append(frozenset(k for k, v in enumerate(f.values) if v))
    return sorted(images, key=order._key) == list(S.ro.elements)


@register("normal.phi_ops")
def _n_phi_ops(inst, d, e, r):
    S = _space(inst)
    pd, pe = phi(S, d), phi(S, e)
    return (phi(S, d + e) == n_ops(pd, pe, "add")
            and phi(S, d * e) == n_ops(pd, pe, "mul")
            and phi(S, d | e) == n_ops(pd, pe, "join")
            and phi(S, d & e) == n_ops(pd, pe, "meet")
            and phi(S, d * r) == scalar(r, pd))


@register("normal.phi_unital")
def _n_phi_unital(inst):
    S = _space(inst)
    return phi(S, LVec.const(S.ctx.RB.dim, 1)) == NormalFn.const(S.X, 1)


@register("normal.phi_injective")
def _n_phi_inj(inst, d, e):
    S = _space(inst)
    return (phi(S, d) == phi(S, e)) == (d == e)


@register("normal.phi_surjective")
def _n_phi_surj(inst, values):
    S = _space(inst)
    f = NormalFn(S.X, values).sharp()
    return phi(S, phi_preimage(S, f)) == f


@register("normal.psi_inverse")
def _n_psi_inv(inst, values, h):
    S = _space(inst)
    f = NormalFn(S.X, values).sharp()
    return psi(S, lift(S, h)) == h and lift(S, psi(S, f)) == f


@register("normal.gamma_oracle")
def _n_gamma_oracle(inst, a):
    S = _space(inst)
    g = gamma(S, a)
    return g == gamma_oracle(S, a) and g.is_normal()


@register("normal.gamma_is_phi_alpha")
def _n_gamma_phi(inst, a):
    S = _space(inst)
    return phi(S, bal.alpha(S.ctx, a)) == gamma(S, a)


@register("normal.diagram")
def _n_diagram(inst, a):
    S = _space(inst)
    return psi(S, phi(S, bal.alpha(S.ctx, a))) == S.ctx.Y.zeta(a) == psi(S, gamma(S, a))


def verify_normal_dim(n: int, samples: int = 500, seed: int = 0) -> Report:
    """The maps between the completion, N(X) and functions on the maximal ideals."""
    S = ideal_space(n)
    rep = Report({"kind": "normal", "dim": n,
                  "note": "finite instance of a theorem stated under the axiom of choice"})
    rng = random.Random(f"normal:{n}:{seed}")
    zs = [sorted(z + 1 for z in I.zero_set) for I in S.ctx.ideals]
    m = S.ctx.RB.dim
    rvec = lambda k: random_lvec(rng, k)  # noqa: E731

    run_check(rep, "u_sets_regular_and_complementary", "normal.u_sets",
              ({"I": z} for z in zs), sampled=False)
    run_check(rep, "u_is_lattice_map", "normal.u_lattice_map", [{}], sampled=False)
    run_check(rep, "u_of_meet", "normal.u_meet",
              ({"I": a, "J": b} for a in zs for b in zs), sampled=False)
    run_check(rep, "u_extremes", "normal.u_extremes", [{}], sampled=False)
    run_check(rep, "zero_locus_complement", "normal.zero_locus",
              ({"I": z} for z in zs), sampled=False)
    run_check(rep, "phi_on_generators", "normal.phi_generator",
              ({"I": z} for z in zs), sampled=False)
    run_check(rep, "phi_idempotents_onto_regular_opens", "normal.phi_idempotents", [{}],
              sampled=False)
    run_check(rep, "phi_unital", "normal.phi_unital", [{}], sampled=False)
    run_check(rep, "phi_preserves_operations", "normal.phi_ops",
              ({"d": rvec(m), "e": rvec(m), "r": Fraction(rng.randint(0, 12), rng.randint(1, 4))}
               for _ in range(samples)))
    run_check(rep, "phi_injective", "normal.phi_injective",
              ({"d": d, "e": d if k % 4 == 0 else rvec(m)}
               for k, d in ((k, rvec(m)) for k in range(samples))))
    run_check(rep, "phi_surjective", "normal.phi_surjective",
              ({"values": list(rvec(len(S.X)).coords)} for _ in range(samples)))
    run_check(rep, "psi_inverse_is_lift", "normal.psi_inverse",
              ({"values": list(rvec(len(S.X)).coords), "h": rvec(n)} for _ in range(samples)))
    run_check(rep, "gamma_matches_oracle", "normal.gamma_oracle",
              ({"a": rvec(n)} for _ in range(max(1, samples // 10))))
    run_check(rep, "gamma_is_phi_alpha", "normal.gamma_is_phi_alpha",
              ({"a": rvec(n)} for _ in range(samples)))
    run_check(rep, "psi_phi_alpha_is_zeta", "normal.diagram",
              ({"a": rvec(n)} for _ in range(samples)))
    return rep


# -- checks on arbitrary posets -----------------------------------------------------

@register("normal.lower_iff_preserving")
def _n_lower(inst, values):
    f = NormalFn(_poset(inst), values)
    return (f == f.lower()) == f.is_order_preserving()


@register("normal.upper_iff_reversing")
def _n_upper(inst, values):
    f = NormalFn(_poset(inst), values)
    return (f == f.upper()) == f.is_order_reversing()


@register("normal.envelopes")
def _n_env(inst, values):
    f = NormalFn(_poset(inst), values)
    up, lo, sh = envelopes(f)
    return (lo <= f <= up and up.is_order_reversing() and lo.is_order_preserving()
            and sh.is_normal())


@register("normal.idempotents")
def _n_idem(inst):
    P = _poset(inst)
    ro = order.regular_opens(P)
    found = idempotents_nx(P)
    if found != list(ro.elements):
        return False
    # boolean operations agree: meet pointwise, join and complement normalized
    top = NormalFn.const(P, 1)
    for U in found:
        fU = NormalFn.indicator(P, U)
        if n_ops(top, fU, "sub") != NormalFn.indicator(P, ro.complement(U)):
            return False
        for V in found:
            fV = NormalFn.indicator(P, V)
            if n_ops(fU, fV, "meet") != NormalFn.indicator(P, ro.meet(U, V)):
                return False
            if n_ops(fU, fV, "join") != NormalFn.indicator(P, ro.join(U, V)):
                return False
    return True


@register("normal.nx_identities")
def _n_nx_identities(inst, f, g, h, r):
    P = _poset(inst)
    f, g, h = (NormalFn(P, v).sharp() for v in (f, g, h))
    add = lambda x, y: n_ops(x, y, "add")  # noqa: E731
    mul = lambda x, y: n_ops(x, y, "mul")  # noqa: E731
    join = lambda x, y: n_ops(x, y, "join")  # noqa: E731
    meet = lambda x, y: n_ops(x, y, "meet")  # noqa: E731
    zero = NormalFn.const(P, 0)
    results = [add(f, g), mul(f, g), join(f, g), meet(f, g), scalar(r, f)]
    return (all(x.is_normal() for x in results)
            and add(f, zero) == f
            and add(f, g) == add(g, f)
            and add(add(f, g), h) == add(f, add(g, h))
            and mul(mul(f, g), h) == mul(f, mul(g, h))
            and mul(f, add(g, h)) == add(mul(f, g), mul(f, h))
            and add(f, join(g, h)) == join(add(f, g), add(f, h))
            and meet(f, join(g, h)) == join(meet(f, g), meet(f, h))
            and scalar(r, f) == NormalFn(P, tuple(r * v for v in f.values))
            and meet(f, g) == NormalFn(P, tuple(map(min, f.values, g.values))))


def verify_normal_poset(P: FinPoset, samples: int = 100, seed: int = 0,
                        values: Sequence[Fraction] = THREE_VALUES) -> Report:
    """Envelope laws, exhaustively over ``values``-valued functions, plus N(X) identities."""
    from .serialize import poset_to_json
    rep = Report({"kind": "normal_poset", "poset": poset_to_json(P)})
    rng = random.Random(f"normal_poset:{len(P)}:{seed}")
    every = list(itertools.product(values, repeat=len(P)))
    run_check(rep, "lower_envelope_iff_order_preserving", "normal.lower_iff_preserving",
              ({"values": v} for v in every), sampled=False)
    run_check(rep, "upper_envelope_iff_order_reversing", "normal.upper_iff_reversing",
              ({"values": v} for v in every), sampled=False)
    run_check(rep, "envelopes_and_idempotent_normalization", "normal.envelopes",
              ({"values": v} for v in every), sampled=False)
    run_check(rep, "idempotents_are_regular_opens", "normal.idempotents", [{}], sampled=False)
    rv = lambda: list(random_lvec(rng, len(P)).coords)  # noqa: E731
    run_check(rep, "nx_identities", "normal.nx_identities",
              ({"f": rv(), "g": rv(), "h": rv(), "r": Fraction(rng.randint(0, 8), rng.randint(1, 3))}
               for _ in range(samples)))
    return rep


def failures_as_counterexamples(rep: Report) -> list[dict]:
    return [c.witness["counterexample"] for c in rep.failures()
            if isinstance(c.witness, dict) and "counterexample" in c.witness]


__all__ = ["NormalFn", "envelopes", "n_ops", "scalar", "idempotents_nx", "to_csv",
           "IdealSpace", "ideal_space", "u_ideal_set", "phi", "phi_preimage", "psi", "lift",
           "gamma", "gamma_oracle", "verify_normal_dim", "verify_normal_poset"]
