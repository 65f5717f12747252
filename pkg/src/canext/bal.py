"""Point-free canonical extension of Q^n.

The target is the Specker algebra over the free boolean extension of the
frame of archimedean ideals.  At finite scale it is its own Dedekind
completion, so elements of the target are vectors indexed by the atoms of
that boolean algebra (the join-irreducible ideals).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import ceil, lcm
from typing import Callable, Iterator, Sequence

from . import lalg, order
from .checks import register, run_check
from .lalg import (Dedekind, IdempotentAlg, LAlg, LIdeal, LVec, SpeckerAlg, Yosida,
                   random_lvec, random_nonneg)
from .order import FinDistLattice, FreeBoolExt, ValidationError
from .report import Report

DEFAULT_EPS = (Fraction(1, 2), Fraction(1, 4), Fraction(1, 8))


@dataclass
class CanExtContext:
    """Everything the extension needs for one dimension, built once."""

    A: LAlg
    arch: FinDistLattice
    B: FreeBoolExt
    RB: SpeckerAlg
    D: Dedekind
    Y: Yosida
    ideals: tuple[LIdeal, ...]
    x_pos: dict = field(repr=False)
    x_neg: dict = field(repr=False)
    theta_fn: Callable[[LVec], LVec] = field(repr=False)
    theta_perm: tuple[int, ...] = field(repr=False)
    _terms: tuple = field(repr=False)

    @property
    def dim(self) -> int:
        return self.A.dim

    @property
    def proper(self) -> list[LIdeal]:
        return [I for I in self.ideals if I.is_proper]

    def x(self, I: LIdeal) -> LVec:
        """Idempotent of the free boolean extension generated by ``I``."""
        return self.x_pos[I]

    def x_not(self, I: LIdeal) -> LVec:
        return self.x_neg[I]

    def summary(self) -> dict:
        return {"dim": self.dim, "arch": len(self.ideals), "boolean": 2 ** self.RB.dim}

    @classmethod
    def build(cls, n: int) -> "CanExtContext":
        return context(n)


@lru_cache(maxsize=None)
def context(n: int) -> CanExtContext:
    A = LAlg(n)
    arch = lalg.arch_frame(n)
    B = order.free_boolean_extension(arch)
    RB = lalg.specker_of(B.ba)
    Y = lalg.yosida(n)
    ideals = tuple(arch.elements)
    x_pos = {I: RB.x(B.i(I)) for I in ideals}
    x_neg = {I: RB.x(B.not_i(I)) for I in ideals}

    # theta: from the Specker algebra to functions on the Yosida space, through
    # the boolean map extending I -> complement of its zero locus
    ids = IdempotentAlg(n)
    lam = lambda I: LVec.chi(n, set(range(n)) - Y.z_ell(I))  # noqa: E731
    if not order.is_lattice_hom(arch, lam, ids):
        raise AssertionError("zero-locus complement is not a lattice map")
    tau = B.extend(lam, ids)
    sigma = lalg.specker_morphism(RB, tau, n)
    images = [sigma(LVec.unit(RB.dim, k)) for k in range(RB.dim)]
    perm = []
    for v in images:
        if len(v.support()) != 1:
            raise AssertionError("theta does not send atoms to points")
        perm.append(next(iter(v.support())))
    if sorted(perm) != list(range(n)):
        raise AssertionError("theta is not a bijection on atoms")

    # per proper ideal: its zero coordinates and the atoms where x_not is 1
    terms = tuple((tuple(sorted(I.zero_set)), tuple(sorted(x_neg[I].support())))
                  for I in ideals if I.is_proper)
    return CanExtContext(A, arch, B, RB, lalg.dedekind_embed(RB.dim), Y, ideals,
                         x_pos, x_neg, sigma, tuple(perm), terms)


# -- alpha ---------------------------------------------------------------------

def default_shift(a: LVec) -> Fraction:
    """Smallest nonnegative integer ``s`` with ``a + s >= 0``."""
    return Fraction(max(0, ceil(a.minus().norm())))


def s_closed_form(I: LIdeal, v: LVec) -> Fraction | None:
    """``sup{r : (v - r)^- in I}``: the least coordinate of ``v`` on the zero set.

    ``None`` for the whole algebra, where every r qualifies.
    """
    if I.is_whole:
        return None
    return min(v.coords[i] for i in I.zero_set)


def s_oracle(I: LIdeal, v: LVec) -> Fraction | None:
    """The same supremum found only through membership tests.

    Bisection narrows the supremum to an interval shorter than ``1/(2D^2)``
    where D bounds the denominators of ``v``; the one rational of denominator at
    most D inside it is the answer, which is then confirmed by membership.
    """
    if not v >= 0:
        raise ValidationError("oracle expects a nonnegative vector")
    member = lambda r: I.contains((v - r).minus())  # noqa: E731
    if I.is_whole:
        return None
    lo, hi = Fraction(0), v.norm() + 1
    if not member(lo) or member(hi):
        raise AssertionError("bisection bracket is wrong")
    D = lcm(*(c.denominator for c in v.coords))
    width = Fraction(1, 2 * D * D)
    while hi - lo >= width:
        mid = (lo + hi) / 2
        if member(mid):
            lo = mid
        else:
            hi = mid
    cand = lo.limit_denominator(D)
    if not member(cand) or member(cand + width):
        raise AssertionError("bisection did not isolate the supremum")
    return cand


def alpha_join(ctx: CanExtContext, v: LVec) -> LVec:
    """``V { r x_not(I) : (v - r)^- in I }`` for ``v >= 0``, over every archimedean I.

    Each I contributes its supremum ``s_I`` (the whole algebra contributes 0);
    the join is coordinatewise max.
    """
    return _join_cached(ctx.dim, v.coords)


@lru_cache(maxsize=1 << 17)
def _join_cached(n: int, coords: tuple[Fraction, ...]) -> LVec:
    # integers over a common denominator: same order, much cheaper comparisons
    den = lcm(*(c.denominator for c in coords))
    ints = [c.numerator * (den // c.denominator) for c in coords]
    out = [0] * context(n).RB.dim
    for zeros, atoms in context(n)._terms:
        s_I = min(ints[i] for i in zeros)
        for k in atoms:
            if s_I > out[k]:
                out[k] = s_I
    return LVec(tuple(Fraction(x, den) for x in out))


def clear_caches() -> None:
    _join_cached.cache_clear()
    _density_meets.cache_clear()
    context.cache_clear()
    lalg.clear_caches()


def alpha(ctx: CanExtContext, a: LVec, s: Fraction | int | None = None) -> LVec:
    if a.dim != ctx.dim:
        raise ValidationError(f"expected an element of Q^{ctx.dim}")
    s = default_shift(a) if s is None else Fraction(s)
    v = a + s
    if not v >= 0:
        raise ValidationError(f"shift {s} does not make the element nonnegative")
    return alpha_join(ctx, v) - s


def theta(ctx: CanExtContext, d: LVec) -> LVec:
    return ctx.theta_fn(d)


def theta_inv(ctx: CanExtContext, f: LVec) -> LVec:
    out = [Fraction(0)] * ctx.RB.dim
    for k, j in enumerate(ctx.theta_perm):
        out[k] = f.coords[j]
    return LVec(tuple(out))


def zeta(ctx: CanExtContext, a: LVec) -> LVec:
    return ctx.Y.zeta(a)


def sup_below(d: LVec, x: LVec) -> Fraction:
    """``sup{r : r x <= d}`` for a nonzero idempotent ``x``."""
    return min(d.coords[k] for k in x.support())


# -- replayable predicates ----------------------------------------------------

def _ctx(inst: dict) -> CanExtContext:
    return context(int(inst["dim"]))


@register("bal.alpha_add")
def _p_add(inst, a, b):
    c = _ctx(inst)
    return alpha(c, a + b) == alpha(c, a) + alpha(c, b)


@register("bal.alpha_mul")
def _p_mul(inst, a, b):
    c = _ctx(inst)
    return alpha(c, a * b) == alpha(c, a) * alpha(c, b)


@register("bal.alpha_meet")
def _p_meet(inst, a, b):
    c = _ctx(inst)
    return alpha(c, a & b) == alpha(c, a) & alpha(c, b)


@register("bal.alpha_join")
def _p_join(inst, a, b):
    c = _ctx(inst)
    return alpha(c, a | b) == alpha(c, a) | alpha(c, b)


@register("bal.alpha_scalar")
def _p_scalar(inst, a, r):
    c = _ctx(inst)
    return alpha(c, r * a) == r * alpha(c, a)


@register("bal.alpha_unital")
def _p_unital(inst):
    c = _ctx(inst)
    one = c.A.one
    return (alpha(c, one) == LVec.const(c.RB.dim, 1)
            and alpha(c, c.A.zero) == LVec.const(c.RB.dim, 0))


@register("bal.alpha_injective")
def _p_injective(inst, a, b):
    c = _ctx(inst)
    return (alpha(c, a) == alpha(c, b)) == (a == b) and (alpha(c, a).is_zero() == a.is_zero())


@register("bal.s_independent")
def _p_s_independent(inst, a, t):
    c = _ctx(inst)
    s0 = default_shift(a)
    return alpha(c, a, s0) == alpha(c, a, s0 + t)


@register("bal.theta_alpha_is_zeta")
def _p_theta(inst, a):
    c = _ctx(inst)
    return theta(c, alpha(c, a)) == zeta(c, a) and theta_inv(c, zeta(c, a)) == alpha(c, a)


@register("bal.s_oracle")
def _p_s_oracle(inst, a):
    c = _ctx(inst)
    v = a + default_shift(a)
    return all(s_closed_form(I, v) == s_oracle(I, v) for I in c.ideals)


@register("bal.join_bounded")
def _p_bounded(inst, a):
    c = _ctx(inst)
    s = default_shift(a)
    v = a + s
    bound = a.norm() + s + 1
    return all(s_closed_form(I, v) <= bound for I in c.proper)


@register("bal.nonneg_formula")
def _p_nonneg(inst, a):
    # join over candidate r drawn from the finitely many values that matter,
    # each tested only through ideal membership
    c = _ctx(inst)
    if not a >= 0:
        return None
    cands = sorted(set(a.coords) | {Fraction(0)}, reverse=True)
    out = [Fraction(0)] * c.RB.dim
    for I in c.ideals:
        r = next(r for r in cands if I.contains((a - r).minus()))
        for k in c.x_not(I).support():
            out[k] = max(out[k], r)
    return LVec(tuple(out)) == alpha(c, a, 0) == alpha(c, a)


@register("bal.monotone")
def _p_monotone(inst, a, b):
    c = _ctx(inst)
    lo, hi = a & b, a | b
    return alpha(c, lo) <= alpha(c, a) <= alpha(c, hi)


@register("bal.scalar_shift")
def _p_shift(inst, a, t):
    c = _ctx(inst)
    return alpha(c, a + t) == alpha(c, a) + t


def density_family(ctx: CanExtContext, I: LIdeal, extras: Sequence[LVec]) -> list[LVec]:
    """Nonnegative ``a`` with ``(a - 1)^- in I``: the canonical ``chi_Z`` first."""
    fam = [LVec.chi(ctx.dim, I.zero_set)]
    for e in extras:
        fam.append(LVec.chi(ctx.dim, I.zero_set) + e)
    return fam


@register("bal.dense_meet")
def _p_dense(inst, zeroSet, extras):
    c = _ctx(inst)
    I = LIdeal(c.dim, frozenset(z - 1 for z in zeroSet))
    fam = density_family(c, I, extras)
    if not all(a >= 0 and I.contains((a - 1).minus()) for a in fam):
        return False
    return c.D.inf(alpha(c, a) for a in fam) == c.x_not(I)


@lru_cache(maxsize=None)
def _density_meets(n: int) -> tuple[LVec, ...]:
    c = context(n)
    return tuple(c.D.inf(alpha(c, a) for a in density_family(c, I, ())) for I in c.proper)


@register("bal.dense_join")
def _p_dense_join(inst, d):
    """``d`` rebuilt as a join of the meets ``x_not(I)`` from the previous clause."""
    c = _ctx(inst)
    t = default_shift(d)
    v = d + t
    out = LVec.const(c.RB.dim, 0)
    for meet in _density_meets(c.dim):
        out = out | (sup_below(v, meet) * meet)
    return out - t == d


def compact_subfamily(T: Sequence[LVec]) -> list[int]:
    """Indices of a small ``T0`` with ``V T0 >= 0`` (greedy cover), or all of T."""
    n = T[0].dim
    need = set(range(n))
    chosen: list[int] = []
    while need:
        covers = [{j for j in need if t.coords[j] >= 0} for t in T]
        best = max(range(len(T)), key=lambda k: (len(covers[k]), -k))
        got = covers[best]
        if not got:
            return list(range(len(T)))
        chosen.append(best)
        need -= got
    return sorted(chosen)


@register("bal.compact")
def _p_compact(inst, T, eps):
    c = _ctx(inst)
    top = c.D.sup(alpha(c, a) for a in T)
    if not top >= eps:
        return None
    # the hull join of the positive parts is everything ...
    L = c.A.zero_ideal()
    for a in T:
        L = L.join(lalg.arch_hull([a.plus()]))
    if not L.is_whole:
        return False
    # ... so some finite subfamily already has nonnegative join
    T0 = [T[k] for k in compact_subfamily(T)]
    return c.D.sup(T0) >= 0


# -- verifier ------------------------------------------------------------------

def _samples(rng: random.Random, dim: int, count: int) -> Iterator[tuple[LVec, LVec]]:
    for _ in range(count):
        yield random_lvec(rng, dim), random_lvec(rng, dim)


def verify_canext_bal(ctx: CanExtContext, samples: int = 1000,
                      eps_grid: Sequence[Fraction] = DEFAULT_EPS, seed: int = 0,
                      oracle_samples: int = 50) -> Report:
    n = ctx.dim
    rep = Report({"kind": "bal", "dim": n})
    rng = random.Random(f"bal:{n}:{seed}")
    pairs = list(_samples(rng, n, samples))
    scalars = [Fraction(rng.randint(-12, 12), rng.randint(1, 4)) for _ in range(samples)]
    shifts = [Fraction(rng.randint(1, 12), rng.randint(1, 3)) for _ in range(samples)]

    run_check(rep, "alpha_add", "bal.alpha_add", ({"a": a, "b": b} for a, b in pairs))
    run_check(rep, "alpha_mul", "bal.alpha_mul", ({"a": a, "b": b} for a, b in pairs))
    run_check(rep, "alpha_meet", "bal.alpha_meet", ({"a": a, "b": b} for a, b in pairs))
    run_check(rep, "alpha_join", "bal.alpha_join", ({"a": a, "b": b} for a, b in pairs))
    run_check(rep, "alpha_scalar", "bal.alpha_scalar",
              ({"a": a, "r": r} for (a, _), r in zip(pairs, scalars)))
    run_check(rep, "alpha_unital", "bal.alpha_unital", [{}], sampled=False)
    run_check(rep, "alpha_injective", "bal.alpha_injective",
              ({"a": a, "b": b} for a, b in pairs))
    run_check(rep, "s_independent", "bal.s_independent",
              ({"a": a, "t": t} for (a, _), t in zip(pairs, shifts)))
    run_check(rep, "theta_alpha_is_zeta", "bal.theta_alpha_is_zeta",
              ({"a": a} for a, _ in pairs))
    run_check(rep, "s_closed_form_matches_oracle", "bal.s_oracle",
              ({"a": a} for a, _ in pairs[:oracle_samples]))
    run_check(rep, "join_bounded", "bal.join_bounded", ({"a": a} for a, _ in pairs))
    run_check(rep, "nonneg_formula", "bal.nonneg_formula", ({"a": abs(a)} for a, _ in pairs))
    run_check(rep, "monotone", "bal.monotone", ({"a": a, "b": b} for a, b in pairs))
    run_check(rep, "scalar_shift", "bal.scalar_shift",
              ({"a": a, "t": r} for (a, _), r in zip(pairs, scalars)))

    per_ideal = max(1, samples // len(ctx.ideals))
    dense_cases = []
    for I in ctx.ideals:
        extras = [random_nonneg(rng, n) for _ in range(per_ideal)]
        dense_cases.append({"zeroSet": sorted(z + 1 for z in I.zero_set), "extras": extras})
    run_check(rep, "dense_meet", "bal.dense_meet", dense_cases)
    run_check(rep, "dense_join", "bal.dense_join", ({"d": b} for _, b in pairs))

    compact_cases = []
    for k in range(samples):
        size = rng.randint(1, 4)
        T = [random_lvec(rng, n) for _ in range(size)]
        if k % 2 == 0:
            # make the premise hold at some coordinates that would otherwise fail
            T.append(LVec(tuple(Fraction(rng.randint(1, 8), 4) for _ in range(n))))
        compact_cases.append({"T": T, "eps": eps_grid[k % len(eps_grid)]})
    run_check(rep, "compact", "bal.compact", compact_cases)
    return rep


def verify_canext_bal_dim(n: int, **kw) -> Report:
    return verify_canext_bal(context(n), **kw)


# -- supporting lemmas ---------------------------------------------------------

def _ideal(n: int, zero_set) -> LIdeal:
    return LIdeal(n, frozenset(z - 1 for z in zero_set))


def _zs(I: LIdeal) -> list[int]:
    return sorted(z + 1 for z in I.zero_set)


@register("appendix.idempotent_meet")
def _a_idem_meet(inst, e, f, r, s):
    return (r * e) & (s * f) == min(r, s) * (e * f)


@register("appendix.join_with_scalar")
def _a_join_scalar(inst, a, r, s):
    if not (r < s and (a | r) >= s):
        return None
    return a >= s


@register("appendix.sum_to_unit")
def _a_sum_unit(inst, I, J):
    n = int(inst["dim"])
    I, J = _ideal(n, I), _ideal(n, J)
    if not (I + J).is_whole:
        return None
    a, b = lalg.sum_to_unit_witness(I, J)
    return a >= 0 and b >= 0 and I.contains(a) and J.contains(b) and a + b == LVec.const(n, 1)


@register("appendix.hull_whole_only_for_whole")
def _a_hull_whole(inst, I):
    n = int(inst["dim"])
    I = _ideal(n, I)
    if not lalg.hull_member(I, LVec.const(n, 1)):
        return None
    return I.is_whole


@register("appendix.join_is_hull_of_sum")
def _a_join(inst, I, J):
    n = int(inst["dim"])
    c = context(n)
    I, J = _ideal(n, I), _ideal(n, J)
    return c.arch.join(I, J) == lalg.arch_hull(I + J) == I.join(J)


@register("appendix.comaximal_join_is_sum")
def _a_comax(inst, I, J):
    n = int(inst["dim"])
    I, J = _ideal(n, I), _ideal(n, J)
    if not I.join(J).is_whole:
        return None
    return (I + J).is_whole


@register("appendix.x_as_join")
def _a_x_join(inst, I):
    n = int(inst["dim"])
    c = context(n)
    I = _ideal(n, I)
    out = LVec.const(c.RB.dim, 0)
    for J in c.ideals:
        if J.join(I).is_whole:
            out = out | c.x_not(J)
    return out == c.x(I)


def _join_coefficients(c: CanExtContext, f: LVec) -> dict[LIdeal, Fraction]:
    return {I: sup_below(f, c.x_not(I)) for I in c.proper}


@register("appendix.nonneg_as_join")
def _a_nonneg_join(inst, f):
    c = context(int(inst["dim"]))
    if not f >= 0:
        return None
    coeff = _join_coefficients(c, f)
    out = LVec.const(c.RB.dim, 0)
    for I, r in coeff.items():
        if r < 0:
            return False
        out = out | (r * c.x_not(I))
    return out == f


@register("appendix.join_shift")
def _a_join_shift(inst, f, t):
    c = context(int(inst["dim"]))
    if not (f >= 0 and t >= 0):
        return None
    coeff = _join_coefficients(c, f)
    out = LVec.const(c.RB.dim, 0)
    for I, r in coeff.items():
        out = out | ((t + r) * c.x_not(I))
    return out == f + t


@register("appendix.generated_membership")
def _a_generated(inst, S, x):
    n = int(inst["dim"])
    I = lalg.lideal_generated(S, n)
    ok = lalg.generated_member(S, x) == I.contains(x)
    if len(S) == 1:
        # the single-generator textbook form
        ok = ok and lalg.dominated(x, S[0]) == I.contains(x)
    return ok


@register("appendix.positive_negative_hull")
def _a_pos_neg(inst, a, t):
    if not t > 0:
        return None
    b = a + t
    return lalg.arch_hull([b.plus(), a.minus()], len(a.coords)).is_whole


@register("appendix.separating_ideal")
def _a_separate(inst, I, J):
    n = int(inst["dim"])
    I, J = _ideal(n, I), _ideal(n, J)
    if not (I.is_proper and J.is_proper) or I <= J:
        return None
    # constructive route: a in I outside J, then K = J v hull((n|a| - 1)^-)
    a = next(LVec.unit(n, i) * 3 for i in range(n) if i not in I.zero_set and i in J.zero_set)
    m = next(m for m in range(1, 100) if not lalg.hull_clause(J, a, m))
    K = J.join(lalg.arch_hull([(m * abs(a) - 1).minus()]))
    if not (K.is_proper and J <= K and (K + I).is_whole):
        return False
    # brute force agrees that such K exists
    return any(K2.is_proper and J <= K2 and (K2 + I).is_whole for K2 in LAlg(n).ideals())


def _hypothesis_f_below_g(c: CanExtContext, f: LVec, g: LVec) -> bool:
    """For every proper I and t >= 0: ``t x_not(I) <= f`` gives K above I with ``t x_not(K) <= g``.

    It suffices to test the largest such t, since smaller t only weaken both sides.
    """
    for I in c.proper:
        t = sup_below(f, c.x_not(I))
        if t <= 0:
            continue
        if not any(I <= K and t * c.x_not(K) <= g for K in c.proper):
            return False
    return True


@register("appendix.f_below_g")
def _a_f_below_g(inst, f, g):
    c = context(int(inst["dim"]))
    if not (f >= 0 and g >= 0) or not _hypothesis_f_below_g(c, f, g):
        return None
    return f <= g


@register("appendix.sup_attained")
def _a_sup_attained(inst, a, I):
    n = int(inst["dim"])
    I = _ideal(n, I)
    if not (a >= 0 and I.is_proper):
        return None
    s_I = s_oracle(I, a)
    return s_I == s_closed_form(I, a) and I.contains((a - s_I).minus())


@register("appendix.below_alpha_iff")
def _a_below_alpha(inst, a, I, r):
    n = int(inst["dim"])
    c = context(n)
    I = _ideal(n, I)
    if not (a >= 0 and I.is_proper):
        return None
    return (r * c.x_not(I) <= alpha(c, a)) == I.contains((a - r).minus())


@register("appendix.sup_not_whole")
def _a_sup_not_whole(inst, a, I):
    n = int(inst["dim"])
    c = context(n)
    I = _ideal(n, I)
    if not (a >= 0 and I.is_proper):
        return None
    s_I = s_closed_form(I, a)
    return (sup_below(alpha(c, a), c.x_not(I)) == s_I
            and not I.join(lalg.arch_hull([(a - s_I).plus()])).is_whole)


def appendix_suite(ctx: CanExtContext, samples: int = 1000, seed: int = 0) -> Report:
    n = ctx.dim
    rep = Report({"kind": "appendix", "dim": n})
    rng = random.Random(f"appendix:{n}:{seed}")
    ideals = ctx.ideals
    pick = lambda: _zs(rng.choice(ideals))  # noqa: E731
    proper = lambda: _zs(rng.choice(ctx.proper))  # noqa: E731
    rat = lambda lo, hi: Fraction(rng.randint(lo * 4, hi * 4), rng.randint(1, 4))  # noqa: E731
    ids = list(IdempotentAlg(n))

    def disjoint_pair() -> dict:
        Z = rng.choice(ideals).zero_set
        rest = [i for i in range(n) if i not in Z]
        W = frozenset(i for i in rest if rng.random() < 0.5)
        return {"I": sorted(z + 1 for z in Z), "J": sorted(w + 1 for w in W)}

    run_check(rep, "idempotent_meet", "appendix.idempotent_meet",
              ({"e": rng.choice(ids), "f": rng.choice(ids), "r": abs(rat(0, 6)),
                "s": abs(rat(0, 6))} for _ in range(samples)))
    cases = []
    for _ in range(samples):
        r = rat(-4, 4)
        s = r + abs(rat(0, 3)) + Fraction(1, 8)
        a = random_lvec(rng, n)
        if rng.random() < 0.5:
            a = a | s  # force the hypothesis now and then
        cases.append({"a": a, "r": r, "s": s})
    run_check(rep, "join_with_scalar", "appendix.join_with_scalar", cases)
    run_check(rep, "sum_to_unit", "appendix.sum_to_unit",
              (disjoint_pair() if k % 2 else {"I": pick(), "J": pick()} for k in range(samples)))
    run_check(rep, "hull_whole_only_for_whole", "appendix.hull_whole_only_for_whole",
              ({"I": pick()} for _ in range(samples)))
    run_check(rep, "join_is_hull_of_sum", "appendix.join_is_hull_of_sum",
              ({"I": pick(), "J": pick()} for _ in range(samples)))
    run_check(rep, "comaximal_join_is_sum", "appendix.comaximal_join_is_sum",
              (disjoint_pair() if k % 2 else {"I": pick(), "J": pick()} for k in range(samples)))
    run_check(rep, "x_as_join", "appendix.x_as_join", ({"I": pick()} for _ in range(samples)))
    run_check(rep, "nonneg_as_join", "appendix.nonneg_as_join",
              ({"f": random_nonneg(rng, ctx.RB.dim)} for _ in range(samples)))
    run_check(rep, "join_shift", "appendix.join_shift",
              ({"f": random_nonneg(rng, ctx.RB.dim), "t": abs(rat(0, 5))}
               for _ in range(samples)))
    gen_cases = []
    for _ in range(samples):
        S = [random_lvec(rng, n) * LVec.chi(n, [i for i in range(n) if rng.random() < 0.6])
             for _ in range(rng.randint(1, 3))]
        x = random_lvec(rng, n) * LVec.chi(n, [i for i in range(n) if rng.random() < 0.6])
        gen_cases.append({"S": S, "x": x})
    run_check(rep, "generated_membership", "appendix.generated_membership", gen_cases)
    run_check(rep, "positive_negative_hull", "appendix.positive_negative_hull",
              ({"a": random_lvec(rng, n), "t": abs(rat(0, 3)) + Fraction(1, 16)}
               for _ in range(samples)))
    run_check(rep, "separating_ideal", "appendix.separating_ideal",
              ({"I": proper(), "J": proper()} for _ in range(samples)))

    fg = []
    for k in range(samples):
        f = random_nonneg(rng, ctx.RB.dim)
        g = f | random_nonneg(rng, ctx.RB.dim) if k % 2 else random_nonneg(rng, ctx.RB.dim)
        fg.append({"f": f, "g": g})
    run_check(rep, "f_below_g", "appendix.f_below_g", fg)

    run_check(rep, "sup_attained", "appendix.sup_attained",
              ({"a": random_nonneg(rng, n), "I": proper()} for _ in range(samples)))
    below = []
    for _ in range(samples):
        a = random_nonneg(rng, n)
        I = proper()
        s_I = s_closed_form(_ideal(n, I), a)
        r = rng.choice([Fraction(0), s_I, s_I + Fraction(1, 8), s_I - Fraction(1, 8), rat(0, 6)])
        below.append({"a": a, "I": I, "r": r})
    run_check(rep, "below_alpha_iff", "appendix.below_alpha_iff", below)
    run_check(rep, "sup_not_whole", "appendix.sup_not_whole",
              ({"a": random_nonneg(rng, n), "I": proper()} for _ in range(samples)))
    return rep
