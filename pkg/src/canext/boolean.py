"""Filters of finite boolean algebras and their point-free canonical extension.

The extension is the booleanization of the free frame on the filter
semilattice; ``ro_iso`` compares it with the regular opens of the
Alexandroff space of proper filters.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from . import order
from .order import (Booleanization, FinBoolAlg, FinLattice, FinPoset, FreeFrame,
                    RegularOpenAlgebra)
from .checks import counterexample, register
from .report import Report

__all__ = ["FinBoolAlg", "FilterPoset", "filt_poset", "CanonicalExtensionBA",
           "canonical_extension_ba", "verify_canonical_ba", "RoIso", "ro_iso"]


class FilterPoset:
    """All filters of a finite boolean algebra, each stored by its generator.

    Every filter of a finite algebra is principal, so ``b`` stands for ``up(b)``.
    """

    def __init__(self, B: FinBoolAlg):
        self.B = B
        self.generators = tuple(B.elements())
        self._members = {b: frozenset(c for c in self.generators if b <= c)
                         for b in self.generators}

    def members(self, b: frozenset) -> frozenset:
        return self._members[b]

    def label(self, b: frozenset) -> str:
        return "up" + self.B.label(b)

    def generated_filter(self, elements) -> frozenset:
        """Smallest filter containing ``elements``: close under meets, then upwards."""
        B = self.B
        got = {B.top} | set(elements)
        changed = True
        while changed:
            changed = False
            for x, y in combinations(list(got), 2):
                if x & y not in got:
                    got.add(x & y)
                    changed = True
        return frozenset(c for c in self.generators if any(x <= c for x in got))

    def lattice(self) -> FinLattice:
        """Filters ordered by reverse inclusion; bottom is ``B``, top is ``{1}``."""
        return FinLattice(self.generators,
                          lambda b, c: self._members[b] >= self._members[c])

    def proper(self) -> list[frozenset]:
        return [b for b in self.generators if b != self.B.bottom]

    def proper_poset(self) -> FinPoset:
        """Proper filters ordered by inclusion."""
        props = self.proper()
        return FinPoset.from_order([self.label(b) for b in props],
                                   lambda x, y: self._members[self._by_label(x)]
                                   <= self._members[self._by_label(y)])

    def _by_label(self, lab: str) -> frozenset:
        for b in self.generators:
            if self.label(b) == lab:
                return b
        raise KeyError(lab)


def filt_poset(B: FinBoolAlg) -> FilterPoset:
    return FilterPoset(B)


@dataclass
class CanonicalExtensionBA:
    B: FinBoolAlg
    filters: FilterPoset
    frame: FreeFrame
    C: Booleanization

    def e(self, b: frozenset) -> frozenset[int]:
        return self.frame.i(b)

    def i_filter(self, b: frozenset) -> frozenset[int]:
        """``i`` of the filter generated by ``b`` (same as ``e`` on finite ``B``)."""
        return self.frame.i(b)


def canonical_extension_ba(B: FinBoolAlg) -> CanonicalExtensionBA:
    F = FilterPoset(B)
    h = order.free_frame(F.lattice(), label=F.label)
    C = order.booleanize(h)
    return CanonicalExtensionBA(B, F, h, C)


def _subset_label(B: FinBoolAlg, S) -> list[str]:
    return [B.label(b) for b in S]


def verify_canonical_ba(ext: CanonicalExtensionBA, subset_cap: int = 16,
                        samples: int = 1000, seed: int = 0) -> Report:
    B, C, h = ext.B, ext.C, ext.frame
    elems = B.elements()
    rep = Report({"kind": "ba", "atoms": list(map(str, B.atoms))})

    t = time.perf_counter()
    images = [ext.e(b) for b in elems]
    bad = [B.label(b) for b, eb in zip(elems, images) if eb not in C]
    rep.record("e_lands_in_booleanization", not bad, {"outside": bad} if bad else None,
               started=t)

    t = time.perf_counter()
    injective = len(set(images)) == len(images)
    rep.record("e_injective", injective, started=t)

    t = time.perf_counter()
    law = order.boolean_hom_violation(B, ext.e, C)
    rep.record("e_boolean_morphism", law is None, {"law": law} if law else None, started=t)

    t = time.perf_counter()
    rep.record("pseudocomplement_of_generator",
               all(h.pseudocomplement(ext.e(b)) == ext.e(B.complement(b)) for b in elems),
               started=t)

    t = time.perf_counter()
    rep.record("size_matches", len(C) == len(elems),
               {"booleanization": len(C), "B": len(elems)}, started=t)

    t = time.perf_counter()
    rep.record("e_surjective", set(images) == set(C.elements), started=t)

    # density: i(F) is the meet of e over F, and every element of C joins such meets
    t = time.perf_counter()
    dense_bad = []
    for b in elems:
        F = ext.filters.members(b)
        meet = h.top
        for c in F:
            meet = meet & ext.e(c)
        if meet != ext.i_filter(b):
            dense_bad.append({"filter": B.label(b)})
    for c in C:
        below = [ext.i_filter(b) for b in elems if ext.i_filter(b) <= c]
        j = C.bottom
        for x in below:
            j = C.join(j, x)
        if j != c:
            dense_bad.append({"element": sorted(c)})
    rep.record("dense", not dense_bad, {"detail": dense_bad[0]} if dense_bad
               else {"witness": "i(F) = meet of e over F"}, started=t)

    # compactness: meet of e[S] is 0 only if some finite S0 meets to 0 in B
    t = time.perf_counter()
    masks = [_mask(ext.e(b)) for b in elems]
    atom_masks = [_mask_atoms(B, b) for b in elems]
    full = (1 << len(h.base)) - 1
    full_atoms = (1 << len(B.atoms)) - 1
    n = len(elems)
    exhaustive = n <= subset_cap
    if exhaustive:
        subsets = range(1 << n)
    else:
        rng = random.Random(seed)
        subsets = [rng.getrandbits(n) for _ in range(samples)]
    compact_bad = None
    checked = 0
    for S in subsets:
        m, a = full, full_atoms
        for k in range(n):
            if S >> k & 1:
                m &= masks[k]
                a &= atom_masks[k]
        if m == 0:
            checked += 1
            if a != 0:
                compact_bad = _subset_label(B, [elems[k] for k in range(n) if S >> k & 1])
                break
    rep.record("compact", compact_bad is None,
               {"detail": compact_bad} if compact_bad is not None
               else {"subsets_with_zero_meet": checked, "exhaustive": exhaustive},
               sampled=not exhaustive, started=t)
    return _replayable(rep, "ba")


def finite_witness(B: FinBoolAlg, S: list[frozenset]) -> list[frozenset] | None:
    """A smallest ``S0`` inside ``S`` whose meet is 0, if there is one."""
    for k in range(len(S) + 1):
        for S0 in combinations(S, k):
            m = B.top
            for x in S0:
                m = m & x
            if not m:
                return list(S0)
    return None


def _mask(s) -> int:
    out = 0
    for k in s:
        out |= 1 << k
    return out


def _mask_atoms(B: FinBoolAlg, b: frozenset) -> int:
    return _mask(k for k, a in enumerate(B.atoms) if a in b)


class RoIso:
    """The frame map from the free frame onto the upsets of proper filters."""

    def __init__(self, ext: CanonicalExtensionBA):
        self.ext = ext
        F = ext.filters
        self.X = F.proper_poset()
        self._proper = F.proper()
        self.ro: RegularOpenAlgebra = order.regular_opens(self.X)
        up_target = _UpsetFrame(self.X)
        self._phi: Callable = ext.frame.induced(self.f, up_target)

    def f(self, b: frozenset) -> frozenset[int]:
        """Filter ``up(b)`` sent to the proper filters containing it."""
        F = self.ext.filters
        mine = F.members(b)
        return frozenset(k for k, g in enumerate(self._proper) if mine <= F.members(g))

    def phi(self, D: frozenset[int]) -> frozenset[int]:
        return self._phi(D)

    def membership_map(self, b: frozenset) -> frozenset[int]:
        """Proper filters ``G`` with ``b`` in ``G``."""
        F = self.ext.filters
        return frozenset(k for k, g in enumerate(self._proper) if b in F.members(g))

    def check(self) -> Report:
        ext, C = self.ext, self.ext.C
        B = ext.B
        rep = Report({"kind": "ro_iso", "atoms": list(map(str, B.atoms))})
        t = time.perf_counter()
        image = [self.phi(c) for c in C]
        rep.record("phi_into_regular_opens", all(u in self.ro for u in image), started=t)
        t = time.perf_counter()
        rep.record("phi_bijective", len(set(image)) == len(image) == len(self.ro)
                   and set(image) == set(self.ro.elements),
                   {"booleanization": len(C), "regular_opens": len(self.ro)}, started=t)
        t = time.perf_counter()
        law = order.boolean_hom_violation(C, self.phi, self.ro)
        rep.record("phi_boolean_morphism", law is None, {"law": law} if law else None,
                   started=t)
        t = time.perf_counter()
        bad = [B.label(b) for b in B.elements()
               if self.phi(ext.e(b)) != self.membership_map(b)]
        rep.record("phi_e_is_membership", not bad, {"detail": bad} if bad else None,
                   started=t)
        t = time.perf_counter()
        rep.record("regular_open_count", len(self.ro) == len(B),
                   {"regular_opens": len(self.ro), "B": len(B)}, started=t)
        return _replayable(rep, "ro_iso")

    def frame_iso_check(self) -> bool:
        """Downsets of the filter base (reverse inclusion) match upsets of X."""
        base = self.ext.frame.base
        downs = base.downsets(cap=order.MAX_BRUTE_FORCE)
        ups = self.X.upsets(cap=order.MAX_BRUTE_FORCE)
        images = [self.phi(d) for d in downs]
        if sorted(images, key=order._key) != ups:
            return False
        return all((a <= b) == (self.phi(a) <= self.phi(b)) for a in downs for b in downs)


class _UpsetFrame:
    def __init__(self, X: FinPoset):
        self.bottom: frozenset[int] = frozenset()
        self.top = X.everything

    def join(self, a, b):
        return a | b

    def meet(self, a, b):
        return a & b


def ro_iso(ext: CanonicalExtensionBA) -> RoIso:
    return RoIso(ext)


# -- replay ---------------------------------------------------------------------

def _rerun(kind: str, atoms: list[str]) -> Report:
    ext = canonical_extension_ba(FinBoolAlg(atoms))
    return verify_canonical_ba(ext) if kind == "ba" else ro_iso(ext).check()


def _replayable(rep: Report, kind: str) -> Report:
    """Attach a replayable counterexample to every failed check.

    These checks are exhaustive over the instance, so the instance itself is
    the counterexample and replay reruns the named check on it.
    """
    for c in rep.checks:
        name = f"{kind}.{c.name}"
        if not c.passed:
            detail = c.witness
            c.witness = {"counterexample": counterexample(name, rep.instance, {})}
            if detail is not None:
                c.witness["detail"] = detail
    return rep


BA_CHECKS = ("e_lands_in_booleanization", "e_injective", "e_boolean_morphism",
             "pseudocomplement_of_generator", "size_matches", "e_surjective", "dense",
             "compact")
RO_ISO_CHECKS = ("phi_into_regular_opens", "phi_bijective", "phi_boolean_morphism",
                 "phi_e_is_membership", "regular_open_count")


def _register_rerun(kind: str, name: str) -> None:
    @register(f"{kind}.{name}")
    def pred(inst: dict) -> bool:
        return _rerun(kind, inst["atoms"]).get(name).passed


for _n in BA_CHECKS:
    _register_rerun("ba", _n)
for _n in RO_ISO_CHECKS:
    _register_rerun("ro_iso", _n)
