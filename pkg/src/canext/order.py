"""Finite posets, Alexandroff topology, finite lattices and frames.

Subsets of a poset are plain ``frozenset``s of element indices.  Elements of
a free frame are downsets of its base poset, held one at a time; the frame
itself is never enumerated.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Hashable, Iterable, Sequence

MAX_BRUTE_FORCE = 16


class ValidationError(ValueError):
    """Raised when an input violates a structural invariant."""


def _key(s: frozenset) -> tuple:
    return (len(s), tuple(sorted(s)))


class FinPoset:
    """A finite partial order on pairwise distinct labels.

    ``leq`` is the full reflexive-transitive relation given as index pairs;
    all three order axioms are checked.
    """

    def __init__(self, elements: Sequence[Hashable], leq: Iterable[tuple[int, int]]):
        elements = tuple(elements)
        if not elements:
            raise ValidationError("empty poset")
        if len(set(elements)) != len(elements):
            raise ValidationError("element labels must be pairwise distinct")
        n = len(elements)
        rel = [[False] * n for _ in range(n)]
        for i, j in leq:
            if not (0 <= i < n and 0 <= j < n):
                raise ValidationError(f"index pair {(i, j)} out of range")
            rel[i][j] = True
        for i in range(n):
            if not rel[i][i]:
                raise ValidationError(f"not reflexive at {elements[i]!r}")
        for i in range(n):
            for j in range(i + 1, n):
                if rel[i][j] and rel[j][i]:
                    raise ValidationError(
                        f"not antisymmetric: {elements[i]!r}, {elements[j]!r}")
        for i in range(n):
            for j in range(n):
                if rel[i][j]:
                    for k in range(n):
                        if rel[j][k] and not rel[i][k]:
                            raise ValidationError(
                                f"not transitive: {elements[i]!r} <= {elements[j]!r}"
                                f" <= {elements[k]!r}")
        self.elements = elements
        self._rel = tuple(tuple(r) for r in rel)
        self._index = {e: k for k, e in enumerate(elements)}
        self.up = tuple(frozenset(j for j in range(n) if rel[i][j]) for i in range(n))
        self.down = tuple(frozenset(j for j in range(n) if rel[j][i]) for i in range(n))
        self._pairs: list[tuple[int, int]] | None = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_order(cls, elements: Sequence[Hashable],
                   leq: Callable[[Hashable, Hashable], bool]) -> "FinPoset":
        elements = tuple(elements)
        pairs = [(i, j) for i, a in enumerate(elements) for j, b in enumerate(elements)
                 if leq(a, b)]
        return cls(elements, pairs)

    @classmethod
    def from_labels(cls, elements: Sequence[Hashable],
                    pairs: Iterable[tuple[Hashable, Hashable]]) -> "FinPoset":
        index = {e: k for k, e in enumerate(elements)}
        try:
            idx = [(index[a], index[b]) for a, b in pairs]
        except KeyError as exc:
            raise ValidationError(f"unknown label {exc.args[0]!r}") from None
        return cls(elements, idx)

    @classmethod
    def from_relation(cls, elements: Sequence[Hashable],
                      pairs: Iterable[tuple[int, int]]) -> "FinPoset":
        """Reflexive-transitive closure of an acyclic relation."""
        n = len(elements)
        rel = [[i == j for j in range(n)] for i in range(n)]
        for i, j in pairs:
            rel[i][j] = True
        for k in range(n):
            for i in range(n):
                if rel[i][k]:
                    row_k = rel[k]
                    row_i = rel[i]
                    for j in range(n):
                        if row_k[j]:
                            row_i[j] = True
        return cls(elements, [(i, j) for i in range(n) for j in range(n) if rel[i][j]])

    @classmethod
    def chain(cls, n: int) -> "FinPoset":
        return cls([f"c{k}" for k in range(n)],
                   [(i, j) for i in range(n) for j in range(i, n)])

    @classmethod
    def antichain(cls, n: int) -> "FinPoset":
        return cls([f"a{k}" for k in range(n)], [(i, i) for i in range(n)])

    @classmethod
    def vee(cls) -> "FinPoset":
        """Bottom ``b`` below two incomparable tops ``t1``, ``t2``."""
        return cls(["b", "t1", "t2"], [(0, 0), (1, 1), (2, 2), (0, 1), (0, 2)])

    # -- basic queries ----------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinPoset):
            return NotImplemented
        return self.elements == other.elements and self._rel == other._rel

    def __hash__(self) -> int:
        return hash((self.elements, self._rel))

    def __repr__(self) -> str:
        return f"FinPoset({list(self.elements)!r}, covers={self.covers()!r})"

    def index(self, label: Hashable) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValidationError(f"unknown label {label!r}") from None

    def leq(self, i: int, j: int) -> bool:
        return self._rel[i][j]

    def pairs(self) -> list[tuple[int, int]]:
        if self._pairs is None:
            n = len(self)
            self._pairs = [(i, j) for i in range(n) for j in range(n) if self._rel[i][j]]
        return list(self._pairs)

    def check(self, s: Iterable[int]) -> frozenset[int]:
        s = frozenset(s)
        n = len(self)
        for k in s:
            if not (isinstance(k, int) and 0 <= k < n):
                raise ValidationError(f"index {k!r} out of range for poset of size {n}")
        return s

    def labels(self, s: Iterable[int]) -> list:
        return [self.elements[k] for k in sorted(s)]

    def subset(self, labels: Iterable[Hashable]) -> frozenset[int]:
        return frozenset(self.index(x) for x in labels)

    @property
    def everything(self) -> frozenset[int]:
        return frozenset(range(len(self)))

    def up_set(self, s: Iterable[int]) -> frozenset[int]:
        out: set[int] = set()
        for k in s:
            out |= self.up[k]
        return frozenset(out)

    def down_set(self, s: Iterable[int]) -> frozenset[int]:
        out: set[int] = set()
        for k in s:
            out |= self.down[k]
        return frozenset(out)

    def is_upset(self, s: frozenset[int]) -> bool:
        return all(self.up[k] <= s for k in s)

    def is_downset(self, s: frozenset[int]) -> bool:
        return all(self.down[k] <= s for k in s)

    def maximal(self) -> frozenset[int]:
        return frozenset(k for k in range(len(self)) if len(self.up[k]) == 1)

    def minimal(self) -> frozenset[int]:
        return frozenset(k for k in range(len(self)) if len(self.down[k]) == 1)

    def linear_extension(self) -> list[int]:
        # x < y forces |down x| < |down y|
        return sorted(range(len(self)), key=lambda k: (len(self.down[k]), k))

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges ``(i, j)`` with ``i`` covered by ``j``."""
        out = []
        for i in range(len(self)):
            for j in self.up[i]:
                if j == i:
                    continue
                between = (self.up[i] & self.down[j]) - {i, j}
                if not between:
                    out.append((i, j))
        return sorted(out)

    def dual(self) -> "FinPoset":
        return FinPoset(self.elements, [(j, i) for i, j in self.pairs()])

    def upsets(self, cap: int = MAX_BRUTE_FORCE) -> list[frozenset[int]]:
        """All upsets, by recursion from the top of a linear extension."""
        if len(self) > cap:
            raise ValidationError(f"poset has {len(self)} elements, enumeration cap is {cap}")
        order = self.linear_extension()[::-1]
        out: list[frozenset[int]] = []
        cur: set[int] = set()

        def rec(k: int) -> None:
            if k == len(order):
                out.append(frozenset(cur))
                return
            x = order[k]
            rec(k + 1)
            if self.up[x] - {x} <= cur:
                cur.add(x)
                rec(k + 1)
                cur.discard(x)

        rec(0)
        return sorted(out, key=_key)

    def downsets(self, cap: int = MAX_BRUTE_FORCE) -> list[frozenset[int]]:
        every = self.everything
        return sorted((every - u for u in self.upsets(cap)), key=_key)


# -- Alexandroff topology -------------------------------------------------

def alexandroff_interior(P: FinPoset, S: Iterable[int]) -> frozenset[int]:
    """Largest upset inside ``S``: the points whose principal upset fits in ``S``."""
    S = P.check(S)
    return frozenset(x for x in range(len(P)) if P.up[x] <= S)


def alexandroff_closure(P: FinPoset, S: Iterable[int]) -> frozenset[int]:
    """Smallest closed set containing ``S``, i.e. its downward closure."""
    S = P.check(S)
    return P.down_set(S)


def is_regular_open(P: FinPoset, U: Iterable[int]) -> bool:
    U = P.check(U)
    return alexandroff_interior(P, alexandroff_closure(P, U)) == U


class RegularOpenAlgebra:
    """Boolean algebra of regular open upsets of a finite poset."""

    def __init__(self, P: FinPoset, elements: Sequence[frozenset[int]]):
        self.poset = P
        self.elements = tuple(sorted(elements, key=_key))
        self._members = frozenset(self.elements)
        self.bottom: frozenset[int] = frozenset()
        self.top = P.everything

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, u: object) -> bool:
        return u in self._members

    def meet(self, u: frozenset[int], v: frozenset[int]) -> frozenset[int]:
        return u & v

    def join(self, u: frozenset[int], v: frozenset[int]) -> frozenset[int]:
        return alexandroff_interior(self.poset, alexandroff_closure(self.poset, u | v))

    def complement(self, u: frozenset[int]) -> frozenset[int]:
        return alexandroff_interior(self.poset, self.top - u)

    def leq(self, u: frozenset[int], v: frozenset[int]) -> bool:
        return u <= v


def regular_opens(P: FinPoset, cap: int = MAX_BRUTE_FORCE) -> RegularOpenAlgebra:
    return RegularOpenAlgebra(P, [u for u in P.upsets(cap) if is_regular_open(P, u)])


def boolean_axiom_violations(ba, elements: Sequence | None = None) -> list[str]:
    """Brute-force check of the boolean algebra laws on ``ba``.

    ``ba`` is anything with ``meet``, ``join``, ``complement``, ``bottom``,
    ``top`` and iteration over its elements.
    """
    els = list(ba if elements is None else elements)
    members = set(els)
    bad = []
    for x in els:
        nx = ba.complement(x)
        if nx not in members:
            bad.append(f"complement not closed at {x!r}")
        if ba.meet(x, nx) != ba.bottom:
            bad.append(f"x and not-x overlap at {x!r}")
        if ba.join(x, nx) != ba.top:
            bad.append(f"x or not-x is not top at {x!r}")
        if ba.meet(x, ba.top) != x or ba.join(x, ba.bottom) != x:
            bad.append(f"bounds fail at {x!r}")
    for x, y in combinations(els, 2):
        m, j = ba.meet(x, y), ba.join(x, y)
        if m not in members or j not in members:
            bad.append(f"meet/join not closed at {x!r}, {y!r}")
        if ba.meet(x, j) != x or ba.join(x, m) != x:
            bad.append(f"absorption fails at {x!r}, {y!r}")
    for x in els:
        for y in els:
            for z in els:
                if ba.meet(x, ba.join(y, z)) != ba.join(ba.meet(x, y), ba.meet(x, z)):
                    bad.append(f"distributivity fails at {x!r}, {y!r}, {z!r}")
                    return bad
    return bad


# -- finite boolean algebras -----------------------------------------------

class FinBoolAlg:
    """The powerset boolean algebra on a finite set of atoms."""

    def __init__(self, atoms: Sequence[Hashable]):
        atoms = tuple(atoms)
        if not atoms:
            raise ValidationError("a boolean algebra needs at least one atom")
        if len(set(atoms)) != len(atoms):
            raise ValidationError("atom labels must be pairwise distinct")
        self.atoms = atoms
        self.bottom: frozenset = frozenset()
        self.top = frozenset(atoms)

    @classmethod
    def of_size(cls, n: int) -> "FinBoolAlg":
        names = "pqrstuvw"
        return cls(list(names[:n]) if n <= len(names) else [f"p{k}" for k in range(n)])

    def __len__(self) -> int:
        return 2 ** len(self.atoms)

    def __iter__(self):
        return iter(self.elements())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FinBoolAlg) and self.atoms == other.atoms

    def __hash__(self) -> int:
        return hash(self.atoms)

    def __repr__(self) -> str:
        return f"FinBoolAlg({list(self.atoms)!r})"

    def elements(self) -> list[frozenset]:
        k = len(self.atoms)
        return [frozenset(a for bit, a in enumerate(self.atoms) if mask >> bit & 1)
                for mask in range(2 ** k)]

    def element(self, atoms: Iterable[Hashable]) -> frozenset:
        e = frozenset(atoms)
        if not e <= self.top:
            raise ValidationError(f"unknown atoms {sorted(map(str, e - self.top))}")
        return e

    def meet(self, x: frozenset, y: frozenset) -> frozenset:
        return x & y

    def join(self, x: frozenset, y: frozenset) -> frozenset:
        return x | y

    def complement(self, x: frozenset) -> frozenset:
        return self.top - x

    def leq(self, x: frozenset, y: frozenset) -> bool:
        return x <= y

    def is_atom(self, x: frozenset) -> bool:
        return len(x) == 1

    def label(self, x: frozenset) -> str:
        if not x:
            return "0"
        if x == self.top:
            return "1"
        return "{" + ",".join(str(a) for a in self.atoms if a in x) + "}"


# -- finite lattices ------------------------------------------------------

class FinLattice:
    """A finite lattice given by its carrier and order predicate."""

    def __init__(self, elements: Sequence[Hashable],
                 leq: Callable[[Hashable, Hashable], bool]):
        els = tuple(elements)
        if not els:
            raise ValidationError("empty lattice")
        if len(set(els)) != len(els):
            raise ValidationError("lattice elements must be distinct")
        n = len(els)
        le = [[bool(leq(a, b)) for b in els] for a in els]
        for i in range(n):
            if not le[i][i]:
                raise ValidationError("order is not reflexive")
            for j in range(i + 1, n):
                if le[i][j] and le[j][i]:
                    raise ValidationError("order is not antisymmetric")
        for i in range(n):
            for j in range(n):
                if le[i][j]:
                    for k in range(n):
                        if le[j][k] and not le[i][k]:
                            raise ValidationError("order is not transitive")
        self.elements = els
        self._index = {e: k for k, e in enumerate(els)}
        self._le = le
        below = [sum(le[k][i] for k in range(n)) for i in range(n)]
        above = [sum(le[i][k] for k in range(n)) for i in range(n)]
        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                lower = [k for k in range(n) if le[k][i] and le[k][j]]
                upper = [k for k in range(n) if le[i][k] and le[j][k]]
                if not lower or not upper:
                    raise ValidationError(f"{els[i]!r} and {els[j]!r} lack a bound")
                g = max(lower, key=lambda k: below[k])
                h = max(upper, key=lambda k: above[k])
                if not all(le[k][g] for k in lower) or not all(le[h][k] for k in upper):
                    raise ValidationError(f"{els[i]!r} and {els[j]!r} lack a meet or join")
                meet[i][j] = meet[j][i] = g
                join[i][j] = join[j][i] = h
        self._meet = meet
        self._join = join
        self.bottom = els[min(range(n), key=lambda k: below[k])]
        self.top = els[max(range(n), key=lambda k: below[k])]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self._index

    def index(self, x: Hashable) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise ValidationError(f"{x!r} is not a lattice element") from None

    def leq(self, a: Hashable, b: Hashable) -> bool:
        return self._le[self.index(a)][self.index(b)]

    def meet(self, a: Hashable, b: Hashable) -> Hashable:
        return self.elements[self._meet[self.index(a)][self.index(b)]]

    def join(self, a: Hashable, b: Hashable) -> Hashable:
        return self.elements[self._join[self.index(a)][self.index(b)]]

    def meets(self, xs: Iterable[Hashable]) -> Hashable:
        out = self.top
        for x in xs:
            out = self.meet(out, x)
        return out

    def joins(self, xs: Iterable[Hashable]) -> Hashable:
        out = self.bottom
        for x in xs:
            out = self.join(out, x)
        return out

    def is_distributive(self) -> bool:
        n = len(self.elements)
        M, J = self._meet, self._join
        return all(M[a][J[b][c]] == J[M[a][b]][M[a][c]]
                   for a in range(n) for b in range(n) for c in range(n))

    def as_poset(self, label: Callable[[Hashable], Hashable] = str) -> FinPoset:
        return FinPoset([label(e) for e in self.elements],
                        [(i, j) for i in range(len(self)) for j in range(len(self))
                         if self._le[i][j]])

    # frame-theoretic structure; a finite distributive lattice is a frame

    def pseudocomplement(self, a: Hashable) -> Hashable:
        return self.joins(s for s in self.elements if self.meet(a, s) == self.bottom)

    def well_inside(self, a: Hashable, b: Hashable) -> bool:
        return self.join(self.pseudocomplement(a), b) == self.top

    def is_regular(self) -> bool:
        return all(a == self.joins(s for s in self.elements if self.well_inside(s, a))
                   for a in self.elements)

    def is_compact(self) -> bool:
        # every cover of top has a finite subcover: the cover itself
        return True

    def strictly_below_join(self, p: Hashable) -> Hashable:
        return self.joins(q for q in self.elements if q != p and self.leq(q, p))

    def join_irreducibles(self) -> list[Hashable]:
        return [p for p in self.elements
                if p != self.bottom and self.strictly_below_join(p) != p]


class FinDistLattice(FinLattice):
    """A finite lattice that is checked to be distributive."""

    def __init__(self, elements: Sequence[Hashable],
                 leq: Callable[[Hashable, Hashable], bool]):
        super().__init__(elements, leq)
        if not self.is_distributive():
            raise ValidationError("lattice is not distributive")


# -- free frames on bounded meet-semilattices ---------------------------------

class FreeFrame:
    """Free frame on a bounded meet-semilattice ``M``, as downsets of ``M`` minus 0.

    Elements are frozensets of base indices, created on demand.
    """

    def __init__(self, M: FinLattice, label: Callable[[Hashable], Hashable] = str):
        self.M = M
        self.generators = tuple(m for m in M.elements if m != M.bottom)
        if not self.generators:
            raise ValidationError("semilattice has no nonzero element")
        n = len(self.generators)
        self.base = FinPoset([label(m) for m in self.generators],
                             [(i, j) for i in range(n) for j in range(n)
                              if M.leq(self.generators[i], self.generators[j])])
        self.bottom: frozenset[int] = frozenset()
        self.top = self.base.everything

    def i(self, m: Hashable) -> frozenset[int]:
        """Generator map: the nonzero part of the principal downset of ``m``."""
        return frozenset(k for k, q in enumerate(self.generators) if self.M.leq(q, m))

    def check(self, a: Iterable[int]) -> frozenset[int]:
        a = self.base.check(a)
        if not self.base.is_downset(a):
            raise ValidationError("frame elements must be downsets of the base")
        return a

    def meet(self, a: frozenset[int], b: frozenset[int]) -> frozenset[int]:
        return a & b

    def join(self, a: frozenset[int], b: frozenset[int]) -> frozenset[int]:
        return a | b

    def leq(self, a: frozenset[int], b: frozenset[int]) -> bool:
        return a <= b

    def pseudocomplement(self, a: frozenset[int]) -> frozenset[int]:
        return frozenset(q for q in range(len(self.base)) if not (self.base.down[q] & a))

    def regularize(self, a: frozenset[int]) -> frozenset[int]:
        return self.pseudocomplement(self.pseudocomplement(a))

    def induced(self, f: Callable[[Hashable], object], target) -> Callable:
        """Frame map out of the free frame extending ``f`` along ``i``.

        ``target`` supplies ``join`` and ``bottom``.
        """
        def phi(D: frozenset[int]):
            out = target.bottom
            for k in sorted(D):
                out = target.join(out, f(self.generators[k]))
            return out
        return phi


def free_frame(M: FinLattice, label: Callable[[Hashable], Hashable] = str) -> FreeFrame:
    return FreeFrame(M, label)


def pseudocomplement(h: FreeFrame, a: Iterable[int]) -> frozenset[int]:
    return h.pseudocomplement(h.check(a))


class Booleanization:
    """The regular elements ``a**`` of a free frame, closed under their operations."""

    def __init__(self, frame: FreeFrame, elements: Iterable[frozenset[int]]):
        self.frame = frame
        self.elements = tuple(sorted(set(elements), key=_key))
        self._members = frozenset(self.elements)
        self.bottom = frame.regularize(frame.bottom)
        self.top = frame.top

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, a: object) -> bool:
        return a in self._members

    def meet(self, a: frozenset[int], b: frozenset[int]) -> frozenset[int]:
        return a & b

    def join(self, a: frozenset[int], b: frozenset[int]) -> frozenset[int]:
        return self.frame.regularize(a | b)

    def complement(self, a: frozenset[int]) -> frozenset[int]:
        return self.frame.pseudocomplement(a)

    def leq(self, a: frozenset[int], b: frozenset[int]) -> bool:
        return a <= b


def booleanize(h: FreeFrame) -> Booleanization:
    seen = {h.regularize(h.i(m)) for m in h.M.elements}
    frontier = list(seen)
    while frontier:
        new = []
        current = list(seen)
        for a in frontier:
            cands = [h.pseudocomplement(a)]
            for b in current:
                cands.append(a & b)
                cands.append(h.regularize(a | b))
            for c in cands:
                if c not in seen:
                    seen.add(c)
                    new.append(c)
                    current.append(c)
        frontier = new
    return Booleanization(h, seen)


# -- free boolean extensions --------------------------------------------------

class FreeBoolExt:
    """Free boolean extension of a finite distributive lattice.

    Realised as the powerset of the join-irreducibles, with ``a`` sent to the
    join-irreducibles below it.
    """

    def __init__(self, L: FinLattice):
        if not L.is_distributive():
            raise ValidationError("free boolean extension needs a distributive lattice")
        self.source = L
        self.join_irreducibles = tuple(L.join_irreducibles())
        self.ba = FinBoolAlg(self.join_irreducibles) if self.join_irreducibles else None
        if self.ba is None:
            raise ValidationError("the one-element lattice has no boolean extension here")
        self._below = {p: L.strictly_below_join(p) for p in self.join_irreducibles}

    def i(self, a: Hashable) -> frozenset:
        L = self.source
        return frozenset(p for p in self.join_irreducibles if L.leq(p, a))

    def not_i(self, a: Hashable) -> frozenset:
        return self.ba.complement(self.i(a))

    def extend(self, lam: Callable[[Hashable], object], target) -> Callable[[frozenset], object]:
        """The boolean map ``tau`` with ``tau(i(a)) = lam(a)``.

        An atom ``{p}`` is ``i(p)`` minus ``i(p_)`` where ``p_`` joins everything
        strictly below ``p``, so ``tau`` is forced on atoms.
        """
        on_atoms = {p: target.meet(lam(p), target.complement(lam(self._below[p])))
                    for p in self.join_irreducibles}

        def tau(b: frozenset):
            out = target.bottom
            for p in self.join_irreducibles:
                if p in b:
                    out = target.join(out, on_atoms[p])
            return out
        return tau

    def generated_subalgebra(self) -> set[frozenset]:
        ba = self.ba
        seen = {self.i(a) for a in self.source.elements}
        changed = True
        while changed:
            changed = False
            for x in list(seen):
                for y in [ba.complement(x)] + [x & z for z in seen] + [x | z for z in seen]:
                    if y not in seen:
                        seen.add(y)
                        changed = True
        return seen


def free_boolean_extension(L: FinLattice) -> FreeBoolExt:
    return FreeBoolExt(L)


def is_lattice_hom(L: FinLattice, lam: Callable, target) -> bool:
    """Whether ``lam`` preserves bounds, binary meets and binary joins."""
    if lam(L.bottom) != target.bottom or lam(L.top) != target.top:
        return False
    for a in L.elements:
        for b in L.elements:
            if lam(L.meet(a, b)) != target.meet(lam(a), lam(b)):
                return False
            if lam(L.join(a, b)) != target.join(lam(a), lam(b)):
                return False
    return True


def boolean_hom_violation(src, f: Callable, target) -> str | None:
    """Name of the first boolean law ``f`` breaks, or ``None``."""
    if f(src.bottom) != target.bottom:
        return "bottom"
    if f(src.top) != target.top:
        return "top"
    els = list(src)
    for x in els:
        if f(src.complement(x)) != target.complement(f(x)):
            return "complement"
        for y in els:
            if f(src.meet(x, y)) != target.meet(f(x), f(y)):
                return "meet"
            if f(src.join(x, y)) != target.join(f(x), f(y)):
                return "join"
    return None
