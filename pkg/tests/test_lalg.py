from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st
import pytest

from canext import lalg
from canext.lalg import (LAlg, LIdeal, LVec, MorphismError, arch_frame, arch_hull, decompose,
                         dedekind_embed, idempotents, k_iterate, k_operator, lideal_generated,
                         norm_by_inf, ortho_decomp, quotient, recompose, scaled_idempotent_order,
                         specker_morphism, specker_of, sum_to_unit_witness, yosida)
from canext.order import FinBoolAlg, ValidationError

from conftest import lvecs

V = LVec.of


def Z(n: int, *one_based: int) -> LIdeal:
    return LAlg(n).ideal(k - 1 for k in one_based)


# -- vectors -------------------------------------------------------------------------

def test_decompose_mixed_signs():
    d = decompose(V(-1, 3))
    assert (d.pos, d.neg, d.abs, d.norm) == (V(0, 3), V(1, 0), V(1, 3), 3)


def test_decompose_trivial_cases():
    d = decompose(V(0, 0))
    assert d.pos.is_zero() and d.neg.is_zero() and d.abs.is_zero() and d.norm == 0
    d = decompose(V(2, 2))
    assert d.neg.is_zero() and d.norm == 2


def test_dimension_zero_is_rejected():
    with pytest.raises(ValidationError):
        LVec(())
    with pytest.raises(ValidationError):
        LAlg(0)


def test_mismatched_dimensions():
    with pytest.raises(ValidationError):
        V(1, 2) + V(1, 2, 3)


@given(lvecs(3))
def test_decomposition_laws(a):
    d = decompose(a)
    assert a == d.pos - d.neg and d.abs == d.pos + d.neg
    assert (d.pos & d.neg).is_zero() and (d.pos * d.neg).is_zero()
    assert d.norm == norm_by_inf(a)


@given(lvecs(3), lvecs(3))
def test_lattice_ring_laws(a, b):
    assert -(a | b) == (-a) & (-b)
    assert (a + b).plus() <= a.plus() + b.plus()
    assert a + b == (a | b) + (a & b)


# -- ideals --------------------------------------------------------------------------

def test_generated_ideal_examples():
    assert lideal_generated([V(0, 1, 2)]).zero_set == frozenset({0})
    assert lideal_generated([], dim=3) == LAlg(3).zero_ideal()
    assert lideal_generated([V(1, 1, 1)]).is_whole


@given(st.lists(lvecs(3), max_size=3), lvecs(3))
def test_generated_ideal_agrees_with_domination(S, x):
    assert lalg.generated_member(S, x) == lideal_generated(S, dim=3).contains(x)


def test_ideal_order_reverses_zero_sets():
    assert Z(3, 1, 2) <= Z(3, 1) and not Z(3, 1) <= Z(3, 1, 2)
    assert Z(3).is_whole and Z(3, 1, 2, 3) == LAlg(3).zero_ideal()
    assert Z(3, 2).is_maximal and not Z(3, 1, 2).is_maximal


def test_arch_hull_examples():
    assert arch_hull([V(0, 1, 2)]) == Z(3, 1)
    assert arch_hull(LAlg(3).zero_ideal()) == LAlg(3).zero_ideal()
    assert arch_hull(LAlg(3).whole()) == LAlg(3).whole()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_every_ideal_is_its_own_hull_and_k_stabilizes_at_once(n):
    for I in LAlg(n).ideals():
        assert arch_hull(I) == I
        assert k_operator(I) == I == k_operator(k_operator(I))
        assert k_iterate(I)[1] <= 1


def test_hull_clause_on_a_non_member():
    I = Z(2, 1)
    assert not lalg.hull_member(I, V(1, 0))
    assert lalg.hull_member(I, V(0, 7))


def test_comaximal_witnesses():
    a, b = sum_to_unit_witness(Z(3, 1), Z(3, 2, 3))
    assert a >= 0 and b >= 0 and a + b == LVec.const(3, 1)
    assert Z(3, 1).contains(a) and Z(3, 2, 3).contains(b)
    assert sum_to_unit_witness(Z(3, 1), Z(3, 1, 2)) is None


# -- quotients and frames ----------------------------------------------------------

def test_quotient_examples():
    q = quotient(Z(3, 1, 3))
    assert q.project(V(5, 7, 9)) == V(5, 9)
    assert q.project(V(0, 4, 0)).is_zero()
    a = V(-1, 2, 0)
    # the negative part lives in coordinate 1, so only ideals keeping that coordinate see it
    assert not Z(3, 1).contains(a.minus()) and not quotient(Z(3, 1)).nonneg(a)
    assert Z(3, 3).contains(a.minus()) and quotient(Z(3, 3)).nonneg(a)


def test_quotient_by_whole_algebra_is_flagged():
    q = quotient(LAlg(2).whole())
    assert q.degenerate
    with pytest.raises(ValidationError):
        q.project(V(1, 1))


@given(lvecs(3))
def test_quotient_order_matches_negative_part(a):
    I = Z(3, 1, 2)
    assert quotient(I).nonneg(a) == I.contains(a.minus())


def test_arch_frame_examples():
    assert len(arch_frame(1)) == 2
    L = arch_frame(2)
    assert len(L) == 4 and L.is_distributive()
    assert L.join(Z(2, 1), Z(2, 2)) == LAlg(2).whole()
    assert L.meet(Z(2, 1), Z(2, 2)) == LAlg(2).zero_ideal()


def test_yosida_examples():
    Y = yosida(2)
    assert Y.zeta(V(1, 2)) == V(1, 2)
    assert Y.z_ell(LAlg(2).whole()) == frozenset()
    assert Y.z_ell(LAlg(2).zero_ideal()) == frozenset({0, 1})


# -- idempotents and Specker algebras ------------------------------------------------

def test_idempotent_operations():
    Id = idempotents(2)
    assert Id.join(V(1, 0), V(0, 1)) == V(1, 1)
    assert Id.complement(V(1, 0)) == V(0, 1)
    assert len(Id) == 4 and all(e in Id for e in Id)
    assert V(2, 0) not in Id


@pytest.mark.parametrize("n", [1, 2, 3])
def test_idempotent_operations_match_ring_formulas(n):
    Id = idempotents(n)
    for e in Id:
        assert Id.complement(e) == 1 - e
        for f in Id:
            assert Id.meet(e, f) == e * f
            assert Id.join(e, f) == e + f - e * f


def test_scaled_idempotents():
    assert Fraction(2) * V(1, 0, 1) <= Fraction(3) * V(1, 1, 1)
    assert scaled_idempotent_order(Fraction(2), V(1, 0, 1), Fraction(3), V(1, 1, 1))
    Id = idempotents(3)
    for e in Id:
        for f in Id:
            if not e.is_zero() and not f.is_zero():
                for r in (Fraction(1), Fraction(2), Fraction(5, 2)):
                    for s in (Fraction(1), Fraction(3)):
                        assert scaled_idempotent_order(r, e, s, f)


def test_specker_examples():
    B = FinBoolAlg.of_size(2)
    S = specker_of(B)
    p, q = B.element("p"), B.element("q")
    assert S.x(p) == V(1, 0)
    assert S.x(B.complement(p)) == V(0, 1) == 1 - S.x(p)
    assert S.x(B.bottom).is_zero()
    assert S.x(p | q) == V(1, 1) == S.x(p) + S.x(q) - S.x(p) * S.x(q)
    assert S.relation_violations() == []
    assert S.element_of(V(1, 0)) == p


def test_specker_morphism_identity_and_collapse():
    B = FinBoolAlg.of_size(2)
    S = specker_of(B)
    ident = specker_morphism(S, S.x, 2)
    assert ident(V(3, -1)) == V(3, -1)
    p = B.element("p")
    collapse = specker_morphism(S, lambda b: V(1) if p <= b else V(0), 1)
    assert collapse(V(4, 9)) == V(4)
    q = B.element("q")
    assert collapse(2 * S.x(p) + 5 * S.x(q)) == 2 * V(1) + 5 * V(0)


def test_specker_morphism_rejects_non_morphisms():
    B = FinBoolAlg.of_size(2)
    S = specker_of(B)
    with pytest.raises(MorphismError, match="preserve"):
        specker_morphism(S, lambda b: V(1), 1)      # bottom goes to 1
    with pytest.raises(MorphismError):
        specker_morphism(S, lambda b: V(2), 1)      # not an idempotent


@given(lvecs(2), lvecs(2))
def test_specker_morphism_preserves_operations(a, b):
    S = specker_of(FinBoolAlg.of_size(2))
    # swap the two atoms
    sigma = specker_morphism(S, lambda e: S.x(e).__class__(tuple(reversed(S.x(e).coords))), 2)
    assert sigma(a + b) == sigma(a) + sigma(b)
    assert sigma(a * b) == sigma(a) * sigma(b)
    assert sigma(a | b) == sigma(a) | sigma(b)
    assert sigma(abs(a)) == abs(sigma(a))


def test_ortho_decomp_examples():
    B = FinBoolAlg(("1", "2", "3"))
    S = specker_of(B)
    assert ortho_decomp(S, V(2, 2, 5)) == [(2, frozenset({"1", "2"})), (5, frozenset({"3"}))]
    assert ortho_decomp(S, V(0, 0, 0)) == []
    assert ortho_decomp(S, V(1, 1, 1)) == [(1, B.top)]


@given(lvecs(4))
def test_ortho_decomp_reconstructs(a):
    S = specker_of(FinBoolAlg.of_size(4))
    terms = ortho_decomp(S, a)
    assert recompose(S, terms) == a
    rs = [r for r, _ in terms]
    assert len(set(rs)) == len(rs) and 0 not in rs
    for i, (_, b) in enumerate(terms):
        for _, c in terms[i + 1:]:
            assert not b & c


# -- Dedekind completion -------------------------------------------------------------

def test_dedekind_examples():
    D = dedekind_embed(3)
    a = V(1, -2, 3)
    assert D.embed(a) == a
    assert dedekind_embed(2).sup([V(1, 0), V(0, 1)]) == V(1, 1)
    assert D.inf([a, LVec.const(3, 0)]) == -a.minus()
    assert lalg.automorphism_fixing_is_identity(3, lambda v: v)
    assert not lalg.automorphism_fixing_is_identity(2, lambda v: V(v[1], v[0]))
    with pytest.raises(ValidationError):
        D.sup([])


# -- suites --------------------------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_identity_suite(n):
    rep = lalg.identity_suite(n, samples=200, seed=1)
    assert rep.ok, rep.failures()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_hull_suite(n):
    rep = lalg.verify_hulls(n, samples=100, seed=2)
    assert rep.ok, rep.failures()


def test_hull_suite_catches_a_broken_membership_test():
    from canext import mutants
    from canext.checks import replay
    with mutants.active("hull-no-clause"):
        rep = lalg.verify_hulls(2, samples=50, seed=0)
        assert not rep.ok
        cx = rep.failures()[0].witness["counterexample"]
        assert replay(cx) is False
    assert replay(cx) is True
