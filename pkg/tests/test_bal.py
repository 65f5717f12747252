from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st
import pytest

from canext import bal
from canext.bal import alpha, context, theta, theta_inv
from canext.checks import replay
from canext.lalg import LAlg, LVec

from conftest import lvecs, rationals

V = LVec.of


@pytest.fixture(scope="module")
def c2():
    return context(2)


def test_context_shape(c2):
    assert len(c2.ideals) == 4
    assert c2.RB.dim == len(c2.B.join_irreducibles) == 2
    assert c2.summary() == {"dim": 2, "arch": 4, "boolean": 4}
    for I in c2.ideals:
        assert c2.x(I) + c2.x_not(I) == LVec.const(2, 1)


def test_alpha_of_zero(c2):
    assert alpha(c2, V(0, 0)).is_zero()


def test_alpha_matches_coordinate_evaluation(c2):
    assert theta(c2, alpha(c2, V(1, 2))) == V(1, 2)
    assert theta(c2, alpha(c2, V(-1, 3), s=1)) == V(-1, 3)


def test_alpha_shift_must_make_element_nonnegative(c2):
    from canext.order import ValidationError
    with pytest.raises(ValidationError):
        alpha(c2, V(-1, 3), s=0)


def test_alpha_is_unital(c2):
    one = LVec.const(2, 1)
    assert alpha(c2, one) == one
    a = V(Fraction(3, 2), -4)
    assert alpha(c2, a * one) == alpha(c2, a) * alpha(c2, one)


def test_theta_roundtrip(c2):
    v = V(5, -2)
    assert theta(c2, theta_inv(c2, v)) == v


@given(lvecs(3), rationals.filter(lambda t: t >= 0))
def test_alpha_independent_of_shift(a, extra):
    c = context(3)
    s = bal.default_shift(a)
    assert alpha(c, a, s) == alpha(c, a, s + extra)


@given(lvecs(3), lvecs(3), rationals)
def test_alpha_is_a_morphism(a, b, r):
    c = context(3)
    assert alpha(c, a + b) == alpha(c, a) + alpha(c, b)
    assert alpha(c, a * b) == alpha(c, a) * alpha(c, b)
    assert alpha(c, a | b) == alpha(c, a) | alpha(c, b)
    assert alpha(c, a & b) == alpha(c, a) & alpha(c, b)
    assert alpha(c, r * a) == r * alpha(c, a)
    assert theta(c, alpha(c, a)) == bal.zeta(c, a)


@given(lvecs(3))
def test_join_coefficients_match_bisection(a):
    c = context(3)
    v = a + bal.default_shift(a)
    for I in c.proper:
        assert bal.s_closed_form(I, v) == bal.s_oracle(I, v)


def test_density_witness(c2):
    I = LAlg(2).ideal([0])
    a = V(1, 0)
    assert I.contains((a - 1).minus())
    fam = bal.density_family(c2, I, [])
    assert fam == [a]
    assert c2.D.inf(alpha(c2, x) for x in fam) == c2.x_not(I)


def test_compactness_example(c2):
    T = [V(1, 0), V(0, 1)]
    top = c2.D.sup(alpha(c2, a) for a in T)
    assert top == theta_inv(c2, V(1, 1)) and top >= Fraction(1, 2)
    assert (T[0] | T[1]) >= 0
    # (1, 0) is already nonnegative, so a single element suffices
    assert bal.compact_subfamily(T) == [0]
    assert bal.compact_subfamily([V(1, -1), V(-1, 1)]) == [0, 1]


def test_sampled_clauses_are_labelled_sampled():
    rep = bal.verify_canext_bal(context(2), samples=30, seed=3)
    assert rep.ok, rep.failures()
    assert rep.get("dense_meet").sampled and rep.get("compact").sampled
    assert not rep.get("alpha_unital").sampled


@pytest.mark.parametrize("n", [1, 2, 3])
def test_verifier_passes(n):
    rep = bal.verify_canext_bal(context(n), samples=100, seed=0)
    assert rep.ok, rep.failures()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_supporting_lemmas_pass(n):
    rep = bal.appendix_suite(context(n), samples=100, seed=0)
    assert rep.ok, rep.failures()


def test_scaled_idempotent_meet_example():
    e, f = V(1, 0, 1), V(0, 1, 1)
    assert (2 * e) & (3 * f) == V(0, 0, 2) == 2 * (e * f)


def test_unit_among_generators_gives_whole_hull():
    from canext.lalg import arch_hull
    a = V(0, 0)
    b = a + 1
    assert arch_hull([b.plus(), a.minus()]).is_whole


def test_zero_multiple_below_alpha(c2):
    a = V(2, 3)
    for I in c2.ideals:
        assert 0 * c2.x_not(I) <= alpha(c2, a)
        assert I.contains(a.minus())


def test_shift_bug_is_caught_and_replays():
    from canext import mutants
    with mutants.active("alpha-shift"):
        rep = bal.verify_canext_bal(context(2), samples=30, seed=0)
        assert not rep.get("s_independent").passed
        cx = rep.get("s_independent").witness["counterexample"]
        assert replay(cx) is False
    assert replay(cx) is True


@given(st.integers(1, 3))
def test_context_is_cached(n):
    assert context(n) is context(n)
