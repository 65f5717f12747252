from fractions import Fraction
import json

from hypothesis import given
from hypothesis import strategies as st
import pytest

from canext import bal, generate, normal
from canext.lalg import LAlg, LVec
from canext.normal import NormalFn, envelopes, n_ops, scalar
from canext.order import FinPoset, ValidationError, regular_opens

from conftest import lvecs, posets

V = FinPoset.vee()


def fn(*values) -> NormalFn:
    return NormalFn(V, tuple(Fraction(v) for v in values))


# -- envelopes -------------------------------------------------------------------

def test_envelopes_on_vee():
    f = fn(1, 1, 2)
    up, lo, sh = envelopes(f)
    assert up == fn(2, 1, 2)
    assert lo == fn(1, 1, 2)
    assert sh == f and f.is_normal()


def test_constant_is_normal():
    f = NormalFn.const(V, Fraction(7, 3))
    assert f.sharp() == f


def test_bottom_indicator_normalizes_to_zero():
    f = NormalFn.indicator(V, V.subset(["b"]))
    assert f.upper() == fn(1, 0, 0)
    assert f.sharp() == fn(0, 0, 0)
    assert not f.is_normal()


@given(posets(max_size=8), st.data())
def test_envelope_laws(P, data):
    vals = data.draw(st.lists(st.sampled_from([-1, 0, Fraction(1, 2), 2]),
                              min_size=len(P), max_size=len(P)))
    f = NormalFn(P, tuple(vals))
    up, lo, sh = envelopes(f)
    assert lo <= f <= up
    assert up.is_order_reversing() and lo.is_order_preserving()
    assert sh == up.lower() and sh.sharp() == sh and sh.is_normal()


def test_order_characterizations_on_chain():
    C = FinPoset.chain(3)
    inc = NormalFn(C, (0, 1, 2))
    dec = NormalFn(C, (2, 1, 0))
    assert inc.lower() == inc and inc.upper() != inc
    assert dec.upper() == dec and dec.lower() != dec


# -- operations ----------------------------------------------------------------------

def test_sum_of_top_indicators_normalizes_to_one():
    a = NormalFn.indicator(V, V.subset(["t1"]))
    b = NormalFn.indicator(V, V.subset(["t2"]))
    assert n_ops(a, b, "add") == fn(1, 1, 1)
    assert n_ops(a, b, "join") == fn(1, 1, 1)
    assert n_ops(a, b, "meet") == fn(0, 0, 0)


def test_adding_zero_and_positive_scaling():
    f = fn(1, 1, 2)
    assert n_ops(f, NormalFn.const(V, 0), "add") == f
    two = scalar(2, f)
    assert two == fn(2, 2, 4) and two.is_normal()


def test_operations_need_same_poset():
    with pytest.raises(ValidationError):
        n_ops(fn(0, 0, 0), NormalFn.const(FinPoset.chain(3), 0), "add")
    with pytest.raises(ValidationError):
        n_ops(fn(0, 0, 0), fn(0, 0, 0), "pow")


def test_normal_fn_validation():
    with pytest.raises(ValidationError):
        NormalFn(V, (1, 2))
    with pytest.raises(ValidationError):
        NormalFn.from_json({"poset": {"elements": ["b", "t1", "t2"],
                                      "covers": [["b", "t1"], ["b", "t2"]]},
                            "values": {"b": "1"}})


def test_json_roundtrip():
    f = fn(Fraction(1, 3), -2, 5)
    doc = json.loads(json.dumps(f.to_json()))
    assert doc["values"]["b"] == "1/3"
    assert NormalFn.from_json(doc) == f


def test_csv_table():
    rows = normal.to_csv(fn(1, 0, 0)).strip().splitlines()
    assert rows[0] == "element,f,upper,lower,normalized"
    assert rows[1] == "b,1,1,0,0"


# -- idempotents ---------------------------------------------------------------------

def test_idempotent_counts():
    assert len(normal.idempotents_nx(V)) == 4
    assert len(normal.idempotents_nx(FinPoset.antichain(3))) == 8
    assert len(normal.idempotents_nx(FinPoset.chain(4))) == 2


@given(posets(max_size=7))
def test_idempotents_are_regular_open_indicators(P):
    assert normal.idempotents_nx(P) == list(regular_opens(P).elements)


def test_idempotent_enumeration_cap():
    with pytest.raises(ValidationError, match="sample"):
        normal.idempotents_nx(FinPoset.antichain(5), cap=4)


# -- the ideal space of Q^n ----------------------------------------------------------

@pytest.fixture(scope="module")
def S2():
    return normal.ideal_space(2)


def test_ideal_space_shape(S2):
    assert S2.X.elements == ("I{1}", "I{2}", "I{1,2}")
    assert [S2.X.elements[k] for k in S2.maximal] == ["I{1}", "I{2}"]


def test_u_sets(S2):
    A = LAlg(2)
    up, U = normal.u_ideal_set(2, A.ideal([0]))
    assert S2.X.labels(up) == ["I{1}"] and S2.X.labels(U) == ["I{2}"]
    up, U = normal.u_ideal_set(2, A.zero_ideal())
    assert up == S2.X.everything and U == frozenset()
    assert normal.u_ideal_set(2, A.whole())[1] == S2.X.everything


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_u_sets_preserve_meets(n):
    S = normal.ideal_space(n)
    ideals = LAlg(n).ideals()
    for I in ideals:
        for J in ideals:
            assert S.u_set(I.meet(J)) == S.u_set(I) & S.u_set(J)


def test_phi_examples(S2):
    c = bal.context(2)
    I1 = LAlg(2).ideal([0])
    assert normal.phi(S2, c.x(I1)) == NormalFn.indicator(S2.X, S2.X.subset(["I{2}"]))
    one = LVec.const(2, 1)
    assert normal.phi(S2, one) == NormalFn.const(S2.X, 1)
    a = LVec.of(1, 2)
    g = normal.phi(S2, bal.theta_inv(c, a))
    assert g == normal.gamma(S2, a)
    assert g.as_dict() == {"I{1}": 1, "I{2}": 2, "I{1,2}": 1}


def test_phi_preimage_inverts(S2):
    f = NormalFn(S2.X, (Fraction(1, 2), 3, Fraction(1, 2)))
    assert f.is_normal()
    assert normal.phi(S2, normal.phi_preimage(S2, f)) == f


def test_psi_and_lift(S2):
    f = NormalFn(S2.X, (1, 2, 1))
    assert normal.psi(S2, f) == LVec.of(1, 2)
    assert normal.psi(S2, NormalFn.const(S2.X, 4)) == LVec.of(4, 4)
    assert normal.lift(S2, LVec.of(0, 5)).as_dict() == {"I{1}": 0, "I{2}": 5, "I{1,2}": 0}
    with pytest.raises(ValidationError):
        normal.psi(S2, NormalFn(S2.X, (1, 2, 5)))


def test_gamma_examples(S2):
    assert normal.gamma(S2, LVec.of(0, 0)) == NormalFn.const(S2.X, 0)
    assert normal.gamma(S2, LVec.of(3, 3)) == NormalFn.const(S2.X, 3)


@given(lvecs(3))
def test_gamma_laws(a):
    S = normal.ideal_space(3)
    c = bal.context(3)
    g = normal.gamma(S, a)
    assert g.is_normal()
    assert g == normal.gamma_oracle(S, a)
    assert g == normal.phi(S, bal.alpha(c, a))
    assert normal.psi(S, g) == bal.zeta(c, a)


@given(lvecs(3), lvecs(3))
def test_phi_preserves_operations(a, b):
    S = normal.ideal_space(3)
    c = bal.context(3)
    d, e = bal.theta_inv(c, a), bal.theta_inv(c, b)
    for op, fn_ in (("add", lambda x, y: x + y), ("mul", lambda x, y: x * y),
                    ("join", lambda x, y: x | y), ("meet", lambda x, y: x & y)):
        assert normal.phi(S, fn_(d, e)) == n_ops(normal.phi(S, d), normal.phi(S, e), op)


# -- suites --------------------------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3])
def test_dimension_suite(n):
    rep = normal.verify_normal_dim(n, samples=60, seed=0)
    assert rep.ok, rep.failures()
    assert "note" in rep.instance


def test_poset_suite_on_generated_posets():
    for P in generate.test_posets(max_size=6, per_size=1, seed=5):
        rep = normal.verify_normal_poset(P, samples=30, seed=0)
        assert rep.ok, (P, rep.failures())
