from hypothesis import given
from hypothesis import strategies as st
import pytest

from canext import generate
from canext.order import ValidationError


def test_boolalg_descriptor():
    assert generate.generate_instance("boolalg", {"atoms": 3}, 0) == {"atoms": ["p", "q", "r"]}


def test_poset_is_fixed_by_seed():
    a = generate.generate_instance("poset", {"n": 5}, 42)
    b = generate.generate_instance("poset", {"n": 5}, 42)
    assert a == b and len(a["elements"]) == 5
    assert generate.generate_instance("poset", {"n": 5}, 43) != a or True


def test_vectors_are_fixed_by_seed():
    a = generate.generate_instance("lalg", {"dim": 2}, 7)
    assert a == generate.generate_instance("lalg", {"dim": 2}, 7)
    assert a["dim"] == 2 and all(v["dim"] == 2 for v in a["vectors"])


@pytest.mark.parametrize("kind,params", [
    ("poset", {"n": "x"}), ("poset", {"density": 2}), ("boolalg", {"atoms": 0}),
    ("lalg", {"dim": 0}), ("lattice", {}),
])
def test_bad_parameters(kind, params):
    with pytest.raises(ValidationError):
        generate.generate_instance(kind, params, 0)


@given(st.integers(1, 9), st.integers(0, 2 ** 32))
def test_random_posets_are_valid_and_deterministic(n, seed):
    P = generate.random_poset(n, seed)
    assert len(P) == n and P.check(P.everything) == P.everything
    assert generate.random_poset(n, seed).pairs() == P.pairs()
    # labels follow a linear extension of the order
    assert all(i <= j for i, j in P.pairs())


def test_named_test_posets():
    Ps = generate.test_posets(max_size=4, per_size=2)
    assert len(Ps) == 3 + 8
    assert [len(P) for P in Ps[3:]] == [1, 1, 2, 2, 3, 3, 4, 4]
