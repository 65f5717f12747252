from fractions import Fraction

from hypothesis import settings
from hypothesis import strategies as st

from canext.lalg import LVec
from canext.order import FinPoset


settings.register_profile("default", deadline=None, max_examples=50)
settings.load_profile("default")


@st.composite
def posets(draw, max_size: int = 7) -> FinPoset:
    n = draw(st.integers(1, max_size))
    edges = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
                         .filter(lambda e: e[0] < e[1])))
    return FinPoset.from_relation([f"x{k}" for k in range(n)], edges)


rationals = st.fractions(min_value=-8, max_value=8, max_denominator=6)


def lvecs(dim: int):
    return st.lists(rationals, min_size=dim, max_size=dim).map(lambda c: LVec(tuple(c)))


def F(*xs) -> tuple:
    return tuple(Fraction(x) for x in xs)
