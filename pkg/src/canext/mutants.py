"""Deliberately broken variants used to show the suite catches real bugs."""

from __future__ import annotations

import contextlib
from typing import Iterator
from unittest import mock

from . import bal, lalg, normal, order


def _alpha_without_shift(ctx, a, s=None):
    # forgets to subtract the shift again, so the result depends on s
    s = bal.default_shift(a) if s is None else s
    return bal.alpha_join(ctx, a + s)


def _closure_without_down(P, S):
    return P.check(S)


def _hull_skipping_clause(I, x):
    return True


MUTANTS = {
    "alpha-shift": (bal, "alpha", _alpha_without_shift,
                    "alpha drops the final -s, so it depends on the shift"),
    "closure-no-down": (order, "alexandroff_closure", _closure_without_down,
                        "closure returns the set itself instead of its down-set"),
    "hull-no-clause": (lalg, "hull_member", _hull_skipping_clause,
                       "hull membership skips the (n|x|-1)^+ test"),
}


def clear_caches() -> None:
    bal.clear_caches()
    normal.clear_caches()


@contextlib.contextmanager
def active(name: str | None) -> Iterator[None]:
    """Run the body with the named mutant patched in (no-op for ``None``)."""
    if name is None:
        yield
        return
    if name not in MUTANTS:
        raise KeyError(f"unknown mutant {name!r}; choose from {sorted(MUTANTS)}")
    module, attr, repl, _ = MUTANTS[name]
    clear_caches()
    try:
        with mock.patch.object(module, attr, repl):
            yield
    finally:
        clear_caches()
