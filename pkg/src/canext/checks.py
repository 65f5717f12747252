"""Registry of replayable check predicates.

A predicate takes an instance descriptor plus keyword inputs and returns
``True`` (holds), ``False`` (counterexample) or ``None`` (hypothesis not met).
A failure is stored as ``{"check", "instance", "inputs"}`` and can be fed back
through :func:`replay`.
"""

from __future__ import annotations

import time
from typing import Callable, Iterable

from .report import Check, Report

Predicate = Callable[..., "bool | None"]
REGISTRY: dict[str, Predicate] = {}


def register(name: str) -> Callable[[Predicate], Predicate]:
    def deco(fn: Predicate) -> Predicate:
        if name in REGISTRY:
            raise ValueError(f"check {name!r} registered twice")
        REGISTRY[name] = fn
        return fn
    return deco


def counterexample(check: str, instance: dict, inputs: dict) -> dict:
    return {"check": check, "instance": instance, "inputs": inputs}


def run_check(rep: Report, label: str, check: str, cases: Iterable[dict],
              sampled: bool = True) -> Check:
    """Evaluate ``REGISTRY[check]`` on each case; stop at the first failure."""
    pred = REGISTRY[check]
    t = time.perf_counter()
    held = vacuous = 0
    for inputs in cases:
        res = pred(rep.instance, **inputs)
        if res is None:
            vacuous += 1
            continue
        if not res:
            return rep.record(label, False,
                              {"counterexample": counterexample(check, rep.instance, inputs)},
                              sampled=sampled, started=t)
        held += 1
    witness: dict = {"instances": held}
    if vacuous:
        witness["vacuous"] = vacuous
    return rep.record(label, True, witness, sampled=sampled, started=t)


def replay(cx: dict) -> bool | None:
    """Re-evaluate a stored counterexample; ``False`` means it still fails."""
    from . import serialize  # noqa: F401  (decoding lives there)
    name = cx["check"]
    if name not in REGISTRY:
        raise KeyError(f"unknown check {name!r}")
    inputs = serialize.decode_inputs(cx.get("inputs", {}))
    return REGISTRY[name](cx["instance"], **inputs)
