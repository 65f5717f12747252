"""Run every verification suite from one config and write the results to disk."""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable

from . import bal, boolean, generate, lalg, mutants, normal
from .checks import replay
from .order import FinBoolAlg, ValidationError
from .report import Report, merge
from .serialize import csv_table, frac_str, parse_frac, poset_to_json

SEED_ENV = "CANEXT_SEED"


@dataclass
class SuiteConfig:
    maxAtoms: int = 4
    maxDim: int = 5
    samples: int = 1000
    seed: int = 0
    epsGrid: list[Fraction] = field(default_factory=lambda: list(bal.DEFAULT_EPS))
    outputPath: str = "canext-report"
    normalSamples: int = 200
    posetMaxSize: int = 8
    timings: bool = False

    def __post_init__(self) -> None:
        for name in ("maxAtoms", "maxDim", "samples", "normalSamples", "posetMaxSize"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 1:
                raise ValidationError(f"{name} must be a positive integer, got {v!r}")
        if isinstance(self.seed, bool) or not isinstance(self.seed, int) \
                or not 0 <= self.seed < 2 ** 64:
            raise ValidationError("seed must be an unsigned 64-bit integer")
        self.epsGrid = [parse_frac(e) if isinstance(e, str) else Fraction(e)
                        for e in self.epsGrid]
        if not self.epsGrid or any(e <= 0 for e in self.epsGrid):
            raise ValidationError("epsGrid needs positive rationals")

    @classmethod
    def from_dict(cls, d: dict) -> "SuiteConfig":
        known = set(cls.__dataclass_fields__)
        unknown = set(d) - known
        if unknown:
            raise ValidationError(f"unknown config keys {sorted(unknown)}")
        cfg = cls(**d)
        env = os.environ.get(SEED_ENV)
        if env is not None:
            try:
                cfg.seed = int(env)
            except ValueError as exc:
                raise ValidationError(f"{SEED_ENV} must be an integer") from exc
            cfg.__post_init__()
        return cfg

    @classmethod
    def load(cls, path: str | Path) -> "SuiteConfig":
        try:
            d = json.loads(Path(path).read_text())
        except json.JSONDecodeError as exc:
            raise ValidationError(f"config is not valid JSON: {exc}") from exc
        if not isinstance(d, dict):
            raise ValidationError("config must be a JSON object")
        return cls.from_dict(d)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["epsGrid"] = [frac_str(e) for e in self.epsGrid]
        return d


@dataclass
class SuiteResult:
    reports: list[Report]
    files: list[Path]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def counterexamples(self) -> list[dict]:
        return [c.witness["counterexample"] for r in self.reports for c in r.failures()
                if isinstance(c.witness, dict) and "counterexample" in c.witness]


Job = tuple[dict, Callable[[], Report]]


def suite_jobs(cfg: SuiteConfig) -> list[Job]:
    """Independent report producers, each tagged with its instance descriptor.

    The order of the jobs does not matter: reports are merged by descriptor.
    """
    s = cfg.seed
    jobs: list[Job] = []
    for k in range(1, cfg.maxAtoms + 1):
        atoms = list(FinBoolAlg.of_size(k).atoms)

        def ba(atoms=atoms):
            return boolean.verify_canonical_ba(
                boolean.canonical_extension_ba(FinBoolAlg(atoms)), seed=s)

        def ro(atoms=atoms):
            return boolean.ro_iso(boolean.canonical_extension_ba(FinBoolAlg(atoms))).check()
        jobs += [({"kind": "ba", "atoms": atoms}, ba), ({"kind": "ro_iso", "atoms": atoms}, ro)]
    for n in range(1, cfg.maxDim + 1):
        jobs += [
            ({"kind": "hulls", "dim": n},
             lambda n=n: lalg.verify_hulls(n, min(cfg.samples, 200), s)),
            ({"kind": "identities", "dim": n},
             lambda n=n: lalg.identity_suite(n, cfg.samples, s)),
            ({"kind": "bal", "dim": n},
             lambda n=n: bal.verify_canext_bal(bal.context(n), cfg.samples, cfg.epsGrid, s)),
            ({"kind": "appendix", "dim": n},
             lambda n=n: bal.appendix_suite(bal.context(n), cfg.samples, s)),
            ({"kind": "normal", "dim": n},
             lambda n=n: normal.verify_normal_dim(n, cfg.normalSamples, s)),
        ]
    for P in generate.test_posets(cfg.posetMaxSize, per_size=1, seed=s):
        jobs.append(({"kind": "normal_poset", "poset": poset_to_json(P)},
                     lambda P=P: normal.verify_normal_poset(P, min(cfg.samples, 100), s)))
    return jobs


def _run_job(job: Job) -> Report:
    descriptor, fn = job
    try:
        return fn()
    except Exception as exc:  # a crash is a failed check, not a crashed suite
        rep = Report(descriptor)
        rep.record("runs_to_completion", False, {"error": f"{type(exc).__name__}: {exc}"})
        return rep


def run_suite(cfg: SuiteConfig, mutant: str | None = None, figures: bool = True,
              write: bool = True) -> SuiteResult:
    with mutants.active(mutant):
        reports = merge([_run_job(job) for job in suite_jobs(cfg)])
    files: list[Path] = []
    if write:
        files = write_outputs(cfg, reports, figures)
    return SuiteResult(reports, files)


def report_document(cfg: SuiteConfig, reports: list[Report]) -> dict:
    return {"config": cfg.to_dict(),
            "ok": all(r.ok for r in reports),
            "reports": [r.to_dict(cfg.timings) for r in reports]}


def checks_csv(reports: list[Report]) -> str:
    rows = []
    for r in reports:
        inst = json.dumps(r.instance, sort_keys=True)
        for c in r.checks:
            rows.append([inst, c.name, "pass" if c.passed else "fail", int(c.sampled)])
    return csv_table(["instance", "check", "result", "sampled"], rows)


def write_outputs(cfg: SuiteConfig, reports: list[Report], figures: bool) -> list[Path]:
    out = Path(cfg.outputPath)
    out.mkdir(parents=True, exist_ok=True)
    doc = out / "report.json"
    doc.write_text(json.dumps(report_document(cfg, reports), sort_keys=True, indent=2) + "\n")
    table = out / "checks.csv"
    table.write_text(checks_csv(reports))
    files = [doc, table]
    if figures:
        files += render_figures(out / "figures", reports, cfg.maxDim)
    return files


def render_figures(folder: Path, reports: list[Report], max_dim: int) -> list[Path]:
    from . import plotting
    from .lalg import LVec
    from .order import FinPoset
    folder.mkdir(parents=True, exist_ok=True)
    files = [plotting.suite_summary(reports, folder / "summary.png")]
    for n in range(2, min(max_dim, 3) + 1):
        S = normal.ideal_space(n)
        files.append(plotting.hasse(S.X, folder / f"ideals_dim{n}.png",
                                    f"proper ideals of Q^{n}", S.maximal))
        a = LVec(tuple(Fraction(k + 1) for k in range(n)))
        g = normal.gamma(S, a)
        files.append(plotting.function_table(S.X.elements, {"gamma(a)": g.values},
                                             folder / f"gamma_dim{n}.png",
                                             f"a = {tuple(map(int, a.coords))}"))
    V = FinPoset.vee()
    f = normal.NormalFn(V, (0, 1, 2))
    up, lo, sh = normal.envelopes(f)
    files.append(plotting.function_table(
        V.elements, {"f": f.values, "upper": up.values, "lower": lo.values,
                     "normalized": sh.values}, folder / "envelopes_vee.png"))
    return files


def replay_document(doc: Any, mutant: str | None = None) -> list[tuple[dict, Any]]:
    """Replay every counterexample in a report document, a report, or a bare payload."""
    payloads = list(_find_counterexamples(doc))
    if not payloads:
        raise ValidationError("no counterexample payloads found")
    with mutants.active(mutant):
        return [(cx, replay(cx)) for cx in payloads]


def _find_counterexamples(doc: Any):
    if isinstance(doc, dict):
        if {"check", "instance", "inputs"} <= set(doc):
            yield doc
            return
        for v in doc.values():
            yield from _find_counterexamples(v)
    elif isinstance(doc, list):
        for v in doc:
            yield from _find_counterexamples(v)
