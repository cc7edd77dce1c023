"""Grid sweeps over the identity verifiers."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import identities as ident
from .errors import InvalidParamsError
from .families import MixedFamilyKey

SUITES = ("t1", "t2", "t3", "t4", "t5", "t6", "t7", "t8", "t9")

DEFAULT_A_SETS = (
    (Fraction(1),),
    (Fraction(1), Fraction(2)),
    (Fraction(1, 2), Fraction(3)),
    (Fraction(2), Fraction(2), Fraction(1)),
)


@dataclass(frozen=True)
class Grid:
    """Parameter grid. ``a_sets`` are cut down to each ``r`` in ``r_list``."""

    max_n: int = 10
    max_n_basis: int = 8
    r_list: tuple = (1, 2, 3)
    k_list: tuple = (-2, -1, 0, 1, 2, 3)
    a_sets: tuple = DEFAULT_A_SETS
    s_list: tuple = (0, 1, 2, 3)
    lambda_list: tuple = (Fraction(2), Fraction(-1), Fraction(1, 3))
    y_list: tuple = (Fraction(1), Fraction(-1), Fraction(1, 2))
    x0: Fraction = Fraction(3, 2)

    def __post_init__(self):
        if self.max_n < 0 or self.max_n_basis < 0:
            raise InvalidParamsError("max-n must be non-negative")
        if any(r < 1 for r in self.r_list):
            raise InvalidParamsError("r must be at least 1")
        if any(s < 0 for s in self.s_list):
            raise InvalidParamsError("s must be non-negative")
        if any(Fraction(lam) == 1 for lam in self.lambda_list):
            raise InvalidParamsError("lambda must differ from 1")
        for a in self.a_sets:
            if not a or any(Fraction(v) == 0 for v in a):
                raise InvalidParamsError("Barnes parameters must be nonzero")

    def param_sets(self) -> list:
        """Distinct ``a`` vectors: every a-set truncated to every ``r`` it can supply."""
        seen = []
        for r in self.r_list:
            for a in self.a_sets:
                if len(a) >= r:
                    cut = tuple(Fraction(v) for v in a[:r])
                    if cut not in seen:
                        seen.append(cut)
        if not seen:
            raise InvalidParamsError("no a-set is long enough for the requested r values")
        return seen

    def keys(self) -> list:
        return [MixedFamilyKey.of(a, k) for a in self.param_sets() for k in self.k_list]


def _run_task(suite: str, key: MixedFamilyKey, grid: Grid) -> list:
    out = []
    if suite in ("t8", "t9"):
        ns = range(min(grid.max_n, grid.max_n_basis) + 1)
    else:
        ns = range(grid.max_n + 1)
    for n in ns:
        if suite == "t1":
            out.extend(ident.verify_explicit(n, key))
        elif suite == "t2":
            out.extend(ident.verify_sheffer(n, key, grid.x0, y) for y in grid.y_list)
        elif suite == "t3":
            out.append(ident.verify_recurrence(n, key))
        elif suite == "t4":
            if n >= 1:
                out.extend(ident.verify_more_relation(n, key))
        elif suite == "t5":
            out.append(ident.verify_number_relation(n, key))
        elif suite == "t6":
            out.append(ident.verify_falling(n, key))
        elif suite == "t7":
            out.append(ident.verify_rising(n, key))
        elif suite == "t8":
            for s in grid.s_list:
                out.extend(ident.verify_frobenius(n, key, s, lam) for lam in grid.lambda_list)
        elif suite == "t9":
            out.extend(ident.verify_higher_bernoulli(n, key, s) for s in grid.s_list)
        else:
            raise InvalidParamsError(f"unknown suite {suite!r}")
    return out


def _run_chunk(args) -> list:
    return _run_task(*args)


def resolve_jobs(jobs: int | None) -> int:
    env = os.environ.get("UMBRAL_MIX_JOBS")
    if env:
        try:
            jobs = int(env)
        except ValueError:
            raise InvalidParamsError(f"UMBRAL_MIX_JOBS must be an integer, got {env!r}") from None
    jobs = 1 if jobs is None else jobs
    if jobs < 1:
        raise InvalidParamsError("jobs must be at least 1")
    return jobs


def run_suite(suite: str = "all", grid: Grid | None = None, jobs: int = 1) -> list:
    """Run one suite (``"t1"`` .. ``"t9"``) or ``"all"``; reports come back sorted."""
    grid = grid or Grid()
    suites = SUITES if suite == "all" else (suite,)
    for s in suites:
        if s not in SUITES:
            raise InvalidParamsError(f"unknown suite {s!r}")
    tasks = [(s, key, grid) for s in suites for key in grid.keys()]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_chunk, tasks))
    else:
        chunks = [_run_chunk(t) for t in tasks]
    reports = [r for chunk in chunks for r in chunk]
    reports.sort(key=ident.IdentityReport.sort_key)
    return reports
