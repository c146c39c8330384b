"""Verification sweeps over levels and shifts.

Each check is split into tasks ``(check, m, shift)`` that can run in any
order, in any process; results are collected back in plan order so that the
printed summary does not depend on the worker count.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Optional

import numpy as np

from . import l2, oracles
from .localdisc import (
    local_discrepancy,
    local_discrepancy_extended,
    local_discrepancy_formula,
    local_discrepancy_sym,
)
from .pointset import Shift, all_shifts, hammersley, sample_shifts, symmetrized

__all__ = [
    "CHECKS",
    "Task",
    "TaskResult",
    "CheckSummary",
    "plan",
    "run_task",
    "run",
    "random_corner",
]


@dataclass(frozen=True)
class Task:
    check: str
    m: int
    shift: str = ""


@dataclass(frozen=True)
class TaskResult:
    task: Task
    passed: int
    total: int
    failure: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.passed == self.total


@dataclass
class CheckSummary:
    check: str
    passed: int = 0
    total: int = 0
    first_failure: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.passed == self.total and self.first_failure is None


def _tally(items) -> tuple[int, int, Optional[str]]:
    """Fold ``(ok, description)`` pairs into ``(passed, total, first failure)``."""
    passed = total = 0
    failure = None
    for ok, desc in items:
        total += 1
        if ok:
            passed += 1
        elif failure is None:
            failure = desc
    return passed, total, failure


def random_corner(rng: random.Random, m: int) -> Fraction:
    """A rational in (0, 1], mixing on-grid, near-grid and generic values."""
    kind = rng.randrange(4)
    if kind == 0:
        d = 1 << m
    elif kind == 1:
        d = 1 << (m + rng.randint(1, 4))
    elif kind == 2:
        d = rng.randint(1, 50)
    else:
        d = rng.randint(1, 10**6)
    return Fraction(rng.randint(1, d), d)


def _rng(*key) -> random.Random:
    return random.Random(":".join(map(str, key)))


# -- individual checks; each returns (passed, total, failure) -------------


def _check_theorem1(m: int, sigma: Shift):
    got = l2.l2sq_exact(symmetrized(m, sigma))
    want = l2.theorem1_value(m)
    return _tally([(got == want, f"theorem1 m={m} sigma={sigma}: {got} != {want}")])


def _check_lemma5(m: int, sigma: Shift):
    got = l2.l2sq_exact(hammersley(m, sigma))
    want = l2.kp_value(m, sigma.zero_count())
    return _tally([(got == want, f"lemma5 m={m} sigma={sigma}: {got} != {want}")])


def _check_decomposition_identity(m: int, sigma: Shift):
    h1, h2 = hammersley(m, sigma), hammersley(m, sigma.complement())
    lhs = l2.l2sq_exact(symmetrized(m, sigma))
    rhs = l2.l2sq_exact(h1) + l2.l2sq_exact(h2) + 2 * l2.cross_integral_exact(h1, h2)
    pair = l2.kp_pair_value(m, sigma.zero_count())
    return _tally([
        (lhs == rhs, f"sym split m={m} sigma={sigma}: {lhs} != {rhs}"),
        (l2.l2sq_exact(h1) + l2.l2sq_exact(h2) == pair, f"kp pair m={m} sigma={sigma}"),
    ])


def _check_lemma1(m: int, sigma: Shift):
    P = hammersley(m, sigma)
    d = 1 << m

    def items():
        for a in range(1, d):
            for b in range(1, d):
                al, be = Fraction(a, d), Fraction(b, d)
                ok = local_discrepancy_formula(m, sigma, al, be) == local_discrepancy(P, al, be)
                yield ok, f"lemma1 m={m} sigma={sigma} alpha={al} beta={be}"

    return _tally(items())


def _check_lemma1_ext(m: int, sigma: Shift, samples: int = 1000):
    P = hammersley(m, sigma)
    rng = _rng("lemma1_ext", m, sigma)

    def items():
        for _ in range(samples):
            al, be = random_corner(rng, m), random_corner(rng, m)
            ok = local_discrepancy_extended(m, sigma, al, be) == local_discrepancy(P, al, be)
            yield ok, f"lemma1 extension m={m} sigma={sigma} alpha={al} beta={be}"
        for al in (Fraction(a, 1 << m) for a in range(1, (1 << m) + 1)):
            yield local_discrepancy_extended(m, sigma, al, 1) == 0, f"edge beta=1 alpha={al}"

    return _tally(items())


def _check_lemma2(m: int, sigma: Shift, samples: int = 200):
    P = symmetrized(m, sigma)
    rng = _rng("lemma2", m, sigma)

    def items():
        for _ in range(samples):
            al, be = random_corner(rng, m), random_corner(rng, m)
            ok = local_discrepancy_sym(m, sigma, al, be) == local_discrepancy(P, al, be)
            yield ok, f"lemma2 m={m} sigma={sigma} alpha={al} beta={be}"

    return _tally(items())


def _check_lemma3(m: int, sigma: Shift):
    d = 1 << m
    distinct = oracles.lemma3_distinct_value(m)

    def items():
        for b in range(1, d):
            beta = Fraction(b, d)
            first, second = oracles.alpha_factor_table(m, sigma, beta)
            sums = np.asarray(first, dtype=np.int64).T @ np.asarray(second, dtype=np.int64)
            for u1 in range(m):
                for u2 in range(m):
                    got = int(sums[u1, u2])
                    if u1 == u2:
                        want = oracles.lemma3_equal_value(m, sigma, beta, u1)
                    else:
                        want = distinct
                    yield got == want, (
                        f"lemma3 m={m} sigma={sigma} beta={beta} u1={u1} u2={u2}: {got} != {want}"
                    )

    return _tally(items())


def _check_pill(m: int, sigma: Shift, kmax: int = 3):
    d = 1 << m

    def items():
        for b in range(1, d):
            beta = Fraction(b, d)
            first, second = oracles.alpha_factor_table(m, sigma, beta)
            tables = (np.asarray(first, dtype=bool), np.asarray(second, dtype=bool))
            for k in range(1, min(kmax, m - 1) + 1):
                for us in combinations(range(m), k):
                    for assign in product((0, 1), repeat=k):
                        cols = np.column_stack([tables[w][:, u] for u, w in zip(us, assign)])
                        got = int(np.count_nonzero(cols.all(axis=1)))
                        yield got == 1 << (m - k), (
                            f"product sum m={m} sigma={sigma} beta={beta} u={us} "
                            f"shifts={[w + 1 for w in assign]}: {got} != {1 << (m - k)}"
                        )

    return _tally(items())


def _check_lemma4(m: int, _sigma=None):
    def items():
        for u1 in range(m):
            got, want = oracles.lemma4_square(m, u1), oracles.lemma4_square_value(m, u1)
            yield got == want, f"lemma4 square m={m} u={u1}: {got} != {want}"
            for u2 in range(m):
                if u1 != u2:
                    got, want = oracles.lemma4_cross(m, u1, u2), oracles.lemma4_cross_value(m)
                    yield got == want, f"lemma4 cross m={m} u1={u1} u2={u2}: {got} != {want}"

    return _tally(items())


def _check_lemma6(m: int, sigma: Shift):
    got = oracles.mixed_grid_sum(m, sigma)
    want = l2.mixed_sum_value(m, sigma.zero_count())
    return _tally([(got == want, f"lemma6 m={m} sigma={sigma}: {got} != {want}")])


def _check_decomposition(m: int, sigma: Shift):
    rep = oracles.proof_decomposition(m, sigma)
    cross = l2.cross_integral_exact(hammersley(m, sigma), hammersley(m, sigma.complement()))
    items = [(ok, f"decomposition m={m} sigma={sigma} term {k}") for k, ok in rep.matches.items()]
    items.append((rep.S2 + rep.S3 == 0, f"decomposition m={m} sigma={sigma} S2+S3 != 0"))
    items.append((rep.I2 == rep.I3, f"decomposition m={m} sigma={sigma} I2 != I3"))
    items.append((rep.total == cross, f"decomposition m={m} sigma={sigma} total != cross integral"))
    return _tally(items)


def _check_corollary(m: int, sigma: Shift):
    res = l2.corollary_gap(m, sigma)
    return _tally([(res.holds, f"corollary m={m} sigma={sigma}: gap {res.gap} > {res.bound}")])


def _check_remark3(m: int, _sigma=None):
    best = l2.optimal_l(m)
    v = l2.kp_value(m, best)
    return _tally(
        (v <= l2.kp_value(m, l), f"remark3 m={m}: l={l} beats optimal_l={best}") for l in range(m + 1)
    )


@dataclass(frozen=True)
class CheckSpec:
    fn: Callable
    max_level: int
    exhaustive_level: int  # shifts enumerated exhaustively up to this level
    min_level: int = 1
    uses_shift: bool = True


CHECKS: dict[str, CheckSpec] = {
    "lemma1": CheckSpec(_check_lemma1, 6, 4),
    "lemma1_ext": CheckSpec(_check_lemma1_ext, 6, 3),
    "lemma2": CheckSpec(_check_lemma2, 6, 3),
    "lemma3": CheckSpec(_check_lemma3, 6, 6),
    "pill": CheckSpec(_check_pill, 6, 5, min_level=2),
    "lemma4": CheckSpec(_check_lemma4, 10, 0, uses_shift=False),
    "lemma5": CheckSpec(_check_lemma5, 12, 6),
    "lemma6": CheckSpec(_check_lemma6, 8, 5),
    "remark3": CheckSpec(_check_remark3, 12, 0, min_level=6, uses_shift=False),
    "theorem1": CheckSpec(_check_theorem1, 10, 6),
    "split": CheckSpec(_check_decomposition_identity, 10, 6),
    "decomposition": CheckSpec(_check_decomposition, 8, 4),
    "corollary": CheckSpec(_check_corollary, 10, 6),
}


def shifts_for(m: int, exhaustive: bool, samples: int, seed: int, exhaustive_level: int) -> list[Shift]:
    if exhaustive and m <= exhaustive_level:
        return all_shifts(m)
    return sample_shifts(m, samples, seed)


def plan(
    max_m: int,
    only: Optional[list[str]] = None,
    exhaustive: bool = False,
    samples: int = 8,
    seed: int = 0,
) -> list[Task]:
    names = list(CHECKS) if not only else only
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    tasks = []
    for name in names:
        spec = CHECKS[name]
        for m in range(spec.min_level, min(max_m, spec.max_level) + 1):
            if not spec.uses_shift:
                tasks.append(Task(name, m))
                continue
            for sigma in shifts_for(m, exhaustive, samples, seed, spec.exhaustive_level):
                tasks.append(Task(name, m, str(sigma)))
    return tasks


def run_task(task: Task) -> TaskResult:
    spec = CHECKS[task.check]
    sigma = Shift.parse(task.shift) if task.shift else None
    passed, total, failure = spec.fn(task.m, sigma)
    return TaskResult(task, passed, total, failure)


def run(tasks: list[Task], workers: int = 1) -> list[CheckSummary]:
    """Execute ``tasks`` and fold the results per check, in plan order."""
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_task, tasks, chunksize=1))
    else:
        results = [run_task(t) for t in tasks]
    summaries: dict[str, CheckSummary] = {}
    for res in results:
        s = summaries.setdefault(res.task.check, CheckSummary(res.task.check))
        s.passed += res.passed
        s.total += res.total
        if res.failure and s.first_failure is None:
            s.first_failure = res.failure
    return list(summaries.values())
