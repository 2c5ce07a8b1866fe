"""Instance enumeration and parallel execution of identity sweeps.

Reports always come back in enumeration order, so the output of a sweep does
not depend on the worker count.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Iterator, Sequence

from . import dyson_core as core
from . import oracle
from .oracle import VerificationReport


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("QDYSON_THREADS", "1")))
    except ValueError:
        return 1


def run_instances(
    check: Callable[..., VerificationReport],
    instances: Iterable[tuple],
    threads: int = 1,
) -> list[VerificationReport]:
    instances = list(instances)
    if threads <= 1 or len(instances) < 2:
        return [check(*inst) for inst in instances]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        # map() yields in submission order regardless of completion order
        return list(pool.map(lambda inst: check(*inst), instances))


def compositions(n: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    return itertools.product(range(lo, hi + 1), repeat=n)


def compositions_of(total: int, n: int, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``n`` parts, each at most ``cap``."""
    cap = total if cap is None else cap
    for v in itertools.product(range(0, min(total, cap) + 1), repeat=n):
        if sum(v) == total:
            yield v


def subsets(n: int, min_size: int = 1) -> Iterator[frozenset[int]]:
    for k in range(min_size, n + 1):
        for c in itertools.combinations(range(1, n + 1), k):
            yield frozenset(c)


# ---------------------------------------------------------------------------
# instance families; each yields argument tuples for the matching checker


def qdyson_instances(n: int, amax: int, amin: int = 1):
    for a in compositions(n, amin, amax):
        yield (a,)


def kadell_instances(n: int, amax: int, rmax: int):
    for a in compositions(n, 1, amax):
        for r in range(1, rmax + 1):
            for v in compositions_of(r, n, r):
                yield (v, a)


def theorem_instances(n: int, amax: int, vmax: int):
    for a in compositions(n, 1, amax):
        for v in compositions(n, 0, vmax):
            yield (v, a)


def corollary_instances(n: int, amax: int, vmax: int):
    for v, a in theorem_instances(n, amax, vmax):
        if any(v) and v.count(max(v)) == 1:
            yield (v, a)


def splitting_instances(n: int, amax: int):
    for a in compositions(n, 1, amax):
        yield (a,)


def power_series_instances(a: Sequence[int]):
    for i in range(1, len(a) + 1):
        for j in range(a[i - 1]):
            yield (tuple(a), i, j)


def lemma31_instances(imax: int, jmax: int):
    for i in range(1, imax + 1):
        for j in range(1, jmax + 1):
            for k in range(j):
                yield (i, j, k)


def prop41_instances(nmax: int):
    for n in range(nmax + 1):
        for t in range(n + 1):
            yield (n, t)


def prop51_instances(n: int, amax: int):
    for a in compositions(n, 1, amax):
        for I in subsets(n):
            for J in subsets_of(I):
                for i in sorted(J):
                    yield (I, J, i, a)


def lemma52_instances(n: int, amax: int):
    for a in compositions(n, 1, amax):
        for I in subsets(n, 2):
            for i in sorted(I):
                yield (I, i, a)


def lemma53_instances(n: int, amax: int):
    for a in compositions(n, 1, amax):
        for I in subsets(n):
            for J in subsets_of(I):
                yield (I, J, a)


def prop54_instances(n: int, amax: int, rmax: int, rmin: int = 1):
    for a in compositions(n, 1, amax):
        for I in subsets(n, 2):
            for r in range(rmin, rmax + 1):
                yield (I, a, r)


def section6_instances(nmax: int, amax: int, rmax: int, summax: int):
    for n in range(1, nmax + 1):
        for a in compositions(n, 1, amax):
            if sum(a) > summax:
                continue
            for k in range(1, n + 1):
                for r in range(1, rmax + 1):
                    yield (a, k, r)


def subsets_of(S: Iterable[int]) -> Iterator[frozenset[int]]:
    return core.nonempty_subsets(S)


def up_to(family: Callable[..., Iterable[tuple]], nmax: int, *args, nmin: int = 1) -> Iterator[tuple]:
    """Chain ``family(n, *args)`` for ``n = nmin..nmax``."""
    for n in range(nmin, nmax + 1):
        yield from family(n, *args)


CHECKERS: dict[str, Callable[..., VerificationReport]] = {
    "qdyson": oracle.check_qdyson,
    "kadell": oracle.check_kadell,
    "theorem": oracle.check_theorem,
    "corollary": oracle.check_corollary,
    "splitting": oracle.verify_splitting,
    "power_series": oracle.check_power_series,
    "lemma31": oracle.check_lemma31,
    "prop41": oracle.check_prop41,
    "prop51": oracle.check_prop51,
    "lemma52": oracle.check_lemma52,
    "lemma53": oracle.check_lemma53,
    "prop54": oracle.check_prop54,
    "section6": oracle.check_section6,
}


def eval_vs_oracle(v: Sequence[int], a: Sequence[int]) -> dict:
    """One sweep row: the recursion and the brute-force value side by side."""
    lam = tuple(sorted(v, reverse=True))
    fast = core.eval_D_recursive(v, a)
    slow = oracle.brute_D(v, lam, a)
    return {
        "v": list(v),
        "a": list(a),
        "value": fast.to_json(),
        "match": fast == slow,
    }


def sweep(nmax: int, vmax: int, amax: int, threads: int = 1, nmin: int = 1) -> list[dict]:
    instances = list(up_to(theorem_instances, nmax, amax, vmax, nmin=nmin))
    return run_instances(eval_vs_oracle, instances, threads)
