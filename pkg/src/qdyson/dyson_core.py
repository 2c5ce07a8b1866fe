"""Compositions, the exponent statistic L_{I,J}, closed forms, and the two
fast evaluators of the generalized q-Dyson constant term D_{v,v+}(a).

Index sets are 1-based throughout, matching the usual combinatorial
notation; deleting position ``i`` renumbers every later position down by one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .qring import (
    ZERO,
    QLaurentPoly,
    QRat,
    one_minus_q_pow,
    q_binomial,
    q_multinomial,
    to_polynomial,
)

IndexSet = frozenset


@dataclass(frozen=True)
class Composition:
    """A finite sequence of non-negative integers."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"composition parts must be non-negative: {parts}")
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def size(self) -> int:
        return sum(self.parts)

    def plus(self) -> tuple[int, ...]:
        """Weakly decreasing rearrangement ``v+``."""
        return tuple(sorted(self.parts, reverse=True))

    def delete(self, indices: Iterable[int]) -> "Composition":
        """Remove the 1-based positions in ``indices`` (``v^(I)``)."""
        return Composition(delete_positions(self.parts, indices))

    def is_zero(self) -> bool:
        return not any(self.parts)


def delete_positions(seq: Sequence[int], indices: Iterable[int]) -> tuple[int, ...]:
    drop = set(indices)
    return tuple(x for k, x in enumerate(seq, start=1) if k not in drop)


def reindex_after_delete(S: Iterable[int], i: int) -> frozenset[int]:
    """Labels of ``S \\ {i}`` in the coordinates of a sequence with position ``i`` removed."""
    return frozenset(k if k < i else k - 1 for k in S if k != i)


def max_part_set(v: Sequence[int]) -> tuple[int, frozenset[int]]:
    """``(r, I)`` with ``r = max(v)`` and ``I`` the 1-based positions attaining it."""
    if not any(v):
        raise ValueError("max_part_set needs a non-zero composition")
    r = max(v)
    return r, frozenset(k for k, x in enumerate(v, start=1) if x == r)


def L_IJ(I: Iterable[int], J: Iterable[int], a: Sequence[int]) -> int:
    """Sum of ``a_j`` over pairs ``i <= j`` with ``i in I`` and ``j not in J``."""
    I, J = frozenset(I), frozenset(J)
    if not J <= I:
        raise ValueError(f"J={sorted(J)} is not a subset of I={sorted(I)}")
    n = len(a)
    if any(not 1 <= k <= n for k in I):
        raise ValueError(f"index set {sorted(I)} out of range for n={n}")
    total = 0
    for i in I:
        for j in range(i, n + 1):
            if j not in J:
                total += a[j - 1]
    return total


def tail_sum(a: Sequence[int], i: int) -> int:
    """``a_{i+1} + ... + a_n`` for 1-based ``i``."""
    return sum(a[i:])


def nonempty_subsets(S: Iterable[int]):
    items = sorted(S)
    for k in range(1, len(items) + 1):
        for c in combinations(items, k):
            yield frozenset(c)


# ---------------------------------------------------------------------------
# closed forms


def qdyson_rhs(a: Sequence[int]) -> QLaurentPoly:
    """``(q)_{|a|} / prod (q)_{a_i}``."""
    return q_multinomial(sum(a), a)


def _kadell_support(v: Sequence[int], a: Sequence[int]) -> int | None:
    if len(v) != len(a):
        raise ValueError("v and a must have the same length")
    if any(x < 1 for x in a):
        raise ValueError("all a_i must be positive")
    if sum(v) < 1:
        raise ValueError("|v| must be positive")
    support = [k for k, x in enumerate(v, start=1) if x]
    return support[0] if len(support) == 1 else None


def kadell_rhs(v: Sequence[int], a: Sequence[int]) -> QLaurentPoly:
    """Closed form for ``D_{v,(r)}(a)`` with ``r = |v|``.

    Non-zero only for ``v = (0^{k-1}, r, 0^{n-k})``, where it equals
    ``q^{a_{k+1}+...+a_n} [|a|+r-1, a_k-1] prod_{i != k} [t_i, a_i]`` and
    ``t_i`` is the tail sum ``a_i + ... + a_n`` with ``a_k`` left out.
    """
    k = _kadell_support(v, a)
    if k is None:
        return ZERO
    r = sum(v)
    out = q_binomial(sum(a) + r - 1, a[k - 1] - 1).shift(tail_sum(a, k))
    rest = delete_positions(a, [k])
    for i in range(len(rest)):
        out = out * q_binomial(sum(rest[i:]), rest[i])
    return out


def kadell_rhs_printed(v: Sequence[int], a: Sequence[int]) -> QLaurentPoly:
    """Same closed form but with tails ``a_i + ... + a_n`` that keep ``a_k``.

    Agrees with :func:`kadell_rhs` when ``k = 1`` and overcounts otherwise;
    kept so the discrepancy stays under test.
    """
    k = _kadell_support(v, a)
    if k is None:
        return ZERO
    r = sum(v)
    out = q_binomial(sum(a) + r - 1, a[k - 1] - 1).shift(tail_sum(a, k))
    for i in range(1, len(a) + 1):
        if i != k:
            out = out * q_binomial(sum(a[i - 1:]), a[i - 1])
    return out


def corollary_rhs(v: Sequence[int], a: Sequence[int]) -> tuple[QLaurentPoly, tuple[int, ...], tuple[int, ...]]:
    """Factor and reduced instance for a composition whose max part is unique.

    Returns ``(factor, v^(k), a^(k))`` where
    ``factor = q^{a_{k+1}+...+a_n} [v_k + |a| - 1, a_k - 1]``.
    """
    r, I = max_part_set(v)
    if len(I) != 1:
        raise ValueError(f"largest part of {tuple(v)} has multiplicity {len(I)}, not 1")
    (k,) = I
    factor = q_binomial(r + sum(a) - 1, a[k - 1] - 1).shift(tail_sum(a, k))
    return factor, delete_positions(v, [k]), delete_positions(a, [k])


def _multinomial_ratio(a: Sequence[int], I: frozenset[int], r: int) -> QRat:
    top = q_multinomial(sum(a) + r - 1, list(a) + [r - 1])
    rest = delete_positions(a, I)
    bottom = q_multinomial(sum(rest) + r - 1, list(rest) + [r - 1])
    return QRat(top, bottom)


def subset_sum(I: frozenset[int], a: Sequence[int], r: int) -> QRat:
    """``sum_{J} (-1)^{|I\\J|} q^{L_{I,J}(a)} (1 - q^{a_J}) / (1 - q^{|a| - a_J + r})``."""
    total = QRat(ZERO)
    size = sum(a)
    # group by denominator so each distinct one costs a single reduction
    by_den: dict[int, QLaurentPoly] = {}
    for J in nonempty_subsets(I):
        aJ = sum(a[j - 1] for j in J)
        sign = -1 if (len(I) - len(J)) % 2 else 1
        term = one_minus_q_pow(aJ).shift(L_IJ(I, J, a)) * sign
        e = size - aJ + r
        by_den[e] = by_den.get(e, ZERO) + term
    for e in sorted(by_den):
        den = one_minus_q_pow(e)
        if not den:
            raise ZeroDivisionError(f"degenerate denominator 1 - q^{e}")
        total = total + QRat(by_den[e], den)
    return total


def theorem_factor(v: Sequence[int], a: Sequence[int]) -> QRat:
    """The multiplier relating ``D_{v,v+}(a)`` to ``D`` at ``(v^(I), a^(I))``."""
    if len(v) != len(a):
        raise ValueError("v and a must have the same length")
    if any(x < 1 for x in a):
        raise ValueError("all a_i must be positive")
    r, I = max_part_set(v)
    return _multinomial_ratio(a, I, r) * subset_sum(I, a, r)


def reduce_zero_parts(v: Sequence[int], a: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Apply the ``a_i = 0`` reductions: ``None`` means the constant term vanishes."""
    if len(v) != len(a):
        raise ValueError("v and a must have the same length")
    keep_v, keep_a = [], []
    for vi, ai in zip(v, a):
        if vi < 0 or ai < 0:
            raise ValueError("v and a must be compositions")
        if ai == 0:
            if vi != 0:
                return None
            continue
        keep_v.append(vi)
        keep_a.append(ai)
    return tuple(keep_v), tuple(keep_a)


@lru_cache(maxsize=None)
def _recursive(v: tuple[int, ...], a: tuple[int, ...]) -> QRat:
    if not any(v):
        return QRat(qdyson_rhs(a))
    _, I = max_part_set(v)
    return theorem_factor(v, a) * _recursive(delete_positions(v, I), delete_positions(a, I))


def eval_D_recursive(v: Sequence[int], a: Sequence[int]) -> QLaurentPoly:
    """``D_{v,v+}(a)`` through the subset-sum recursion over the max-part set."""
    reduced = reduce_zero_parts(v, a)
    if reduced is None:
        return ZERO
    return to_polynomial(_recursive(*reduced))


@lru_cache(maxsize=None)
def _inductive(v: tuple[int, ...], a: tuple[int, ...]) -> QLaurentPoly:
    if not any(v):
        return qdyson_rhs(a)
    r, I = max_part_set(v)
    size = sum(a)
    total = ZERO
    for i in sorted(I):
        sub = _inductive(delete_positions(v, [i]), delete_positions(a, [i]))
        total = total + (q_binomial(size + r - 1, a[i - 1] - 1) * sub).shift(tail_sum(a, i))
    return total


def eval_D_inductive(v: Sequence[int], a: Sequence[int]) -> QLaurentPoly:
    """``D_{v,v+}(a)`` by removing one max-part position at a time (memoized)."""
    reduced = reduce_zero_parts(v, a)
    if reduced is None:
        return ZERO
    return _inductive(*reduced)


@lru_cache(maxsize=None)
def _corollary(v: tuple[int, ...], a: tuple[int, ...]) -> QRat:
    if not any(v):
        return QRat(qdyson_rhs(a))
    _, I = max_part_set(v)
    if len(I) == 1:
        factor, v2, a2 = corollary_rhs(v, a)
        return QRat(factor) * _corollary(v2, a2)
    # repeated maximum: the corollary does not apply at this level
    return theorem_factor(v, a) * _corollary(delete_positions(v, I), delete_positions(a, I))


def eval_D_corollary(v: Sequence[int], a: Sequence[int]) -> QLaurentPoly:
    """``D_{v,v+}(a)`` peeling unique maxima with the single-index factor.

    Levels whose maximum is repeated fall back to :func:`theorem_factor`.
    """
    reduced = reduce_zero_parts(v, a)
    if reduced is None:
        return ZERO
    return to_polynomial(_corollary(*reduced))


EVALUATORS = {
    "recursive": eval_D_recursive,
    "inductive": eval_D_inductive,
    "corollary": eval_D_corollary,
}


def clear_caches() -> None:
    for f in (_recursive, _inductive, _corollary):
        f.cache_clear()


# ---------------------------------------------------------------------------
# q-binomial / q-multinomial conversions used when unrolling the recursion


def conversion_identity(a: Sequence[int], k: int, r: int) -> tuple[QRat, QRat]:
    """Both sides of
    ``[|a|+r-1, a_k-1] = (1-q^{a_k})/(1-q^{|a|-a_k+r}) * M(a, r) / M(a^(k), r)``
    where ``M(b, r) = [|b|+r-1; (b, r-1)]``.
    """
    size = sum(a)
    ak = a[k - 1]
    lhs = QRat(q_binomial(size + r - 1, ak - 1))
    rhs = QRat(one_minus_q_pow(ak), one_minus_q_pow(size - ak + r)) * _multinomial_ratio(a, frozenset([k]), r)
    return lhs, rhs


def conversion_identity_product(a: Sequence[int], i: int, r: int) -> tuple[QRat, QRat]:
    """Both sides of
    ``[|a|+r-1, a_i-1] * M(a^(i), r) = (1-q^{a_i})/(1-q^{|a|-a_i+r}) * M(a, r)``.
    """
    size = sum(a)
    ai = a[i - 1]
    rest = delete_positions(a, [i])
    lhs = QRat(q_binomial(size + r - 1, ai - 1) * q_multinomial(sum(rest) + r - 1, list(rest) + [r - 1]))
    rhs = QRat(one_minus_q_pow(ai), one_minus_q_pow(size - ai + r)) * QRat(
        q_multinomial(size + r - 1, list(a) + [r - 1])
    )
    return lhs, rhs
