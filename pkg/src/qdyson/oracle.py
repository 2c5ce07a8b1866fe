"""Brute-force ground truth and checkers for the auxiliary identities.

Every checker returns a :class:`VerificationReport`; nothing here calls the
fast evaluators except where a check explicitly compares against them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from . import dyson_core as core
from .laurent import MultiLaurent, dyson_kernel, dyson_product, h_lambda, pochhammer_monomial
from .qring import (
    ONE,
    ZERO,
    QLaurentPoly,
    QRat,
    one_minus_q_pow,
    q_binomial,
    q_pochhammer,
    q_shifted_factorial,
)

PASS, FAIL, DEGENERATE = "pass", "fail", "degenerate"


@dataclass
class VerificationReport:
    identity: str
    instance: dict[str, Any]
    status: str
    witness: Any = None
    note: str | None = field(default=None, compare=False)

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "instance": self.instance,
            "status": self.status,
            "witness": self.witness,
        }

    def __str__(self) -> str:
        inst = " ".join(f"{k}={_fmt(v)}" for k, v in self.instance.items())
        line = f"{self.identity} {inst} {self.status}"
        if self.note:
            line += f" ({self.note})"
        return line


def _fmt(v) -> str:
    if isinstance(v, (list, tuple)):
        return ",".join(str(x) for x in v) if v else "()"
    return str(v)


def _witness(diff) -> Any:
    """JSON form of a non-zero difference, or None."""
    if isinstance(diff, int):
        return None if diff == 0 else QLaurentPoly.const(diff).to_json()
    if isinstance(diff, QLaurentPoly):
        return None if diff.is_zero() else diff.to_json()
    if isinstance(diff, QRat):
        return None if diff.is_zero() else diff.to_json()
    if isinstance(diff, MultiLaurent):
        return None if diff.is_zero() else diff.to_json()
    raise TypeError(type(diff))


def _report(identity: str, instance: dict, diff) -> VerificationReport:
    w = _witness(diff)
    return VerificationReport(identity, instance, PASS if w is None else FAIL, w)


def _sorted(S) -> list[int]:
    return sorted(S)


# ---------------------------------------------------------------------------
# brute-force constant term


def brute_D(v: Sequence[int], lam: Sequence[int], a: Sequence[int]) -> QLaurentPoly:
    """Coefficient of ``x^v`` in ``h_lam(x^(a))`` times the expanded q-Dyson kernel."""
    v, lam, a = tuple(v), tuple(lam), tuple(a)
    if len(v) != len(a):
        raise ValueError("v and a must have the same length")
    if any(x < 0 for x in a) or any(x < 0 for x in lam):
        raise ValueError("a and lambda must be non-negative")
    if sum(v) != sum(lam):
        return ZERO
    if not a:
        return ONE
    h = h_lambda(lam, a)
    kernel = dyson_product(a)
    total = ZERO
    kt = kernel.terms
    for e, c in h.terms.items():
        kc = kt.get(tuple(x - y for x, y in zip(v, e)))
        if kc is not None:
            total = total + c * kc
    return total


def check_qdyson(a: Sequence[int]) -> VerificationReport:
    return _report("qdyson", {"a": list(a)}, dyson_product(a).constant_term() - core.qdyson_rhs(a))


def check_kadell(v: Sequence[int], a: Sequence[int]) -> VerificationReport:
    r = sum(v)
    diff = brute_D(v, (r,), a) - core.kadell_rhs(v, a)
    return _report("kadell", {"v": list(v), "a": list(a)}, diff)


def check_theorem(v: Sequence[int], a: Sequence[int]) -> VerificationReport:
    lam = tuple(sorted(v, reverse=True))
    brute = brute_D(v, lam, a)
    rec = core.eval_D_recursive(v, a)
    ind = core.eval_D_inductive(v, a)
    diff = rec - brute
    if diff.is_zero():
        diff = ind - brute
    return _report("theorem", {"v": list(v), "a": list(a)}, diff)


def check_corollary(v: Sequence[int], a: Sequence[int]) -> VerificationReport:
    factor, v2, a2 = core.corollary_rhs(v, a)
    diff = core.eval_D_recursive(v, a) - factor * core.eval_D_recursive(v2, a2)
    return _report("corollary", {"v": list(v), "a": list(a)}, diff)


# ---------------------------------------------------------------------------
# the partial-fraction splitting in w_1 (single w variable)


def A_ij(a: Sequence[int], i: int, j: int, nvars: int | None = None) -> tuple[QLaurentPoly, MultiLaurent]:
    """Residue coefficient ``A_ij`` as ``(denominator, polynomial part)``.

    ``A_ij = poly / denominator`` with denominator ``(q^-j)_j (q)_{a_i-j-1}``.
    ``i`` is 1-based, ``0 <= j < a_i``. ``nvars`` may exceed ``len(a)`` to
    reserve extra variable slots (e.g. for ``w_1``).
    """
    n = len(a)
    if not 1 <= i <= n:
        raise IndexError(f"i={i} out of range for n={n}")
    ai = a[i - 1]
    if not 0 <= j <= ai - 1:
        raise IndexError(f"j={j} out of range 0..{ai - 1}")
    nvars = n if nvars is None else nvars
    den = q_shifted_factorial(QLaurentPoly.monomial(1, -j), j) * q_pochhammer(ai - j - 1)
    poly = dyson_kernel(a, nvars, skip=[i - 1])
    for l in range(1, n + 1):
        if l == i:
            continue
        e = [0] * nvars
        e[i - 1] += 1
        e[l - 1] -= 1
        al = a[l - 1]
        if l < i:
            block = pochhammer_monomial(nvars, e, QLaurentPoly.monomial(1, 1 - al), j)
            block = block * pochhammer_monomial(nvars, e, QLaurentPoly.monomial(1, j + 1), ai - j)
            block = block.scale(QLaurentPoly.monomial(1, j * al))
        else:
            block = pochhammer_monomial(nvars, e, QLaurentPoly.monomial(1, -al), j + 1)
            block = block * pochhammer_monomial(nvars, e, QLaurentPoly.monomial(1, j + 1), ai - j - 1)
            block = block.scale(QLaurentPoly.monomial(1, (j + 1) * al))
        poly = poly * block
    return den, poly


def check_power_series(a: Sequence[int], i: int, j: int) -> VerificationReport:
    """``A_ij`` has no negative powers of ``x_i``."""
    _, poly = A_ij(a, i, j)
    low = poly.min_degree(i - 1) if not poly.is_zero() else 0
    status = PASS if low >= 0 else FAIL
    witness = None if low >= 0 else QLaurentPoly.const(low).to_json()
    return VerificationReport("power_series", {"a": list(a), "i": i, "j": j}, status, witness)


def verify_splitting(a: Sequence[int]) -> VerificationReport:
    """Check the splitting of the kernel over ``prod_i (x_i/w_1)_{a_i}``.

    Both sides are multiplied by ``prod_u (x_u/w_1)_{a_u}`` and by the
    product of all ``A_ij`` denominators, so the comparison is a plain
    Laurent-polynomial identity in ``x_1..x_n, w_1``.
    """
    a = tuple(a)
    n = len(a)
    if any(x < 1 for x in a):
        raise ValueError("all a_i must be positive")
    nv = n + 1
    pairs = [(i, j) for i in range(1, n + 1) for j in range(a[i - 1])]
    dens = {}
    polys = {}
    for i, j in pairs:
        dens[(i, j)], polys[(i, j)] = A_ij(a, i, j, nvars=nv)

    def linear(u: int, k: int) -> MultiLaurent:
        # 1 - q^k x_u / w_1
        e = [0] * nv
        e[u - 1] = 1
        e[n] = -1
        return MultiLaurent(nv, {(0,) * nv: ONE, tuple(e): QLaurentPoly.monomial(-1, k)})

    linears = {(u, k): linear(u, k) for u, k in pairs}
    common = ONE
    for key in pairs:
        common = common * dens[key]
    lhs = dyson_kernel(a, nv).scale(common)
    rhs = MultiLaurent(nv)
    for key in pairs:
        term = polys[key]
        for other in pairs:
            if other != key:
                term = term * linears[other]
        cofactor = ONE
        for other in pairs:
            if other != key:
                cofactor = cofactor * dens[other]
        rhs = rhs + term.scale(cofactor)
    return _report("splitting", {"a": list(a)}, lhs - rhs)


# ---------------------------------------------------------------------------
# auxiliary identities


def _poch_z(c_exp: int, z_exp: int, k: int) -> MultiLaurent:
    """``(q^c_exp z^z_exp ; q)_k`` in the single auxiliary variable z."""
    return pochhammer_monomial(1, (z_exp,), QLaurentPoly.monomial(1, c_exp), k)


def check_lemma31(i: int, j: int, k: int) -> VerificationReport:
    """Both shifted-factorial quotient identities, cross-multiplied.

    ``k = j`` is accepted for the first identity only.
    """
    if i < 1 or j < 1 or not 0 <= k <= j:
        raise ValueError("need i, j >= 1 and 0 <= k <= j")
    denom = _poch_z(-k, -1, i)
    lhs_a = _poch_z(0, -1, i) * _poch_z(1, 1, j)
    rhs_a = (_poch_z(1 - i, 1, k) * _poch_z(k + 1, 1, j - k) * denom).scale(QLaurentPoly.monomial(1, i * k))
    diff = lhs_a - rhs_a
    if diff.is_zero() and k <= j - 1:
        lhs_b = _poch_z(0, 1, j) * _poch_z(1, -1, i)
        rhs_b = (_poch_z(-i, 1, k + 1) * _poch_z(k + 1, 1, j - k - 1) * denom).scale(
            QLaurentPoly.monomial(1, (k + 1) * i)
        )
        diff = lhs_b - rhs_b
    return _report("lemma31", {"i": i, "j": j, "k": k}, diff)


def prop41_lhs(n: int, t: int) -> QRat:
    total = QRat(ZERO)
    for k in range(t + 1):
        den = q_shifted_factorial(QLaurentPoly.monomial(1, -k), k) * q_pochhammer(t - k)
        total = total + QRat(QLaurentPoly.monomial(1, k * (n - t)), den)
    return total


def check_prop41(n: int, t: int) -> VerificationReport:
    if n < 0 or t < 0:
        raise ValueError("n and t must be non-negative")
    return _report("prop41", {"n": n, "t": t}, prop41_lhs(n, t) - QRat(q_binomial(n, t)))


def _L_deleted(I, J, i: int, a: Sequence[int]) -> int:
    """``L_{I\\{i}, J\\{i}}(a^(i))`` with labels renumbered after the deletion."""
    return core.L_IJ(
        core.reindex_after_delete(I, i), core.reindex_after_delete(J, i), core.delete_positions(a, [i])
    )


def _inst(**kw) -> dict:
    return {k: (_sorted(v) if isinstance(v, (set, frozenset)) else list(v) if isinstance(v, tuple) else v)
            for k, v in kw.items()}


def check_prop51(I, J, i: int, a: Sequence[int]) -> VerificationReport:
    I, J = frozenset(I), frozenset(J)
    if not J or not J <= I or i not in J:
        raise ValueError("need non-empty J subset of I and i in J")
    lhs = _L_deleted(I, J, i, a)
    rhs = core.L_IJ(I, J, a) - sum(a[i - 1:]) + sum(a[j - 1] for j in J if j >= i)
    return _report("prop51", _inst(I=I, J=J, i=i, a=tuple(a)), lhs - rhs)


def check_lemma52(I, i: int, a: Sequence[int]) -> VerificationReport:
    I = frozenset(I)
    if len(I) < 2 or i not in I:
        raise ValueError("need |I| >= 2 and i in I")
    rest = I - {i}
    lhs = ZERO
    for J in core.nonempty_subsets(rest):
        sign = -1 if len(J) % 2 else 1
        expo = _L_deleted(I, J, i, a) + sum(a[j - 1] for j in J)
        lhs = lhs + QLaurentPoly.monomial(sign, expo)
    rhs = QLaurentPoly.monomial(-1, core.L_IJ(I, {i}, a) - core.tail_sum(a, i))
    return _report("lemma52", _inst(I=I, i=i, a=tuple(a)), lhs - rhs)


def check_lemma53(I, J, a: Sequence[int]) -> VerificationReport:
    I, J = frozenset(I), frozenset(J)
    if not J or not J <= I:
        raise ValueError("need non-empty J subset of I")
    lhs = ZERO
    for i in sorted(J):
        sign = 1 if len(J - {i}) % 2 else -1
        expo = core.tail_sum(a, i) + _L_deleted(I, J, i, a)
        lhs = lhs + one_minus_q_pow(a[i - 1]).shift(expo) * sign
    aJ = sum(a[j - 1] for j in J)
    rhs = one_minus_q_pow(aJ).shift(core.L_IJ(I, J, a)) * (-1 if len(J) % 2 else 1)
    return _report("lemma53", _inst(I=I, J=J, a=tuple(a)), lhs - rhs)


def _sum_grouped(groups: dict[tuple[int, ...], QLaurentPoly]) -> QRat:
    total = QRat(ZERO)
    for exps in sorted(groups):
        den = ONE
        for e in exps:
            den = den * one_minus_q_pow(e)
        total = total + QRat(groups[exps], den)
    return total


def check_prop54(I, a: Sequence[int], r: int) -> VerificationReport:
    I = frozenset(I)
    if len(I) < 2:
        raise ValueError("need |I| >= 2")
    inst = _inst(I=I, a=tuple(a), r=r)
    size = sum(a)
    lhs_groups: dict[tuple[int, ...], QLaurentPoly] = {}
    rhs_groups: dict[tuple[int, ...], QLaurentPoly] = {}
    for i in sorted(I):
        ai = a[i - 1]
        outer = size - ai + r
        for J in core.nonempty_subsets(I - {i}):
            aJ = sum(a[j - 1] for j in J)
            inner = outer - aJ
            if outer == 0 or inner == 0:
                return VerificationReport("prop54", inst, DEGENERATE, None, "degenerate denominator")
            sign = 1 if len(J) % 2 else -1
            expo = core.tail_sum(a, i) + _L_deleted(I, J, i, a)
            num = (one_minus_q_pow(ai) * one_minus_q_pow(aJ)).shift(expo) * sign
            key = (outer, inner)
            lhs_groups[key] = lhs_groups.get(key, ZERO) + num
    for J in core.nonempty_subsets(I):
        aJ = sum(a[j - 1] for j in J)
        e = size - aJ + r
        if e == 0:
            return VerificationReport("prop54", inst, DEGENERATE, None, "degenerate denominator")
        sign = -1 if len(J) % 2 else 1
        num = one_minus_q_pow(aJ).shift(core.L_IJ(I, J, a)) * sign
        rhs_groups[(e,)] = rhs_groups.get((e,), ZERO) + num
    return _report("prop54", inst, _sum_grouped(lhs_groups) - _sum_grouped(rhs_groups))


def check_section6(a: Sequence[int], k: int, r: int) -> VerificationReport:
    """Both q-binomial/q-multinomial conversion identities at position ``k``."""
    lhs, rhs = core.conversion_identity(a, k, r)
    diff = lhs - rhs
    if diff.is_zero():
        lhs, rhs = core.conversion_identity_product(a, k, r)
        diff = lhs - rhs
    return _report("section6", {"a": list(a), "k": k, "r": r}, diff)
