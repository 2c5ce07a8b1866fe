"""Sparse multivariate Laurent polynomials in x_1..x_n with q-polynomial
coefficients, plus the q-Dyson kernel and complete homogeneous symmetric
functions of the principal alphabet x^(a).
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .qring import ONE, ZERO, QLaurentPoly

ExponentVector = tuple[int, ...]


def _graded_lex_key(e: ExponentVector):
    return (sum(e), e)


class MultiLaurent:
    """Immutable sparse Laurent polynomial over ``Z[q, q^-1]``.

    ``terms`` maps exponent vectors (length ``nvars``) to non-zero
    :class:`QLaurentPoly` coefficients.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[ExponentVector, QLaurentPoly] | None = None):
        self.nvars = nvars
        clean: dict[ExponentVector, QLaurentPoly] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
                if c:
                    clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def const(cls, nvars: int, c: QLaurentPoly | int = 1) -> "MultiLaurent":
        if isinstance(c, int):
            c = QLaurentPoly.const(c)
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, nvars: int, exps: Sequence[int], c: QLaurentPoly | int = 1) -> "MultiLaurent":
        if isinstance(c, int):
            c = QLaurentPoly.const(c)
        return cls(nvars, {tuple(exps): c})

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "MultiLaurent":
        out = cls.__new__(cls)
        out.nvars = nvars
        out.terms = terms
        return out

    def _check(self, other: "MultiLaurent"):
        if self.nvars != other.nvars:
            raise ValueError(f"variable-count mismatch: {self.nvars} vs {other.nvars}")

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "MultiLaurent") -> "MultiLaurent":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiLaurent._raw(self.nvars, out)

    def __neg__(self) -> "MultiLaurent":
        return MultiLaurent._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiLaurent") -> "MultiLaurent":
        return self + (-other)

    def scale(self, c: QLaurentPoly | int) -> "MultiLaurent":
        if isinstance(c, int):
            c = QLaurentPoly.const(c)
        if not c:
            return MultiLaurent(self.nvars)
        return MultiLaurent._raw(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other) -> "MultiLaurent":
        if isinstance(other, (int, QLaurentPoly)):
            return self.scale(other)
        if not isinstance(other, MultiLaurent):
            return NotImplemented
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        # accumulate q-coefficients densely per output monomial: key -> (offset, list)
        acc: dict[ExponentVector, dict[int, int]] = defaultdict(lambda: defaultdict(int))
        bitems = [(eb, cb.min_exp, cb.coeffs) for eb, cb in b.items()]
        for ea, ca in a.items():
            am, ac = ca.min_exp, ca.coeffs
            for eb, bm, bc in bitems:
                key = tuple(x + y for x, y in zip(ea, eb))
                slot = acc[key]
                base = am + bm
                for j, y in enumerate(bc):
                    if y:
                        for i, x in enumerate(ac):
                            slot[base + i + j] += x * y
        out = {}
        for key, slot in acc.items():
            p = QLaurentPoly.from_dict(slot)
            if p:
                out[key] = p
        return MultiLaurent._raw(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiLaurent):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def coefficient(self, e: Sequence[int]) -> QLaurentPoly:
        return self.terms.get(tuple(e), ZERO)

    def constant_term(self) -> QLaurentPoly:
        return self.terms.get((0,) * self.nvars, ZERO)

    def min_degree(self, var: int) -> int:
        """Lowest exponent of variable ``var`` (0-based) over all terms."""
        if not self.terms:
            raise ValueError("zero polynomial")
        return min(e[var] for e in self.terms)

    def map_coefficients(self, f) -> "MultiLaurent":
        return MultiLaurent(self.nvars, {e: f(c) for e, c in self.terms.items()})

    def specialize_q(self, value):
        """Substitute a number for q; returns ``{exps: value}``."""
        out = {}
        for e, c in self.terms.items():
            v = c(value)
            if v:
                out[e] = v
        return out

    def sorted_terms(self) -> list[tuple[ExponentVector, QLaurentPoly]]:
        return sorted(self.terms.items(), key=lambda t: _graded_lex_key(t[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}" if k > 0 else f"x{i + 1}^{{{k}}}"
                for i, k in enumerate(e) if k
            )
            if not mono:
                chunks.append(f"({c})")
            else:
                chunks.append(f"({c})*{mono}")
        return " + ".join(chunks)

    def __repr__(self) -> str:
        return f"MultiLaurent({self.nvars}, '{self}')"

    def to_json(self) -> list[dict]:
        return [{"exps": list(e), "coeff": c.to_json()} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, nvars: int, obj: Iterable[dict]) -> "MultiLaurent":
        return cls(nvars, {tuple(t["exps"]): QLaurentPoly.from_json(t["coeff"]) for t in obj})


def coefficient_of(p: MultiLaurent, e: Sequence[int]) -> QLaurentPoly:
    return p.coefficient(e)


def constant_term(p: MultiLaurent) -> QLaurentPoly:
    return p.constant_term()


def _unit(nvars: int, i: int, k: int = 1) -> list[int]:
    e = [0] * nvars
    e[i] = k
    return e


def pochhammer_monomial(nvars: int, exps: Sequence[int], c: QLaurentPoly, k: int) -> MultiLaurent:
    """``(c * x^exps ; q)_k`` expanded, for a q-monomial ``c``."""
    out = MultiLaurent.const(nvars)
    exps = tuple(exps)
    for t in range(k):
        factor = MultiLaurent(nvars, {(0,) * nvars: ONE, exps: -c.shift(t)})
        out = out * factor
    return out


def pochhammer_factor(nvars: int, num_var: int, den_var: int, qshift: int, k: int) -> MultiLaurent:
    """``(q^qshift * x_num / x_den ; q)_k`` with 0-based variable indices."""
    if num_var == den_var:
        raise ValueError("num_var and den_var must differ")
    e = [0] * nvars
    e[num_var] += 1
    e[den_var] -= 1
    return pochhammer_monomial(nvars, e, QLaurentPoly.monomial(1, qshift), k)


def dyson_kernel(a: Sequence[int], nvars: int | None = None, skip: Iterable[int] = ()) -> MultiLaurent:
    """``prod_{i<j} (x_i/x_j)_{a_i} (q x_j/x_i)_{a_j}`` over indices not in ``skip``.

    ``nvars`` may exceed ``len(a)`` to leave room for extra variable slots.
    """
    n = len(a)
    nvars = n if nvars is None else nvars
    skip = set(skip)
    out = MultiLaurent.const(nvars)
    for i in range(n):
        if i in skip:
            continue
        for j in range(i + 1, n):
            if j in skip:
                continue
            out = out * pochhammer_factor(nvars, i, j, 0, a[i])
            out = out * pochhammer_factor(nvars, j, i, 1, a[j])
    return out


@lru_cache(maxsize=256)
def _dyson_product_cached(a: tuple[int, ...]) -> MultiLaurent:
    return dyson_kernel(a)


def dyson_product(a: Sequence[int]) -> MultiLaurent:
    """The expanded q-Dyson kernel for the composition ``a`` (cached)."""
    if len(a) < 1:
        raise ValueError("need at least one variable")
    return _dyson_product_cached(tuple(a))


@lru_cache(maxsize=1024)
def _h_r_cached(r: int, a: tuple[int, ...]) -> MultiLaurent:
    n = len(a)
    H = [MultiLaurent.const(n)] + [MultiLaurent(n) for _ in range(r)]
    for i, ai in enumerate(a):
        e = tuple(_unit(n, i))
        for k in range(ai):
            y = MultiLaurent(n, {e: QLaurentPoly.monomial(1, k)})
            # ascending m: the letter y may be reused, as h_r requires
            for m in range(1, r + 1):
                H[m] = H[m] + y * H[m - 1]
    return H[r]


def h_r_of_alphabet(r: int, a: Sequence[int]) -> MultiLaurent:
    """``h_r`` evaluated at the alphabet ``x^(a) = (x_i q^k : k < a_i)``."""
    if r < 0:
        return MultiLaurent(len(a))
    return _h_r_cached(r, tuple(a))


def h_lambda(lam: Sequence[int], a: Sequence[int]) -> MultiLaurent:
    """``prod_i h_{lam_i}(x^(a))`` for a partition ``lam``."""
    lam = list(lam)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"{lam} is not weakly decreasing")
    return _h_lambda_cached(tuple(p for p in lam if p), tuple(a))


@lru_cache(maxsize=1024)
def _h_lambda_cached(lam: tuple[int, ...], a: tuple[int, ...]) -> MultiLaurent:
    out = MultiLaurent.const(len(a))
    for part in lam:
        out = out * h_r_of_alphabet(part, a)
    return out
