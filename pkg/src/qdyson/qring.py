"""Exact Laurent polynomials in a single variable q, their fraction field,
and the q-combinatorial building blocks (shifted factorials, Gaussian
binomials, q-multinomials).

Coefficients are Python ints (arbitrary precision); exponents are machine
ints. Every value is immutable and kept in canonical form, so structural
equality is mathematical equality.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence


class NonPolynomialResult(ArithmeticError):
    """Raised when a quotient that must be a polynomial leaves a remainder."""

    def __init__(self, message: str, remainder: "QLaurentPoly | None" = None):
        super().__init__(message)
        self.remainder = remainder


class QLaurentPoly:
    """A Laurent polynomial in q with integer coefficients.

    Stored densely: ``coeffs[i]`` is the coefficient of ``q**(min_exp + i)``.
    The zero polynomial is ``min_exp == 0`` and ``coeffs == ()``.

    >>> QLaurentPoly(0, (1, 1)) * QLaurentPoly(0, (1, -1))
    QLaurentPoly('1 - q^2')
    >>> QLaurentPoly(0, (1, 1)).shift(-1)
    QLaurentPoly('q^{-1} + 1')
    """

    __slots__ = ("min_exp", "coeffs", "_hash")

    def __init__(self, min_exp: int = 0, coeffs: Sequence[int] = ()):
        lo, hi = 0, len(coeffs)
        while lo < hi and coeffs[lo] == 0:
            lo += 1
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            self.min_exp = 0
            self.coeffs: tuple[int, ...] = ()
        else:
            self.min_exp = min_exp + lo
            self.coeffs = tuple(int(c) for c in coeffs[lo:hi])
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c: int) -> "QLaurentPoly":
        return cls(0, (c,))

    @classmethod
    def monomial(cls, c: int, exp: int) -> "QLaurentPoly":
        """``c * q**exp``."""
        return cls(exp, (c,))

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> "QLaurentPoly":
        d = {e: c for e, c in d.items() if c}
        if not d:
            return ZERO
        lo, hi = min(d), max(d)
        buf = [0] * (hi - lo + 1)
        for e, c in d.items():
            buf[e - lo] = c
        return cls(lo, buf)

    # -- basic queries ------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return self.min_exp + len(self.coeffs) - 1

    def leading_coeff(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def to_dict(self) -> dict[int, int]:
        m = self.min_exp
        return {m + i: c for i, c in enumerate(self.coeffs) if c}

    def coeff(self, exp: int) -> int:
        i = exp - self.min_exp
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __call__(self, x):
        """Evaluate at ``x`` (int, Fraction, ...). Negative exponents need an invertible x."""
        if not self.coeffs:
            return 0
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if self.min_exp >= 0:
            return acc * x**self.min_exp
        return acc * Fraction(1) / Fraction(x) ** (-self.min_exp)

    # -- ring operations ----------------------------------------------
    def __add__(self, other):
        if isinstance(other, int):
            other = QLaurentPoly.const(other)
        elif not isinstance(other, QLaurentPoly):
            return NotImplemented
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.max_exp, other.max_exp)
        buf = [0] * (hi - lo + 1)
        off = self.min_exp - lo
        for i, c in enumerate(self.coeffs):
            buf[off + i] = c
        off = other.min_exp - lo
        for i, c in enumerate(other.coeffs):
            buf[off + i] += c
        return QLaurentPoly(lo, buf)

    __radd__ = __add__

    def __neg__(self):
        return QLaurentPoly(self.min_exp, [-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = QLaurentPoly.const(other)
        elif not isinstance(other, QLaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return QLaurentPoly(self.min_exp, [c * other for c in self.coeffs])
        if not isinstance(other, QLaurentPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        buf = [0] * (len(a) + len(b) - 1)
        for j, cb in enumerate(b):
            if cb:
                for i, ca in enumerate(a):
                    buf[i + j] += ca * cb
        return QLaurentPoly(self.min_exp + other.min_exp, buf)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers leave the ring; use QRat")
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "QLaurentPoly":
        """Multiply by ``q**k``."""
        if not self.coeffs:
            return self
        return QLaurentPoly(self.min_exp + k, self.coeffs)

    def divmod(self, other: "QLaurentPoly") -> tuple["QLaurentPoly", "QLaurentPoly"]:
        """Exact long division in Z[q, q^-1] by ``other`` whose leading coefficient
        must divide every intermediate leading coefficient.

        Returns ``(quotient, remainder)``; the remainder is zero iff ``other``
        divides ``self`` exactly. If a leading coefficient fails to divide,
        the partial remainder at that point is returned.
        """
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.coeffs:
            return ZERO, ZERO
        den = other.coeffs
        lc = den[-1]
        dn = len(den)
        rem = list(self.coeffs)
        nq = len(rem) - dn + 1
        if nq <= 0:
            return ZERO, self
        quo = [0] * nq
        for k in range(nq - 1, -1, -1):
            top = rem[k + dn - 1]
            if top == 0:
                continue
            c, r = divmod(top, lc)
            if r:
                return (QLaurentPoly(self.min_exp - other.min_exp, quo),
                        QLaurentPoly(self.min_exp, rem))
            quo[k] = c
            for i in range(dn):
                rem[k + i] -= c * den[i]
        return (QLaurentPoly(self.min_exp - other.min_exp, quo),
                QLaurentPoly(self.min_exp, rem))

    def exact_div(self, other: "QLaurentPoly") -> "QLaurentPoly":
        q, r = self.divmod(other)
        if r.coeffs:
            raise NonPolynomialResult("non-polynomial result", r)
        return q

    # -- comparison / hashing -----------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = QLaurentPoly.const(other)
        if not isinstance(other, QLaurentPoly):
            return NotImplemented
        return self.min_exp == other.min_exp and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.min_exp, self.coeffs))
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    # -- rendering ----------------------------------------------------
    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.min_exp + i
            if e == 0:
                mono = ""
            elif e == 1:
                mono = "q"
            elif e > 0:
                mono = f"q^{e}"
            else:
                mono = f"q^{{{e}}}"
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"QLaurentPoly('{self}')"

    def to_json(self) -> dict:
        return {"min_exp": self.min_exp, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "QLaurentPoly":
        return cls(int(obj["min_exp"]), [int(c) for c in obj["coeffs"]])


ZERO = QLaurentPoly()
ONE = QLaurentPoly(0, (1,))
Q = QLaurentPoly(1, (1,))


def one_minus_q_pow(m: int) -> QLaurentPoly:
    """``1 - q**m``."""
    return ONE - QLaurentPoly.monomial(1, m)


# ---------------------------------------------------------------------------
# Polynomial gcd over Z (primitive PRS on non-negative-exponent polynomials)


def _primitive(coeffs: list[int]) -> list[int]:
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    if g > 1:
        coeffs = [c // g for c in coeffs]
    return coeffs


def _poly_gcd_dense(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd of two non-zero dense integer polynomials (index = degree)."""
    a = _primitive(a)
    b = _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        # pseudo-remainder of a by b
        r = list(a)
        lb = b[-1]
        db = len(b) - 1
        while len(r) - 1 >= db and r:
            lr = r[-1]
            shift = len(r) - 1 - db
            r = [c * lb for c in r]
            for i, cb in enumerate(b):
                r[shift + i] -= lr * cb
            while r and r[-1] == 0:
                r.pop()
        a, b = b, _primitive(r) if r else []
    if a[-1] < 0:
        a = [-c for c in a]
    return a


def poly_gcd(p: QLaurentPoly, r: QLaurentPoly) -> QLaurentPoly:
    """Gcd in Z[q] of two polynomials with non-negative exponents.

    The result is primitive with a positive leading coefficient, times the
    gcd of the contents.
    """
    if not p.coeffs:
        return r * (1 if r.leading_coeff() >= 0 else -1)
    if not r.coeffs:
        return p * (1 if p.leading_coeff() >= 0 else -1)
    # the q-power part is handled through min_exp, the rest via PRS
    low = min(p.min_exp, r.min_exp)
    g = _poly_gcd_dense(list(p.coeffs), list(r.coeffs))
    return QLaurentPoly(low, g) * gcd(p.content(), r.content())


# ---------------------------------------------------------------------------
# Fraction field


class QRat:
    """Reduced quotient ``num / den`` of q-polynomials.

    Canonical form: both parts have lowest exponent >= 0 and no common
    factor q; the primitive gcd of num and den is 1; the contents of num
    and den are coprime; den has a positive leading coefficient.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _reduced: bool = False):
        if isinstance(num, int):
            num = QLaurentPoly.const(num)
        if den is None:
            den = ONE
        elif isinstance(den, int):
            den = QLaurentPoly.const(den)
        if not den.coeffs:
            raise ZeroDivisionError("QRat with zero denominator")
        if _reduced:
            self.num, self.den = num, den
            return
        if not num.coeffs:
            self.num, self.den = ZERO, ONE
            return
        # clear q-powers: num/den = q^k * n0/d0 with n0, d0 having constant terms
        k = num.min_exp - den.min_exp
        n0 = QLaurentPoly(0, num.coeffs)
        d0 = QLaurentPoly(0, den.coeffs)
        if len(d0.coeffs) > 1:
            g = QLaurentPoly(0, _poly_gcd_dense(list(n0.coeffs), list(d0.coeffs)))
            if len(g.coeffs) > 1:
                n0 = n0.exact_div(g)
                d0 = d0.exact_div(g)
        c = gcd(n0.content(), d0.content())
        if d0.leading_coeff() < 0:
            c = -c
        if c != 1:
            n0 = QLaurentPoly(0, [x // c for x in n0.coeffs])
            d0 = QLaurentPoly(0, [x // c for x in d0.coeffs])
        if k >= 0:
            self.num, self.den = n0.shift(k), d0
        else:
            self.num, self.den = n0, d0.shift(-k)

    @classmethod
    def of(cls, x) -> "QRat":
        if isinstance(x, QRat):
            return x
        return cls(x)

    def is_zero(self) -> bool:
        return not self.num.coeffs

    def __add__(self, other):
        if not isinstance(other, QRat):
            if isinstance(other, (int, QLaurentPoly)):
                other = QRat(other)
            else:
                return NotImplemented
        if self.den == other.den:
            return QRat(self.num + other.num, self.den)
        if self.den == ONE:
            return QRat(self.num * other.den + other.num, other.den)
        if other.den == ONE:
            return QRat(other.num * self.den + self.num, self.den)
        g = poly_gcd(self.den, other.den)
        d1 = self.den.exact_div(g)
        d2 = other.den.exact_div(g)
        return QRat(self.num * d2 + other.num * d1, self.den * d2)

    __radd__ = __add__

    def __neg__(self):
        return QRat(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        if not isinstance(other, QRat):
            if isinstance(other, (int, QLaurentPoly)):
                other = QRat(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QRat):
            if isinstance(other, (int, QLaurentPoly)):
                other = QRat(other)
            else:
                return NotImplemented
        return QRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, QRat):
            if isinstance(other, (int, QLaurentPoly)):
                other = QRat(other)
            else:
                return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero QRat")
        return QRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return QRat.of(other if not isinstance(other, int) else QLaurentPoly.const(other)) / self

    def __eq__(self, other):
        if isinstance(other, (int, QLaurentPoly)):
            other = QRat(other)
        if not isinstance(other, QRat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        return Fraction(self.num(x)) / Fraction(self.den(x))

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"QRat('{self}')"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}


def to_polynomial(u: QRat) -> QLaurentPoly:
    """Return ``u`` as a polynomial; raise :class:`NonPolynomialResult` otherwise."""
    if u.den.is_monomial() and u.den.coeffs[0] == 1:
        return u.num.shift(-u.den.min_exp)
    quo, rem = u.num.divmod(u.den)
    if rem.coeffs:
        raise NonPolynomialResult("non-polynomial result", rem)
    return quo


# ---------------------------------------------------------------------------
# q-combinatorics


def q_shifted_factorial(z: QLaurentPoly, k: int) -> QLaurentPoly:
    """``(z; q)_k = prod_{i<k} (1 - z q^i)`` for a monomial ``z = c q^m``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k and not z.is_monomial():
        raise ValueError("z must be a single monomial c*q^m")
    out = ONE
    for i in range(k):
        out = out * (ONE - z.shift(i))
    return out


def q_pochhammer(k: int) -> QLaurentPoly:
    """``(q; q)_k``."""
    return _q_pochhammer(k)


@lru_cache(maxsize=None)
def _q_pochhammer(k: int) -> QLaurentPoly:
    if k == 0:
        return ONE
    return _q_pochhammer(k - 1) * one_minus_q_pow(k)


_rows_lock = threading.Lock()
_rows: list[tuple[QLaurentPoly, ...]] = [(ONE,)]


def _binomial_row(n: int) -> tuple[QLaurentPoly, ...]:
    # rows are only ever appended, so readers never see a partial table
    if n < len(_rows):
        return _rows[n]
    with _rows_lock:
        while len(_rows) <= n:
            prev = _rows[-1]
            m = len(_rows)
            row = [ONE] * (m + 1)
            for j in range(1, m):
                row[j] = prev[j - 1] + prev[j].shift(j)
            _rows.append(tuple(row))
    return _rows[n]


def q_binomial(n: int, k: int) -> QLaurentPoly:
    """Gaussian binomial ``[n choose k]_q``; zero when ``k > n`` or ``k < 0``.

    Rows come from the q-Pascal rule ``[n,k] = [n-1,k-1] + q^k [n-1,k]``
    and are memoized.
    """
    if k < 0 or n < 0 or k > n:
        return ZERO
    return _binomial_row(n)[k]


def q_binomial_divided(n: int, k: int) -> QLaurentPoly:
    """``(q^{n-k+1})_k / (q)_k`` by exact division; kept as an oracle for :func:`q_binomial`."""
    if k < 0 or n < 0 or k > n:
        return ZERO
    top = q_shifted_factorial(QLaurentPoly.monomial(1, n - k + 1), k)
    return top.exact_div(q_pochhammer(k))


def q_multinomial(n: int, parts: Iterable[int]) -> QLaurentPoly:
    """``(q)_n / prod (q)_{s_i}`` for a composition ``s`` of ``n``."""
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError("composition parts must be non-negative")
    if sum(parts) != n:
        raise ValueError(f"|s| = {sum(parts)} does not equal n = {n}")
    # product of binomials avoids any division
    out = ONE
    remaining = n
    for p in parts:
        out = out * q_binomial(remaining, p)
        remaining -= p
    return out
