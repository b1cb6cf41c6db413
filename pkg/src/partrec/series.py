"""Exact truncated formal power series over arbitrary-precision integers.

``Series`` is the dense substrate all generating-function work here runs on:
a tuple of integer coefficients c[0..N] for a fixed truncation order N, with
exact ring arithmetic (no floats, no overflow, ever).  Binary operations
truncate to the smaller operand's order, so the scope of every identity
comparison stays explicit.

``expand_product`` expands an eta-style infinite product
prod_{k>=1} (1 + sign * x^(stride*k + offset))^power to a given order, and
``theta_series`` densifies a sparse (exponent, coefficient) stream.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple


class Series:
    """Immutable dense power series truncated at x^order."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = tuple(int(c) for c in coeffs)
        if not cs:
            raise ValueError("Series needs at least the constant coefficient")
        self._coeffs = cs

    @classmethod
    def zero(cls, order: int) -> Series:
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> Series:
        return cls([1] + [0] * order)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("coefficient index must be nonnegative")
        return self._coeffs[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self._coeffs[:8])
        tail = ", ..." if len(self._coeffs) > 8 else ""
        return f"Series(order={self.order}, [{shown}{tail}])"

    # ------------------------------------------------------------------
    # ring arithmetic (binary ops truncate to the smaller order)
    # ------------------------------------------------------------------

    def __add__(self, other: Series) -> Series:
        if not isinstance(other, Series):
            return NotImplemented
        return Series(a + b for a, b in zip(self._coeffs, other._coeffs))

    def __sub__(self, other: Series) -> Series:
        if not isinstance(other, Series):
            return NotImplemented
        return Series(a - b for a, b in zip(self._coeffs, other._coeffs))

    def __neg__(self) -> Series:
        return Series(-c for c in self._coeffs)

    def __mul__(self, other: Series | int) -> Series:
        if isinstance(other, int):
            return Series(other * c for c in self._coeffs)
        if not isinstance(other, Series):
            return NotImplemented
        order = min(self.order, other.order)
        out = [0] * (order + 1)
        bb = other._coeffs
        for i, ai in enumerate(self._coeffs[: order + 1]):
            if not ai:
                continue
            seg = bb[: order + 1 - i]
            if ai == 1:
                out[i:] = [o + b for o, b in zip(out[i:], seg)]
            elif ai == -1:
                out[i:] = [o - b for o, b in zip(out[i:], seg)]
            else:
                out[i:] = [o + ai * b for o, b in zip(out[i:], seg)]
        return Series(out)

    def __rmul__(self, other: int) -> Series:
        if isinstance(other, int):
            return Series(other * c for c in self._coeffs)
        return NotImplemented

    def inverse(self) -> Series:
        """Multiplicative inverse: b with self * b = 1 up to this order.

        Needs a unit constant term (+1 or -1); solved by the triangular
        recurrence b[n] = -a[0] * sum_{k>=1} a[k] b[n-k], skipping zero
        coefficients of the input (sparse inputs invert in O(N * nonzeros)).
        """
        a0 = self._coeffs[0]
        if a0 not in (1, -1):
            raise ValueError(f"non-invertible series: constant term {a0} is not +1 or -1")
        tail = [(k, ak) for k, ak in enumerate(self._coeffs) if k and ak]
        out = [0] * len(self._coeffs)
        out[0] = a0
        for n in range(1, len(out)):
            s = 0
            for k, ak in tail:
                if k > n:
                    break
                if ak == 1:
                    s += out[n - k]
                elif ak == -1:
                    s -= out[n - k]
                else:
                    s += ak * out[n - k]
            out[n] = -s if a0 == 1 else s
        return Series(out)

    # ------------------------------------------------------------------
    # substitutions and parity projections
    # ------------------------------------------------------------------

    def subs_neg(self) -> Series:
        """Return self(-x): odd-index coefficients negated."""
        return Series(-c if i % 2 else c for i, c in enumerate(self._coeffs))

    def subs_power(self, m: int) -> Series:
        """Return self(x^m) truncated to this order; m >= 1."""
        if m < 1:
            raise ValueError("substitution power must be >= 1")
        if m == 1:
            return self
        out = [0] * len(self._coeffs)
        for i in range(0, self.order // m + 1):
            out[i * m] = self._coeffs[i]
        return Series(out)

    def even_part(self) -> Series:
        """(self(x) + self(-x)) / 2: odd coefficients zeroed."""
        return self._parity_part(+1)

    def odd_part(self) -> Series:
        """(self(x) - self(-x)) / 2: even coefficients zeroed."""
        return self._parity_part(-1)

    def _parity_part(self, direction: int) -> Series:
        neg = self.subs_neg()
        out = []
        for a, b in zip(self._coeffs, neg._coeffs):
            s = a + b if direction > 0 else a - b
            # Always even for integer coefficients; a failure here means the
            # substitution itself is broken, which must not pass silently.
            if s % 2:
                raise ArithmeticError("parity projection hit a non-even doubled coefficient")
            out.append(s // 2)
        return Series(out)

    def shifted(self, k: int) -> Series:
        """Return x^k * self, truncated to this order; k >= 0."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if k == 0:
            return self
        n = len(self._coeffs)
        return Series([0] * min(k, n) + list(self._coeffs[: max(0, n - k)]))

    def truncated(self, order: int) -> Series:
        """Drop coefficients above `order` (never grows a series)."""
        if order < 0 or order > self.order:
            raise ValueError(f"cannot truncate order-{self.order} series to order {order}")
        return Series(self._coeffs[: order + 1])


class Factor(NamedTuple):
    """One factor family prod_{k>=1} (1 + sign * x^(stride*k + offset))^power."""

    stride: int
    offset: int = 0
    sign: int = -1
    power: int = 1


def _validate_factor(f: Factor) -> None:
    if f.stride < 1:
        raise ValueError(f"malformed factor {f}: stride must be >= 1")
    if f.sign not in (1, -1):
        raise ValueError(f"malformed factor {f}: sign must be +1 or -1")
    if f.power == 0:
        raise ValueError(f"malformed factor {f}: power must be nonzero")
    if f.stride + f.offset < 1:
        raise ValueError(f"malformed factor {f}: smallest exponent stride+offset must be >= 1")


def _mul_binomial(c: list[int], m: int, sign: int) -> None:
    """In-place c *= (1 + sign*x^m), truncated to len(c)-1.

    Descending blocks of width m keep every read below the write range, so
    slice-sized list comprehensions replace the elementwise loop.
    """
    hi = len(c) - 1
    while hi >= m:
        lo = max(m, hi - m + 1)
        seg = c[lo - m : hi - m + 1]
        if sign == 1:
            c[lo : hi + 1] = [a + b for a, b in zip(c[lo : hi + 1], seg)]
        else:
            c[lo : hi + 1] = [a - b for a, b in zip(c[lo : hi + 1], seg)]
        hi = lo - 1


def _expand_positive(factors: list[Factor], order: int) -> Series:
    c = [0] * (order + 1)
    c[0] = 1
    for f in factors:
        m = f.stride + f.offset
        while m <= order:
            for _ in range(f.power):
                _mul_binomial(c, m, f.sign)
            m += f.stride
    return Series(c)


def expand_product(factors: Iterable[Factor | tuple], order: int) -> Series:
    """Expand a product of Factor families to the given truncation order.

    Factors whose smallest exponent exceeds `order` contribute nothing.
    Negative powers are realized by expanding the positive-power product of
    those factors and inverting once.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    pos: list[Factor] = []
    neg: list[Factor] = []
    for raw in factors:
        f = Factor(*raw)
        _validate_factor(f)
        (pos if f.power > 0 else neg).append(f)
    num = _expand_positive(pos, order)
    if not neg:
        return num
    den = _expand_positive([f._replace(power=-f.power) for f in neg], order)
    return num * den.inverse()


def theta_series(terms: Iterable[tuple[int, int]], order: int) -> Series:
    """Densify a sparse (exponent, coefficient) stream, truncated at `order`.

    Duplicate exponents are merged by summing; an empty stream gives 0.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    c = [0] * (order + 1)
    for e, coeff in terms:
        if e < 0:
            raise ValueError(f"negative exponent {e} in theta stream")
        if e <= order:
            c[e] += coeff
    return Series(c)


def psi_series(order: int) -> Series:
    """sum_{n>=0} x^(n(n+1)/2) up to `order`."""
    c = [0] * (order + 1)
    n = 0
    while n * (n + 1) // 2 <= order:
        c[n * (n + 1) // 2] = 1
        n += 1
    return Series(c)


def phi_series(order: int) -> Series:
    """1 + 2 * sum_{j>=1} x^(j^2) up to `order`."""
    c = [0] * (order + 1)
    c[0] = 1
    j = 1
    while j * j <= order:
        c[j * j] = 2
        j += 1
    return Series(c)
