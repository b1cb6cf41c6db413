"""Exponent and shift sequences behind the partition recurrences.

Every ``*_terms`` function returns a merged list of (exponent, coefficient)
pairs: duplicates summed, zero coefficients dropped, exponents strictly
increasing, clipped to ``bound`` inclusive.  Bilateral families iterate the
index over 0, 1, -1, 2, -2, ... and stop once both directions pass the bound,
so termination never depends on inverting a quadratic.
"""

from __future__ import annotations

from math import isqrt
from typing import Callable, Iterable

TermList = list[tuple[int, int]]


def merge_terms(pairs: Iterable[tuple[int, int]]) -> TermList:
    """Sum coefficients of equal exponents, drop zeros, sort ascending."""
    acc: dict[int, int] = {}
    for e, c in pairs:
        acc[e] = acc.get(e, 0) + c
    return sorted((e, c) for e, c in acc.items() if c)


def _sign(j: int) -> int:
    return -1 if j % 2 else 1


def _bilateral(value_at: Callable[[int], int], coeff_at: Callable[[int], int],
               bound: int) -> list[tuple[int, int]]:
    """Collect (value_at(j), coeff_at(j)) over j in Z with value <= bound.

    Valid for quadratics whose values increase with |j| from |j| = 1 on,
    which holds for every family below.
    """
    pairs = []
    m = 0
    while True:
        js = (0,) if m == 0 else (m, -m)
        vals = [value_at(j) for j in js]
        for j, v in zip(js, vals):
            if 0 <= v <= bound:
                pairs.append((v, coeff_at(j)))
        if min(vals) > bound:
            return pairs
        m += 1


# ----------------------------------------------------------------------
# pentagonal family
# ----------------------------------------------------------------------

def pentagonal_number(j: int) -> int:
    """The j-th generalized pentagonal number in ascending order: 0,1,2,5,7,12,15,..."""
    if j < 0:
        raise ValueError("index must be nonnegative")
    if j % 2:
        return (3 * j * j + 4 * j + 1) // 8
    return (3 * j * j + 2 * j) // 8


def pentagonal_terms(bound: int) -> TermList:
    """Signed pentagonal exponents k(3k-1)/2 over k in Z, coefficient (-1)^k."""
    return merge_terms(_bilateral(lambda k: k * (3 * k - 1) // 2, _sign, bound))


def pentagonal_parity_terms(part: str, bound: int) -> TermList:
    """Closed-form odd/even split of the signed pentagonal stream.

    odd part:  sum_j (x^(24j^2+26j+7) - x^(24j^2-10j+1))
    even part: sum_j (x^(24j^2+2j)    - x^(24j^2+14j+2))
    """
    if part == "odd":
        plus = lambda j: 24 * j * j + 26 * j + 7
        minus = lambda j: 24 * j * j - 10 * j + 1
    elif part == "even":
        plus = lambda j: 24 * j * j + 2 * j
        minus = lambda j: 24 * j * j + 14 * j + 2
    else:
        raise ValueError(f"part must be 'odd' or 'even', not {part!r}")
    pairs = _bilateral(plus, lambda j: 1, bound)
    pairs += _bilateral(minus, lambda j: -1, bound)
    return merge_terms(pairs)


# ----------------------------------------------------------------------
# triangular family
# ----------------------------------------------------------------------

def triangular_number(i: int) -> int:
    """i(i+1)/2 for i >= 0."""
    if i < 0:
        raise ValueError("index must be nonnegative")
    return i * (i + 1) // 2


def is_triangular(n: int) -> bool:
    if n < 0:
        return False
    i = (isqrt(8 * n + 1) - 1) // 2
    return i * (i + 1) // 2 == n


def triangular_even(i: int) -> int:
    """The i-th even triangular number, 1-based: 0, 6, 10, 28, 36, ..."""
    if i < 1:
        raise ValueError("index is 1-based")
    k = 2 * i - 1
    return k * (k + (1 if i % 2 == 0 else -1)) // 2


def triangular_odd(i: int) -> int:
    """The i-th odd triangular number, 1-based: 1, 3, 15, 21, 45, ..."""
    if i < 1:
        raise ValueError("index is 1-based")
    k = 2 * i - 1
    return k * (k - (1 if i % 2 == 0 else -1)) // 2


def triangular_terms(bound: int) -> TermList:
    """All triangular numbers <= bound, coefficient +1."""
    pairs = []
    i = 0
    while triangular_number(i) <= bound:
        pairs.append((triangular_number(i), 1))
        i += 1
    return merge_terms(pairs)


def triangular_parity_terms(parity: str, bound: int) -> TermList:
    """Triangular numbers of one parity <= bound via the 1-based closed forms."""
    if parity == "even":
        value_at = triangular_even
    elif parity == "odd":
        value_at = triangular_odd
    else:
        raise ValueError(f"parity must be 'even' or 'odd', not {parity!r}")
    pairs = []
    i = 1
    while value_at(i) <= bound:
        pairs.append((value_at(i), 1))
        i += 1
    return merge_terms(pairs)


def signed_triangular_terms(bound: int) -> TermList:
    """Triangular exponents j(2j-1) over j in Z, coefficient (-1)^j.

    Gives the sign pattern +,-,-,+,+,-,-,... on 0,1,3,6,10,15,21,...
    """
    return merge_terms(_bilateral(lambda j: j * (2 * j - 1), _sign, bound))


# ----------------------------------------------------------------------
# squares and their doubles
# ----------------------------------------------------------------------

def squares_and_doubles_terms(bound: int) -> TermList:
    """{0:+1} plus j^2 and 2j^2 with coefficient (-1)^j for j >= 1.

    No merges collide: j^2 = 2m^2 has no positive solutions.
    """
    pairs = [(0, 1)]
    j = 1
    while j * j <= bound:
        pairs.append((j * j, _sign(j)))
        if 2 * j * j <= bound:
            pairs.append((2 * j * j, _sign(j)))
        j += 1
    return merge_terms(pairs)


def phi_signed_terms(bound: int) -> TermList:
    """{0:+1} plus j^2 with coefficient 2*(-1)^j for j >= 1."""
    pairs = [(0, 1)]
    j = 1
    while j * j <= bound:
        pairs.append((j * j, 2 * _sign(j)))
        j += 1
    return merge_terms(pairs)


# ----------------------------------------------------------------------
# heptagonal / octagonal families
# ----------------------------------------------------------------------

def heptagonal_terms(bound: int) -> TermList:
    """Signed generalized heptagonal exponents j(5j-3)/2 over Z, coefficient (-1)^j."""
    return merge_terms(_bilateral(lambda j: j * (5 * j - 3) // 2, _sign, bound))


def octagonal_terms(bound: int) -> TermList:
    """Signed generalized octagonal exponents j(3j-2) over Z, coefficient (-1)^j."""
    return merge_terms(_bilateral(lambda j: j * (3 * j - 2), _sign, bound))


_HEPT_SHIFT_FORMS = {
    # even/odd terms of 15k^2-4k (r) and 15k^2-14k+3 (s), reindexed over i in Z
    "r_even": lambda i: 60 * i * i - 8 * i,
    "r_odd": lambda i: 60 * i * i + 52 * i + 11,
    "s_even": lambda i: 60 * i * i + 32 * i + 4,
    "s_odd": lambda i: 60 * i * i - 28 * i + 3,
}


def heptagonal_shifts(kind: str, bound: int) -> TermList:
    """Shift values for the halved side of the heptagonal recurrence.

    Streams are unsigned (coefficient +1); the consumer applies the
    +/- pattern, which depends on the parity of the argument.
    """
    form = _HEPT_SHIFT_FORMS.get(kind)
    if form is None:
        raise ValueError(f"kind must be one of {sorted(_HEPT_SHIFT_FORMS)}, not {kind!r}")
    return merge_terms(_bilateral(form, lambda i: 1, bound))
