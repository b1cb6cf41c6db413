"""Memoized tables for the partition counting functions, each computable two
independent ways (recurrence/convolution vs. generating-function expansion).

Families:
  p    unrestricted partitions
  q    partitions into distinct parts
  qq   partitions into distinct odd parts (parts 1, 3, 5, ...)
  p2   two-color partitions (coefficients of the squared partition series)
  op   overpartitions
  opr  restricted overpartitions (overlined evens once; overlined parts
       congruent to 1 or 7 mod 8, two colors, once per color)
  v    the sequence inverting the squares-and-doubles theta series

Negative-argument lookups return 0.  Module-level caches grow monotonically
and are never invalidated; building a given table is a single-threaded task,
and published tables are immutable tuples, safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import Factor, Series, expand_product, theta_series
from .sequences import (
    is_triangular,
    pentagonal_number,
    squares_and_doubles_terms,
    triangular_number,
)

FAMILIES = ("p", "q", "qq", "p2", "op", "opr", "v")

FAMILY_METHODS = {
    "p": ("recurrence", "gf"),
    "q": ("gf",),
    "qq": ("gf",),
    "p2": ("convolution", "gf"),
    "op": ("gf",),
    "opr": ("gf",),
    "v": ("recurrence", "gf"),
}


@dataclass(frozen=True)
class PartitionTable:
    """Values f(0..max_n) of one counting function, tagged with its method."""

    function_id: str
    method: str
    values: tuple[int, ...]

    @property
    def max_n(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        return self.values[n]


# ----------------------------------------------------------------------
# caches: (family, method) -> list of values 0..len-1, grown in place or
# replaced by a longer rebuild, never shrunk
# ----------------------------------------------------------------------

_cache: dict[tuple[str, str], list[int]] = {}


def _cached(family: str, method: str, max_n: int, build) -> tuple[int, ...]:
    key = (family, method)
    values = _cache.get(key)
    if values is None or len(values) <= max_n:
        values = build(max_n)
        _cache[key] = values
    return tuple(values[: max_n + 1])


def _reset_caches() -> None:
    """Testing hook: drop every memoized table and parity memo."""
    _cache.clear()
    del _parity_pent[1:]
    _parity_mac.clear()
    _parity_mac[0] = 1


def _check_max(max_n: int) -> None:
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")


# ----------------------------------------------------------------------
# p(n)
# ----------------------------------------------------------------------

def _build_p_recurrence(max_n: int) -> list[int]:
    values = _cache.get(("p", "recurrence"), [1])
    while len(values) <= max_n:
        n = len(values)
        total = 0
        j = 1
        while True:
            g1 = n - j * (3 * j - 1) // 2
            if g1 < 0:
                break
            term = values[g1]
            g2 = g1 - j  # n - j(3j+1)/2
            if g2 >= 0:
                term += values[g2]
            total += term if j % 2 else -term
            j += 1
        values.append(total)
    return values


def _build_p_gf(max_n: int) -> list[int]:
    euler = expand_product([Factor(1, 0, -1, 1)], max_n)
    return list(euler.inverse().coeffs)


def p_table(max_n: int, method: str = "recurrence") -> PartitionTable:
    _check_max(max_n)
    if method == "recurrence":
        values = _cached("p", "recurrence", max_n, _build_p_recurrence)
    elif method == "gf":
        values = _cached("p", "gf", max_n, _build_p_gf)
    else:
        raise ValueError(f"unknown p method {method!r}")
    return PartitionTable("p", method, values)


# ----------------------------------------------------------------------
# q(n), qq(n)
# ----------------------------------------------------------------------

def q_table(max_n: int) -> PartitionTable:
    _check_max(max_n)
    values = _cached("q", "gf", max_n,
                     lambda n: list(expand_product([Factor(1, 0, 1, 1)], n).coeffs))
    return PartitionTable("q", "gf", values)


def qq_table(max_n: int) -> PartitionTable:
    _check_max(max_n)
    values = _cached("qq", "gf", max_n,
                     lambda n: list(expand_product([Factor(2, -1, 1, 1)], n).coeffs))
    return PartitionTable("qq", "gf", values)


# ----------------------------------------------------------------------
# p2(n)
# ----------------------------------------------------------------------

def _build_p2_convolution(max_n: int) -> list[int]:
    p = p_table(max_n, "recurrence").values
    return [sum(p[i] * p[n - i] for i in range(n + 1)) for n in range(max_n + 1)]


def _build_p2_gf(max_n: int) -> list[int]:
    ps = Series(p_table(max_n, "gf").values)
    return list((ps * ps).coeffs)


def p2_table(max_n: int, method: str = "convolution") -> PartitionTable:
    _check_max(max_n)
    if method == "convolution":
        values = _cached("p2", "convolution", max_n, _build_p2_convolution)
    elif method == "gf":
        values = _cached("p2", "gf", max_n, _build_p2_gf)
    else:
        raise ValueError(f"unknown p2 method {method!r}")
    return PartitionTable("p2", method, values)


# ----------------------------------------------------------------------
# overpartitions
# ----------------------------------------------------------------------

def overp_table(max_n: int) -> PartitionTable:
    _check_max(max_n)
    factors = [Factor(1, 0, 1, 1), Factor(1, 0, -1, -1)]
    values = _cached("op", "gf", max_n,
                     lambda n: list(expand_product(factors, n).coeffs))
    return PartitionTable("op", "gf", values)


def overp_r_table(max_n: int) -> PartitionTable:
    _check_max(max_n)
    factors = [Factor(2, 0, 1, 1), Factor(8, -1, 1, 2), Factor(8, -7, 1, 2),
               Factor(1, 0, -1, -1)]
    values = _cached("opr", "gf", max_n,
                     lambda n: list(expand_product(factors, n).coeffs))
    return PartitionTable("opr", "gf", values)


# ----------------------------------------------------------------------
# v(n)
# ----------------------------------------------------------------------

def _build_v_recurrence(max_n: int) -> list[int]:
    values = _cache.get(("v", "recurrence"), [1])
    tail = [(e, c) for e, c in squares_and_doubles_terms(max_n) if e > 0]
    while len(values) <= max_n:
        n = len(values)
        s = 0
        for e, c in tail:
            if e > n:
                break
            s += c * values[n - e]
        values.append(-s)
    return values


def _build_v_gf(max_n: int) -> list[int]:
    theta = theta_series(squares_and_doubles_terms(max_n), max_n)
    return list(theta.inverse().coeffs)


def v_table(max_n: int, method: str = "recurrence") -> PartitionTable:
    _check_max(max_n)
    if method == "recurrence":
        values = _cached("v", "recurrence", max_n, _build_v_recurrence)
    elif method == "gf":
        values = _cached("v", "gf", max_n, _build_v_gf)
    else:
        raise ValueError(f"unknown v method {method!r}")
    return PartitionTable("v", method, values)


# ----------------------------------------------------------------------
# parity of p(n)
# ----------------------------------------------------------------------

PARITY_METHODS = ("direct", "thm7", "macmahon")

_parity_pent: list[int] = [1]
_parity_mac: dict[int, int] = {0: 1}


def _parity_direct(n: int) -> int:
    return p_table(n, "recurrence")[n] & 1


def _parity_thm7(n: int) -> int:
    """Solve the mod-2 pentagonal-shift relation for p(n) mod 2.

    The full sum over shifts 4*pi_j is odd exactly on triangular n; the
    j = 0 term is p(n) itself, so p(n) mod 2 follows from earlier parities.
    """
    while len(_parity_pent) <= n:
        m = len(_parity_pent)
        bit = 1 if is_triangular(m) else 0
        j = 1
        while True:
            shift = 4 * pentagonal_number(j)
            if shift > m:
                break
            bit ^= _parity_pent[m - shift]
            j += 1
        _parity_pent.append(bit)
    return _parity_pent[n]


def _parity_macmahon(n: int) -> int:
    """p(n) mod 2 via the quarter-argument triangular congruence.

    p(n) = sum over triangular t <= n with t = n (mod 4) of p((n-t)/4),
    mod 2; arguments shrink by a factor of four, memoized.
    """
    known = _parity_mac.get(n)
    if known is not None:
        return known
    bit = 0
    i = 0
    while True:
        t = triangular_number(i)
        if t > n:
            break
        if (n - t) % 4 == 0:
            bit ^= _parity_macmahon((n - t) // 4)
        i += 1
    _parity_mac[n] = bit
    return bit


def parity_p(n: int, method: str = "macmahon") -> int:
    """p(n) mod 2 by the requested method."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if method == "direct":
        return _parity_direct(n)
    if method == "thm7":
        return _parity_thm7(n)
    if method == "macmahon":
        return _parity_macmahon(n)
    raise ValueError(f"unknown parity method {method!r}")


# ----------------------------------------------------------------------
# family dispatch (used by the command-line surface)
# ----------------------------------------------------------------------

def build_table(family: str, max_n: int, method: str | None = None) -> PartitionTable:
    """Build a family table, defaulting to the family's first listed method."""
    methods = FAMILY_METHODS.get(family)
    if methods is None:
        raise ValueError(f"unknown family {family!r}")
    if method is None:
        method = methods[0]
    if method not in methods:
        raise ValueError(f"family {family!r} has no method {method!r}")
    if family == "p":
        return p_table(max_n, method)
    if family == "q":
        return q_table(max_n)
    if family == "qq":
        return qq_table(max_n)
    if family == "p2":
        return p2_table(max_n, method)
    if family == "op":
        return overp_table(max_n)
    if family == "opr":
        return overp_r_table(max_n)
    return v_table(max_n, method)
