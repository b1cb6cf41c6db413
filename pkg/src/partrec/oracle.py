"""Brute-force enumeration of constrained partition families.

Ground truth for small n: plain backtracking, largest part first, no
memoization anywhere, deliberately independent of the table builders in
``counting`` so an agreement between the two actually certifies something.

Canonical forms returned by :func:`enumerate_partitions`:

* plain kinds (unrestricted, distinct, distinct_odd): tuples of parts in
  weakly decreasing order, listed in descending lexicographic order;
* marked kinds: tuples of (part, marker) pairs sorted by descending part,
  marker as tiebreak ("" before "a"/"b", "o", "o1"/"o2"), objects listed in
  descending lexicographic order.  Markers: two_color uses "a"/"b";
  overpartition uses "" / "o"; restricted_overpartition uses "" (ordinary),
  "o" (overlined even), "o1"/"o2" (the two overline colors available to
  parts congruent to 1 or 7 mod 8).
"""

from __future__ import annotations

from enum import Enum
from typing import Iterator

COUNT_LIMIT = 60
ENUMERATE_LIMIT = 30


class ConstraintKind(str, Enum):
    UNRESTRICTED = "unrestricted"
    DISTINCT = "distinct"
    DISTINCT_ODD = "distinct_odd"
    TWO_COLOR = "two_color"
    OVERPARTITION = "overpartition"
    RESTRICTED_OVERPARTITION = "restricted_overpartition"


def _check_n(n: int, limit: int) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > limit:
        raise ValueError(f"oracle bound exceeded: n={n} > {limit}")


# ----------------------------------------------------------------------
# counting (pure backtracking, no memo)
# ----------------------------------------------------------------------

def _count_plain(n: int, max_part: int) -> int:
    if n == 0:
        return 1
    total = 0
    for part in range(min(n, max_part), 0, -1):
        total += _count_plain(n - part, part)
    return total


def _count_distinct_vals(n: int, vals: tuple[int, ...], start: int = 0) -> int:
    """Partitions of n into distinct parts drawn from vals (descending)."""
    if n == 0:
        return 1
    total = 0
    for i in range(start, len(vals)):
        if vals[i] <= n:
            total += _count_distinct_vals(n - vals[i], vals, i + 1)
    return total


def _descending(n: int, keep) -> tuple[int, ...]:
    return tuple(v for v in range(n, 0, -1) if keep(v))


def _plain_counts(n: int) -> list[int]:
    return [_count_plain(i, i) for i in range(n + 1)]


def _distinct_counts_from(n: int, vals: tuple[int, ...]) -> list[int]:
    return [_count_distinct_vals(i, vals) for i in range(n + 1)]


def count_partitions(n: int, kind: ConstraintKind | str) -> int:
    """Exact count of the requested family at n, for n <= COUNT_LIMIT."""
    kind = ConstraintKind(kind)
    _check_n(n, COUNT_LIMIT)
    if kind is ConstraintKind.UNRESTRICTED:
        return _count_plain(n, n)
    if kind is ConstraintKind.DISTINCT:
        return _count_distinct_vals(n, _descending(n, lambda v: True))
    if kind is ConstraintKind.DISTINCT_ODD:
        return _count_distinct_vals(n, _descending(n, lambda v: v % 2 == 1))
    if kind is ConstraintKind.TWO_COLOR:
        counts = _plain_counts(n)
        return sum(counts[i] * counts[n - i] for i in range(n + 1))
    if kind is ConstraintKind.OVERPARTITION:
        plain = _plain_counts(n)
        distinct = _distinct_counts_from(n, _descending(n, lambda v: True))
        return sum(plain[i] * distinct[n - i] for i in range(n + 1))
    # restricted overpartition: ordinary parts free; overlined evens at most
    # once each; overlined parts = 1, 7 (mod 8) at most once per each of two
    # distinguishable colors; no other overlines.
    plain = _plain_counts(n)
    evens = _distinct_counts_from(n, _descending(n, lambda v: v % 2 == 0))
    mod8 = _distinct_counts_from(n, _descending(n, lambda v: v % 8 in (1, 7)))
    total = 0
    for a in range(n + 1):
        if not evens[a]:
            continue
        for b in range(n + 1 - a):
            if not mod8[b]:
                continue
            for c in range(n + 1 - a - b):
                if mod8[c]:
                    total += evens[a] * mod8[b] * mod8[c] * plain[n - a - b - c]
    return total


# ----------------------------------------------------------------------
# enumeration
# ----------------------------------------------------------------------

def _gen_plain(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for part in range(min(n, max_part), 0, -1):
        for rest in _gen_plain(n - part, part):
            yield (part,) + rest


def _gen_distinct_vals(n: int, vals: tuple[int, ...], start: int = 0) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for i in range(start, len(vals)):
        if vals[i] <= n:
            for rest in _gen_distinct_vals(n - vals[i], vals, i + 1):
                yield (vals[i],) + rest


_MARK_RANK = {"": 0, "a": 1, "b": 2, "o": 1, "o1": 1, "o2": 2}


def _tagged(*groups: tuple[tuple[int, ...], str]) -> tuple[tuple[int, str], ...]:
    parts = [(v, mark) for vals, mark in groups for v in vals]
    parts.sort(key=lambda p: (-p[0], _MARK_RANK[p[1]]))
    return tuple(parts)


def enumerate_partitions(n: int, kind: ConstraintKind | str) -> list:
    """Explicit list of the family's objects at n, for n <= ENUMERATE_LIMIT."""
    kind = ConstraintKind(kind)
    _check_n(n, ENUMERATE_LIMIT)
    if kind is ConstraintKind.UNRESTRICTED:
        return list(_gen_plain(n, n))
    if kind is ConstraintKind.DISTINCT:
        return list(_gen_distinct_vals(n, _descending(n, lambda v: True)))
    if kind is ConstraintKind.DISTINCT_ODD:
        return list(_gen_distinct_vals(n, _descending(n, lambda v: v % 2 == 1)))

    out = []
    if kind is ConstraintKind.TWO_COLOR:
        for i in range(n + 1):
            for mu in _gen_plain(i, i):
                for nu in _gen_plain(n - i, n - i):
                    out.append(_tagged((mu, "a"), (nu, "b")))
    elif kind is ConstraintKind.OVERPARTITION:
        dvals = _descending(n, lambda v: True)
        for i in range(n + 1):
            for mu in _gen_plain(i, i):
                for nu in _gen_distinct_vals(n - i, dvals):
                    out.append(_tagged((mu, ""), (nu, "o")))
    else:
        evals = _descending(n, lambda v: v % 2 == 0)
        mvals = _descending(n, lambda v: v % 8 in (1, 7))
        for a in range(n + 1):
            for ev in _gen_distinct_vals(a, evals):
                for b in range(n + 1 - a):
                    for ca in _gen_distinct_vals(b, mvals):
                        for c in range(n + 1 - a - b):
                            for cb in _gen_distinct_vals(c, mvals):
                                rem = n - a - b - c
                                for mu in _gen_plain(rem, rem):
                                    out.append(_tagged((mu, ""), (ev, "o"),
                                                       (ca, "o1"), (cb, "o2")))
    out.sort(reverse=True)
    return out
