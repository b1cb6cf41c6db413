"""Registry of named identity and recurrence checks.

Each check certifies one identity numerically: a recurrence pointwise for all
n <= bound, or a series identity coefficientwise at order bound, reporting
the smallest counterexample on failure.  Recurrence checks consume tables
built by the generating-function route while the shift streams come from
closed forms, so a pass certifies genuine cross-method agreement rather than
self-consistency.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import counting
from .series import Factor, Series, expand_product, phi_series, psi_series, theta_series
from .sequences import (
    heptagonal_shifts,
    heptagonal_terms,
    is_triangular,
    octagonal_terms,
    pentagonal_number,
    pentagonal_parity_terms,
    pentagonal_terms,
    phi_signed_terms,
    signed_triangular_terms,
    squares_and_doubles_terms,
    triangular_number,
    triangular_parity_terms,
)

RECURRENCE_BOUND = 2000
PRODUCT_BOUND = 500


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check: pass up to `bound`, or the first
    counterexample with both side values (exact integers)."""

    name: str
    bound: int
    passed: bool
    failed_at: int | None = None
    lhs: int | None = None
    rhs: int | None = None

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        record: dict = {"name": self.name, "bound": self.bound, "status": self.status}
        if not self.passed:
            record["n"] = self.failed_at
            record["lhs"] = str(self.lhs)
            record["rhs"] = str(self.rhs)
        return record

    def describe(self) -> str:
        if self.passed:
            return f"{self.name}: pass (n <= {self.bound})"
        return (f"{self.name}: FAIL at n={self.failed_at}: "
                f"lhs={self.lhs} rhs={self.rhs}")


@dataclass(frozen=True)
class CheckSpec:
    name: str
    description: str
    bound_default: int
    evaluator: Callable[[int, "TableSet"], CheckResult]


CHECKS: dict[str, CheckSpec] = {}


def _register(name: str, description: str, bound_default: int):
    def deco(fn):
        CHECKS[name] = CheckSpec(name, description, bound_default, fn)
        return fn
    return deco


# ----------------------------------------------------------------------
# shared tables (lazy, overridable for fault injection)
# ----------------------------------------------------------------------

_BUILDERS = {
    "p": lambda n: counting.p_table(n, method="gf").values,
    "q": lambda n: counting.q_table(n).values,
    "qq": lambda n: counting.qq_table(n).values,
    "p2": lambda n: counting.p2_table(n, method="gf").values,
    "op": lambda n: counting.overp_table(n).values,
    "opr": lambda n: counting.overp_r_table(n).values,
    "v": lambda n: counting.v_table(n, method="recurrence").values,
}


class TableSet:
    """Lazily built bundle of counting tables shared by checks.

    ``with_mutation`` returns a copy with one entry perturbed; mutated
    families are frozen (never rebuilt), so fault-injection tests can count
    on the perturbation surviving whatever bound a check requests.
    """

    def __init__(self) -> None:
        self._tables: dict[str, tuple[int, ...]] = {}
        self._frozen: frozenset[str] = frozenset()

    def get(self, family: str, upto: int) -> tuple[int, ...]:
        values = self._tables.get(family)
        if family in self._frozen:
            assert values is not None
            if len(values) <= upto:
                raise ValueError(
                    f"mutated {family} table of size {len(values)} is too short "
                    f"for bound {upto}")
            return values
        if values is None or len(values) <= upto:
            values = _BUILDERS[family](upto)
            self._tables[family] = values
        return values

    def with_mutation(self, family: str, index: int, delta: int = 1,
                      upto: int | None = None) -> "TableSet":
        size = max(index, upto if upto is not None else 0)
        base = list(self.get(family, size))
        base[index] += delta
        clone = TableSet()
        clone._tables = dict(self._tables)
        clone._tables[family] = tuple(base)
        clone._frozen = self._frozen | {family}
        return clone


# ----------------------------------------------------------------------
# helpers
# ----------------------------------------------------------------------

def _stream_sum(table: tuple[int, ...], terms: list[tuple[int, int]], n: int) -> int:
    """sum of coeff * table[n - exponent] over the stream, exponents <= n."""
    s = 0
    for e, c in terms:
        if e > n:
            break
        t = table[n - e]
        if c == 1:
            s += t
        elif c == -1:
            s -= t
        else:
            s += c * t
    return s


def _pointwise(name: str, bound: int, lhs_at, rhs_at) -> CheckResult:
    for n in range(bound + 1):
        lhs = lhs_at(n)
        rhs = rhs_at(n)
        if lhs != rhs:
            return CheckResult(name, bound, False, n, lhs, rhs)
    return CheckResult(name, bound, True)


def _series_equal(name: str, bound: int,
                  pairs: list[tuple[Series, Series]]) -> CheckResult:
    # index-first scan so a failure reports the globally smallest index
    # even when the check bundles several sub-identities
    columns = [(lhs.coeffs, rhs.coeffs) for lhs, rhs in pairs]
    limit = min(min(len(l), len(r)) for l, r in columns)
    for i in range(limit):
        for l, r in columns:
            if l[i] != r[i]:
                return CheckResult(name, bound, False, i, l[i], r[i])
    return CheckResult(name, bound, True)


# ----------------------------------------------------------------------
# recurrence checks
# ----------------------------------------------------------------------

@_register("euler",
           "alternating pentagonal-shift sum of p(n) is 1 at n=0 and 0 elsewhere",
           RECURRENCE_BOUND)
def check_euler(bound: int, tables: TableSet) -> CheckResult:
    p = tables.get("p", bound)
    terms = pentagonal_terms(bound)
    return _pointwise("euler", bound,
                      lambda n: _stream_sum(p, terms, n),
                      lambda n: 1 if n == 0 else 0)


@_register("ewell",
           "signed triangular-shift sum of p(n) equals q(n/2) for even n, 0 for odd n",
           RECURRENCE_BOUND)
def check_ewell(bound: int, tables: TableSet) -> CheckResult:
    p = tables.get("p", bound)
    q = tables.get("q", bound // 2)
    terms = signed_triangular_terms(bound)
    return _pointwise("ewell", bound,
                      lambda n: _stream_sum(p, terms, n),
                      lambda n: q[n // 2] if n % 2 == 0 else 0)


@_register("thm1",
           "squares-and-doubles shift sum of p(n) equals qq(n) for even n, 0 for odd n",
           RECURRENCE_BOUND)
def check_thm1(bound: int, tables: TableSet) -> CheckResult:
    p = tables.get("p", bound)
    qq = tables.get("qq", bound)
    terms = squares_and_doubles_terms(bound)
    return _pointwise("thm1", bound,
                      lambda n: _stream_sum(p, terms, n),
                      lambda n: qq[n] if n % 2 == 0 else 0)


@_register("thm2",
           "doubled signed-square shift sum of p(n) equals (-1)^n qq(n)",
           RECURRENCE_BOUND)
def check_thm2(bound: int, tables: TableSet) -> CheckResult:
    p = tables.get("p", bound)
    qq = tables.get("qq", bound)
    terms = phi_signed_terms(bound)
    return _pointwise("thm2", bound,
                      lambda n: _stream_sum(p, terms, n),
                      lambda n: -qq[n] if n % 2 else qq[n])


@_register("thm3",
           "heptagonal-shift sum of p(n) equals half-argument p sums over the "
           "r/s shift families; resolved signs: even n takes +r_even -s_even, "
           "odd n takes -r_odd +s_odd (certified against the quintuple product)",
           RECURRENCE_BOUND)
def check_thm3(bound: int, tables: TableSet) -> CheckResult:
    p = tables.get("p", bound)
    lhs_terms = heptagonal_terms(bound)
    shifts = {kind: [e for e, _ in heptagonal_shifts(kind, bound)]
              for kind in ("r_even", "r_odd", "s_even", "s_odd")}
    for kind, values in shifts.items():
        want = 0 if kind.endswith("even") else 1
        assert all(v % 2 == want for v in values), f"{kind} family parity broken"

    def rhs_at(n: int) -> int:
        if n % 2 == 0:
            plus, minus = shifts["r_even"], shifts["s_even"]
        else:
            plus, minus = shifts["s_odd"], shifts["r_odd"]
        total = 0
        for e in plus:
            if e > n:
                break
            total += p[(n - e) // 2]
        for e in minus:
            if e > n:
                break
            total -= p[(n - e) // 2]
        return total

    return _pointwise("thm3", bound,
                      lambda n: _stream_sum(p, lhs_terms, n), rhs_at)


@_register("thm4",
           "octagonal-shift sum of p(n) equals half-argument p sums over "
           "tripled parity-matched triangular shifts",
           RECURRENCE_BOUND)
def check_thm4(bound: int, tables: TableSet) -> CheckResult:
    p = tables.get("p", bound)
    lhs_terms = octagonal_terms(bound)
    tri = {parity: [3 * t for t, _ in triangular_parity_terms(parity, bound // 3)]
           for parity in ("even", "odd")}

    def rhs_at(n: int) -> int:
        total = 0
        for e in tri["even" if n % 2 == 0 else "odd"]:
            if e > n:
                break
            total += p[(n - e) // 2]
        return total

    return _pointwise("thm4", bound,
                      lambda n: _stream_sum(p, lhs_terms, n), rhs_at)


@_register("thm5",
           "p(n) equals half-argument two-color sums over parity-matched "
           "triangular shifts; includes the psi splitting identity "
           "P(x) +/- P(-x) = P(x^2)^2 (psi(x) +/- psi(-x))",
           RECURRENCE_BOUND)
def check_thm5(bound: int, tables: TableSet) -> CheckResult:
    p = tables.get("p", bound)
    p2 = tables.get("p2", bound // 2)
    tri = {parity: [t for t, _ in triangular_parity_terms(parity, bound)]
           for parity in ("even", "odd")}

    def rhs_at(n: int) -> int:
        total = 0
        for t in tri["even" if n % 2 == 0 else "odd"]:
            if t > n:
                break
            total += p2[(n - t) // 2]
        return total

    result = _pointwise("thm5", bound, lambda n: p[n], rhs_at)
    if not result.passed:
        return result
    return _series_equal("thm5", bound, _lemma1_pairs(bound, tables))


@_register("thm6",
           "v(n) interleaves overpartition and restricted-overpartition "
           "counts: v(2m) = op(m), v(2m+1) = opr(m); includes the even/odd "
           "product forms of the v series",
           RECURRENCE_BOUND)
def check_thm6(bound: int, tables: TableSet) -> CheckResult:
    v = tables.get("v", bound)
    op = tables.get("op", bound // 2)
    opr = tables.get("opr", max(0, (bound - 1) // 2))

    result = _pointwise(
        "thm6", bound,
        lambda n: v[n],
        lambda n: op[n // 2] if n % 2 == 0 else opr[(n - 1) // 2])
    if not result.passed:
        return result

    vs = Series(v[: bound + 1])
    even_rhs = expand_product(
        [Factor(2, 0, 1, 1), Factor(2, 0, -1, -1)], bound)
    odd_rhs = expand_product(
        [Factor(4, 0, 1, 1), Factor(16, -2, 1, 2), Factor(16, -14, 1, 2),
         Factor(2, 0, -1, -1)], bound).shifted(1)
    return _series_equal("thm6", bound,
                         [(vs.even_part(), even_rhs), (vs.odd_part(), odd_rhs)])


@_register("thm7",
           "sum of p over quadrupled pentagonal shifts is odd exactly at "
           "triangular n",
           RECURRENCE_BOUND)
def check_thm7(bound: int, tables: TableSet) -> CheckResult:
    p = tables.get("p", bound)
    shifts = []
    j = 0
    while 4 * pentagonal_number(j) <= bound:
        shifts.append(4 * pentagonal_number(j))
        j += 1

    def lhs_at(n: int) -> int:
        bit = 0
        for s in shifts:
            if s > n:
                break
            bit ^= p[n - s] & 1
        return bit

    return _pointwise("thm7", bound, lhs_at,
                      lambda n: 1 if is_triangular(n) else 0)


@_register("macmahon",
           "quarter-argument triangular sum equals qq(n) exactly and hence "
           "gives p(n) mod 2",
           RECURRENCE_BOUND)
def check_macmahon(bound: int, tables: TableSet) -> CheckResult:
    p = tables.get("p", bound)
    qq = tables.get("qq", bound)
    tri = []
    i = 0
    while triangular_number(i) <= bound:
        tri.append(triangular_number(i))
        i += 1

    for n in range(bound + 1):
        total = 0
        for t in tri:
            if t > n:
                break
            if (n - t) % 4 == 0:
                total += p[(n - t) // 4]
        if total != qq[n]:
            return CheckResult("macmahon", bound, False, n, total, qq[n])
        if (p[n] - total) % 2:
            return CheckResult("macmahon", bound, False, n, p[n] % 2, total % 2)
    return CheckResult("macmahon", bound, True)


# ----------------------------------------------------------------------
# series identity checks
# ----------------------------------------------------------------------

@_register("pentagonal",
           "signed pentagonal theta series equals the expansion of prod (1-x^k)",
           PRODUCT_BOUND)
def check_pentagonal(bound: int, tables: TableSet) -> CheckResult:
    lhs = theta_series(pentagonal_terms(bound), bound)
    rhs = expand_product([Factor(1, 0, -1, 1)], bound)
    return _series_equal("pentagonal", bound, [(lhs, rhs)])


@_register("phi_product",
           "theta form of phi equals prod (1+x^(2k-1))^2 (1-x^(2k))",
           PRODUCT_BOUND)
def check_phi_product(bound: int, tables: TableSet) -> CheckResult:
    lhs = phi_series(bound)
    rhs = expand_product([Factor(2, -1, 1, 2), Factor(2, 0, -1, 1)], bound)
    return _series_equal("phi_product", bound, [(lhs, rhs)])


@_register("psi_product",
           "theta form of psi equals prod (1-x^(2k)) / (1-x^(2k-1))",
           PRODUCT_BOUND)
def check_psi_product(bound: int, tables: TableSet) -> CheckResult:
    lhs = psi_series(bound)
    rhs = expand_product([Factor(2, 0, -1, 1), Factor(2, -1, -1, -1)], bound)
    return _series_equal("psi_product", bound, [(lhs, rhs)])


@_register("psi_cubed",
           "psi(x^3) equals prod (1-x^(12k))(1+x^(12k-9))(1+x^(12k-3))",
           PRODUCT_BOUND)
def check_psi_cubed(bound: int, tables: TableSet) -> CheckResult:
    lhs = psi_series(bound).subs_power(3)
    rhs = expand_product(
        [Factor(12, 0, -1, 1), Factor(12, -9, 1, 1), Factor(12, -3, 1, 1)], bound)
    return _series_equal("psi_cubed", bound, [(lhs, rhs)])


@_register("jacobi_hept",
           "heptagonal theta series equals prod (1-x^(5k))(1-x^(5k-4))(1-x^(5k-1))",
           PRODUCT_BOUND)
def check_jacobi_hept(bound: int, tables: TableSet) -> CheckResult:
    lhs = theta_series(heptagonal_terms(bound), bound)
    rhs = expand_product(
        [Factor(5, 0, -1, 1), Factor(5, -4, -1, 1), Factor(5, -1, -1, 1)], bound)
    return _series_equal("jacobi_hept", bound, [(lhs, rhs)])


@_register("jacobi_oct",
           "octagonal theta series equals prod (1-x^(6k))(1-x^(6k-5))(1-x^(6k-1))",
           PRODUCT_BOUND)
def check_jacobi_oct(bound: int, tables: TableSet) -> CheckResult:
    lhs = theta_series(octagonal_terms(bound), bound)
    rhs = expand_product(
        [Factor(6, 0, -1, 1), Factor(6, -5, -1, 1), Factor(6, -1, -1, 1)], bound)
    return _series_equal("jacobi_oct", bound, [(lhs, rhs)])


@_register("quintuple_hept",
           "signed union of the r/s shift families (+r_even, -r_odd, -s_even, "
           "+s_odd) equals the five-factor quintuple product "
           "(1-x^(10k))(1-x^(20k-16))(1-x^(20k-4))(1+x^(10k-7))(1+x^(10k-3))",
           PRODUCT_BOUND)
def check_quintuple_hept(bound: int, tables: TableSet) -> CheckResult:
    signs = {"r_even": 1, "r_odd": -1, "s_even": -1, "s_odd": 1}
    terms = []
    for kind, sign in signs.items():
        terms.extend((e, sign * c) for e, c in heptagonal_shifts(kind, bound))
    lhs = theta_series(terms, bound)
    rhs = expand_product(
        [Factor(10, 0, -1, 1), Factor(20, -16, -1, 1), Factor(20, -4, -1, 1),
         Factor(10, -7, 1, 1), Factor(10, -3, 1, 1)], bound)
    return _series_equal("quintuple_hept", bound, [(lhs, rhs)])


@_register("quintuple_odd",
           "odd-part pentagonal stream equals -x * prod (1-x^(16k-6))"
           "(1-x^(16k-10))(1-x^(16k))(1-x^(32k-4))(1-x^(32k-28))",
           PRODUCT_BOUND)
def check_quintuple_odd(bound: int, tables: TableSet) -> CheckResult:
    lhs = theta_series(pentagonal_parity_terms("odd", bound), bound)
    rhs = -expand_product(
        [Factor(16, -6, -1, 1), Factor(16, -10, -1, 1), Factor(16, 0, -1, 1),
         Factor(32, -4, -1, 1), Factor(32, -28, -1, 1)], bound).shifted(1)
    return _series_equal("quintuple_odd", bound, [(lhs, rhs)])


@_register("quintuple_even",
           "even-part pentagonal stream equals prod (1-x^(16k-2))(1-x^(16k-14))"
           "(1-x^(16k))(1-x^(32k-12))(1-x^(32k-20))",
           PRODUCT_BOUND)
def check_quintuple_even(bound: int, tables: TableSet) -> CheckResult:
    lhs = theta_series(pentagonal_parity_terms("even", bound), bound)
    rhs = expand_product(
        [Factor(16, -2, -1, 1), Factor(16, -14, -1, 1), Factor(16, 0, -1, 1),
         Factor(32, -12, -1, 1), Factor(32, -20, -1, 1)], bound)
    return _series_equal("quintuple_even", bound, [(lhs, rhs)])


def _lemma1_pairs(bound: int, tables: TableSet) -> list[tuple[Series, Series]]:
    ps = Series(tables.get("p", bound)[: bound + 1])
    ps_neg = ps.subs_neg()
    p_sq = ps.subs_power(2)
    p_sq2 = p_sq * p_sq
    psi = psi_series(bound)
    psi_neg = psi.subs_neg()
    return [
        (ps + ps_neg, p_sq2 * (psi + psi_neg)),
        (ps - ps_neg, p_sq2 * (psi - psi_neg)),
    ]


@_register("lemma1",
           "P(x) +/- P(-x) = P(x^2)^2 (psi(x) +/- psi(-x)), both signs",
           PRODUCT_BOUND)
def check_lemma1(bound: int, tables: TableSet) -> CheckResult:
    return _series_equal("lemma1", bound, _lemma1_pairs(bound, tables))


@_register("lemma2",
           "odd and even parts of prod (1-x^k) equal the closed-form "
           "pentagonal parity streams",
           PRODUCT_BOUND)
def check_lemma2(bound: int, tables: TableSet) -> CheckResult:
    euler = expand_product([Factor(1, 0, -1, 1)], bound)
    return _series_equal("lemma2", bound, [
        (euler.odd_part(), theta_series(pentagonal_parity_terms("odd", bound), bound)),
        (euler.even_part(), theta_series(pentagonal_parity_terms("even", bound), bound)),
    ])


# ----------------------------------------------------------------------
# running
# ----------------------------------------------------------------------

def check_names() -> list[str]:
    return list(CHECKS)


def run_check(name: str, bound: int | None = None,
              tables: TableSet | None = None) -> CheckResult:
    spec = CHECKS.get(name)
    if spec is None:
        raise KeyError(f"unknown check {name!r}")
    if bound is None:
        bound = spec.bound_default
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if tables is None:
        tables = TableSet()
    return spec.evaluator(bound, tables)


def run_all(bound: int | None = None,
            tables: TableSet | None = None) -> list[CheckResult]:
    """Run every registered check, each at `bound` or its own default."""
    if tables is None:
        tables = TableSet()
    return [run_check(name, bound, tables) for name in CHECKS]
