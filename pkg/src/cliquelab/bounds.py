"""Exact combinatorics and the bound functions checked against measured counts.

Integers are Python ints and ratios are :class:`fractions.Fraction`, so
every inequality below is decided exactly. Floats appear only in the
log-gamma residuals and in :func:`sort_bound_estimate`.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

__all__ = [
    "factorial",
    "binomial",
    "binomial_ratio",
    "argmax_binomial",
    "h",
    "phi",
    "check_h_gt_phi",
    "phi_growth_ratio",
    "lanczos_lgamma",
    "gamma_duplication_residual",
    "sort_lower_bound",
    "sort_bound_estimate",
    "census_exponent",
    "census_formula",
    "census_brute_force",
    "CENSUS_FREE_CELL_LIMIT",
    "OutcomeSpace",
    "outcome_space",
    "BoundRow",
    "BoundReport",
    "bound_report",
]

CENSUS_FREE_CELL_LIMIT = 24
OUTCOME_MATERIALIZE_LIMIT = 64


def _require_nonneg(**values: int) -> None:
    for name, v in values.items():
        if v < 0:
            raise ValueError(f"{name} must be nonnegative, got {v}")


def _require_even(n: int) -> None:
    if n < 2 or n % 2:
        raise ValueError(f"n must be even and at least 2, got {n}")


def factorial(n: int) -> int:
    _require_nonneg(n=n)
    return math.factorial(n)


def binomial(n: int, q: int) -> int:
    """C(n, q) by the multiplicative formula; every partial product is exact."""
    _require_nonneg(n=n, q=q)
    if q > n:
        raise ValueError(f"q={q} exceeds n={n}")
    q = min(q, n - q)
    result = 1
    for i in range(1, q + 1):
        # result * (n - q + i) is divisible by i since it equals i * C(n-q+i, i)
        result = result * (n - q + i) // i
    return result


def binomial_ratio(n: int, q: int) -> Fraction:
    """C(n, q+1) / C(n, q) = (n - q) / (q + 1)."""
    _require_nonneg(n=n, q=q)
    if q >= n:
        raise ValueError(f"q={q} must be below n={n}")
    return Fraction(n - q, q + 1)


def argmax_binomial(n: int) -> int:
    """Smallest q maximizing C(n, q)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return n // 2


def h(n: int) -> int:
    """Worst-case candidate count C(n, n/2) for even n."""
    _require_even(n)
    return binomial(n, n // 2)


def phi(n: int) -> Fraction:
    """2**n / (n + 1) for even n."""
    _require_even(n)
    return Fraction(2**n, n + 1)


def check_h_gt_phi(n: int) -> bool:
    return h(n) > phi(n)


def phi_growth_ratio(n: int) -> Fraction:
    """phi(n) / (2**n / n), which is n / (n + 1).

    Computed from its definition rather than the closed form; defined for
    every n >= 1, not only even n.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    return Fraction(2**n, n + 1) / Fraction(2**n, n)


# Lanczos approximation, g = 7, nine terms.
_LANCZOS_G = 7
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2 * math.pi)


def lanczos_lgamma(z: float) -> float:
    """log|Gamma(z)| via the Lanczos series; reflection handles z < 1/2."""
    if z < 0.5:
        s = math.sin(math.pi * z)
        if s == 0.0:
            raise ValueError(f"Gamma has a pole at {z}")
        return math.log(math.pi / abs(s)) - lanczos_lgamma(1.0 - z)
    z -= 1.0
    x = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        x += _LANCZOS_COEF[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * math.log(t) - t + math.log(x)


def gamma_duplication_residual(z: float) -> float:
    """|log G(z) + log G(z + 1/2) - (1 - 2z) log 2 - log(pi)/2 - log G(2z)|."""
    if not z > 0:
        raise ValueError(f"z must be positive, got {z}")
    lhs = lanczos_lgamma(z) + lanczos_lgamma(z + 0.5)
    rhs = (1.0 - 2.0 * z) * math.log(2.0) + 0.5 * math.log(math.pi) + lanczos_lgamma(2.0 * z)
    return abs(lhs - rhs)


def sort_lower_bound(n: int) -> int:
    """ceil(log2(n!)): the least height h with 2**h >= n!."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return (factorial(n) - 1).bit_length()


def sort_bound_estimate(n: int) -> float:
    """n * log2(n) / 2 - 1, in floating point."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return n * math.log2(n) / 2 - 1


def census_exponent(n: int) -> int:
    """3n^2/8 - n/4, the number of upper-triangle cells left free by a clique on n/2 nodes."""
    _require_even(n)
    return (3 * n * n - 2 * n) // 8


def census_formula(n: int) -> int:
    return 2 ** census_exponent(n)


def _upper_cells(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def census_brute_force(n: int) -> int:
    """Count order-n networks containing the clique on nodes n/2+1..n by enumeration.

    When the whole upper triangle is small enough, every assignment of it is
    enumerated and tested. Otherwise the clique cells are fixed to 1 and the
    remaining free cells are enumerated, still testing each network.
    """
    _require_even(n)
    cells = _upper_cells(n)
    clique_nodes = set(range(n // 2, n))
    clique_bits = [k for k, (i, j) in enumerate(cells) if i in clique_nodes and j in clique_nodes]
    free = len(cells) - len(clique_bits)
    if free > CENSUS_FREE_CELL_LIMIT:
        raise ValueError(
            f"census brute force needs {free} free cells; limit is {CENSUS_FREE_CELL_LIMIT}"
        )
    clique_mask = 0
    for k in clique_bits:
        clique_mask |= 1 << k
    if len(cells) <= CENSUS_FREE_CELL_LIMIT:
        return sum(1 for mask in range(1 << len(cells)) if mask & clique_mask == clique_mask)
    free_bits = [k for k in range(len(cells)) if not clique_mask >> k & 1]
    assignments = np.arange(1 << free, dtype=np.uint64)
    masks = np.full(assignments.shape, clique_mask, dtype=np.uint64)
    for b, k in enumerate(free_bits):
        masks |= ((assignments >> np.uint64(b)) & np.uint64(1)) << np.uint64(k)
    return int(np.count_nonzero(masks & np.uint64(clique_mask) == np.uint64(clique_mask)))


class OutcomeSpace(NamedTuple):
    """2**exponent possible present/absent outcomes; ``value`` is None when too large to materialize."""

    exponent: int
    value: int | None


def outcome_space(n: int, q: int) -> OutcomeSpace:
    e = binomial(n, q)
    return OutcomeSpace(e, 2**e if e <= OUTCOME_MATERIALIZE_LIMIT else None)


# -- reports -------------------------------------------------------------------

CSV_COLUMNS = ("n", "binom_half", "h", "phi_num", "phi_den", "sort_lb", "sort_est", "census_exp")
CHECK_COLUMNS = ("h_gt_phi", "sort_lb_gt_est", "sort_lb_tight")
FLOAT_NOTE = "sort_est is IEEE-754 double; all other numeric fields are exact integers rendered as decimal strings"


@dataclass
class BoundRow:
    n: int
    binom_half: int
    h: int | None
    phi: Fraction | None
    sort_lb: int
    sort_est: float
    census_exp: int | None

    @property
    def even(self) -> bool:
        return self.h is not None

    def checks(self) -> dict[str, str]:
        """Pass/fail per inequality; ``skipped`` where the check does not apply."""
        out = {}
        out["h_gt_phi"] = ("pass" if self.h > self.phi else "fail") if self.even else "skipped"
        if self.n % 2 == 0 and self.n > 2:
            out["sort_lb_gt_est"] = "pass" if self.sort_lb > self.sort_est else "fail"
        else:
            out["sort_lb_gt_est"] = "skipped"
        # 2**h == n! only at n = 1, 2
        out["sort_lb_tight"] = "equality" if 2**self.sort_lb == factorial(self.n) else "strict"
        return out

    def record(self) -> dict[str, str]:
        def s(v):
            return "" if v is None else str(v)

        rec = {
            "n": str(self.n),
            "binom_half": str(self.binom_half),
            "h": s(self.h),
            "phi_num": s(self.phi.numerator if self.phi is not None else None),
            "phi_den": s(self.phi.denominator if self.phi is not None else None),
            "sort_lb": str(self.sort_lb),
            "sort_est": repr(self.sort_est),
            "census_exp": s(self.census_exp),
        }
        rec.update(self.checks())
        return rec


@dataclass
class BoundReport:
    rows: list[BoundRow]

    @property
    def n_range(self) -> tuple[int, int] | None:
        if not self.rows:
            return None
        return self.rows[0].n, self.rows[-1].n

    def records(self) -> list[dict[str, str]]:
        return [r.record() for r in self.rows]

    def to_json(self) -> str:
        doc = {"precision_note": FLOAT_NOTE, "rows": self.records()}
        return json.dumps(doc, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS + CHECK_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(self.records())
        return buf.getvalue()


def bound_report(n_lo: int, n_hi: int) -> BoundReport:
    """One row per n in ``[n_lo, n_hi]``; even-only columns are empty for odd n."""
    rows = []
    for n in range(max(n_lo, 1), n_hi + 1):
        even = n % 2 == 0
        rows.append(
            BoundRow(
                n=n,
                binom_half=binomial(n, argmax_binomial(n)),
                h=h(n) if even else None,
                phi=phi(n) if even else None,
                sort_lb=sort_lower_bound(n),
                sort_est=sort_bound_estimate(n),
                census_exp=census_exponent(n) if even else None,
            )
        )
    return BoundReport(rows)
