"""Counting invariant, enhanced counting polynomial, and pairwise comparison."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import solver
from .algebra import DihedralGroup, FiniteQuandle, conjugation_quandle
from .diagram import LinkDiagram, builtin
from .formats import render_polynomial

__all__ = [
    "CountingPolynomial",
    "InvariantReport",
    "Verdict",
    "ReportRow",
    "counting_invariant",
    "enhanced_polynomial",
    "invariant_report",
    "distinguishes",
    "compare_reports",
    "causality_report",
]


class CountingPolynomial:
    """Sparse integer polynomial in q; exponent = image size, coefficient = number of colorings."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Mapping[int, int] | None = None):
        coeffs = {}
        for exp, c in (coefficients or {}).items():
            if not isinstance(exp, int) or not isinstance(c, int):
                raise TypeError("exponents and coefficients must be integers")
            if exp < 1 or c < 0:
                raise ValueError(f"invalid term {c}q^{exp}")
            if c:
                coeffs[exp] = c
        self._coeffs = dict(sorted(coeffs.items(), reverse=True))

    @classmethod
    def from_colorings(cls, colorings: Iterable[Sequence[int]]) -> CountingPolynomial:
        return cls(solver.count_by_image_size(colorings))

    @property
    def coefficients(self) -> dict[int, int]:
        """Exponent -> coefficient, highest exponent first."""
        return dict(self._coeffs)

    def __getitem__(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def __call__(self, q: int) -> int:
        return sum(c * q**e for e, c in self._coeffs.items())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CountingPolynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._coeffs.items()))

    def __str__(self) -> str:
        return render_polynomial(self._coeffs)

    def __repr__(self) -> str:
        return f"CountingPolynomial({self._coeffs!r})"


@dataclass(frozen=True)
class InvariantReport:
    link: str
    quandle: str
    total: int
    polynomial: CountingPolynomial
    arcs: int = 0
    crossings: int = 0

    def __post_init__(self) -> None:
        if self.polynomial(1) != self.total:
            raise ValueError("total must equal the polynomial evaluated at q = 1")


class Verdict(str, enum.Enum):
    BY_COUNT = "BY_COUNT"
    BY_POLYNOMIAL = "BY_POLYNOMIAL"
    INDISTINGUISHABLE = "INDISTINGUISHABLE"

    def __str__(self) -> str:
        return self.value


def counting_invariant(d: LinkDiagram, q: FiniteQuandle, **kw) -> int:
    return len(solver.enumerate(d, q, **kw))


def enhanced_polynomial(d: LinkDiagram, q: FiniteQuandle, **kw) -> CountingPolynomial:
    return CountingPolynomial.from_colorings(solver.enumerate(d, q, **kw))


def invariant_report(
    d: LinkDiagram, q: FiniteQuandle, oracle: bool = False, budget: int | None = None, **kw
) -> InvariantReport:
    """Total and polynomial from one enumeration; ``oracle`` switches to brute force."""
    if oracle:
        cols = solver.enumerate_bruteforce(d, q, budget if budget is not None else solver.DEFAULT_BUDGET)
    else:
        cols = solver.enumerate(d, q, **kw)
    poly = CountingPolynomial.from_colorings(cols)
    return InvariantReport(d.name, q.name, len(cols), poly, d.arc_count, d.crossing_count)


def compare_reports(a: InvariantReport, b: InvariantReport) -> Verdict:
    if a.total != b.total:
        return Verdict.BY_COUNT
    if a.polynomial != b.polynomial:
        return Verdict.BY_POLYNOMIAL
    return Verdict.INDISTINGUISHABLE


def distinguishes(d1: LinkDiagram, d2: LinkDiagram, q: FiniteQuandle, **kw) -> Verdict:
    return compare_reports(invariant_report(d1, q, **kw), invariant_report(d2, q, **kw))


@dataclass(frozen=True)
class ReportRow:
    group: str
    link: InvariantReport
    reference: InvariantReport
    verdict: Verdict


def causality_report(
    d: LinkDiagram,
    groups: Sequence[DihedralGroup],
    reference: LinkDiagram | None = None,
    **kw,
) -> list[ReportRow]:
    """One row per group comparing ``d`` with the connected sum of two Hopf links."""
    ref = reference if reference is not None else builtin("hopf_sum")
    rows = []
    for g in groups:
        q = conjugation_quandle(g)
        a = invariant_report(d, q, **kw)
        b = invariant_report(ref, q, **kw)
        rows.append(ReportRow(g.name, a, b, compare_reports(a, b)))
    return rows
