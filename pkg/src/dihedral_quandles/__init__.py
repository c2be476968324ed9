"""Quandle coloring invariants of link diagrams over conjugation quandles of dihedral groups."""

from .algebra import (
    DihedralGroup,
    FiniteQuandle,
    GroupElement,
    cayley_table,
    conjugation_quandle,
    verify_quandle_axioms,
)
from .diagram import LinkDiagram, allen_swenberg, builtin, parse_diagram, serialize_diagram
from .invariants import (
    CountingPolynomial,
    Verdict,
    causality_report,
    counting_invariant,
    distinguishes,
    enhanced_polynomial,
)
from .solver import enumerate_bruteforce

__version__ = "0.1.0"

__all__ = [
    "CountingPolynomial",
    "DihedralGroup",
    "FiniteQuandle",
    "GroupElement",
    "LinkDiagram",
    "Verdict",
    "allen_swenberg",
    "builtin",
    "causality_report",
    "cayley_table",
    "conjugation_quandle",
    "counting_invariant",
    "distinguishes",
    "enhanced_polynomial",
    "enumerate_bruteforce",
    "parse_diagram",
    "serialize_diagram",
    "verify_quandle_axioms",
]
