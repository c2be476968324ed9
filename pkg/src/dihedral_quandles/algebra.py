"""Dihedral group arithmetic and finite quandles stored as operation tables.

Elements of D_n are written ``f^s r^k`` with ``s in {0, 1}`` and ``0 <= k < n``,
subject to ``r f = f r^-1``.  The flat integer code of ``f^s r^k`` is
``s*n + k``, so code 0 is the identity, codes ``1..n-1`` are rotations and
codes ``n..2n-1`` are reflections.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Union

__all__ = [
    "DihedralGroup",
    "GroupElement",
    "FiniteQuandle",
    "Violation",
    "QuandleTableError",
    "cayley_table",
    "conjugation_quandle",
    "conjugation_quandle_from_table",
    "verify_quandle_axioms",
    "conjugacy_classes",
    "parse_quandle_table",
    "serialize_quandle",
]


class QuandleTableError(ValueError):
    """A quandle or group table is malformed (shape, entry range, non-bijective column)."""


@dataclass(frozen=True, order=True)
class GroupElement:
    reflection_bit: int
    rotation_index: int

    def code(self, n: int) -> int:
        return self.reflection_bit * n + self.rotation_index

    def __str__(self) -> str:
        if self.reflection_bit == 0 and self.rotation_index == 0:
            return "e"
        f = "f" if self.reflection_bit else ""
        if self.rotation_index == 0:
            return f
        r = "r" if self.rotation_index == 1 else f"r^{self.rotation_index}"
        return f + r


@dataclass(frozen=True)
class DihedralGroup:
    """The dihedral group of order 2n."""

    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 3:
            raise ValueError(f"dihedral group needs n >= 3, got {self.n!r}")

    @property
    def name(self) -> str:
        return f"D{self.n}"

    def order(self) -> int:
        return 2 * self.n

    @property
    def identity(self) -> GroupElement:
        return GroupElement(0, 0)

    def element(self, code: int) -> GroupElement:
        if not 0 <= code < 2 * self.n:
            raise ValueError(f"code {code} out of range for {self.name}")
        return GroupElement(*divmod(code, self.n))

    def elements(self) -> Iterator[GroupElement]:
        for code in range(2 * self.n):
            yield self.element(code)

    def _check(self, a: GroupElement) -> None:
        if a.reflection_bit not in (0, 1) or not 0 <= a.rotation_index < self.n:
            raise ValueError(f"{a!r} is not a canonical element of {self.name}")

    def multiply(self, a: GroupElement, b: GroupElement) -> GroupElement:
        self._check(a)
        self._check(b)
        # f^sa r^ka f^sb r^kb = f^(sa+sb) r^((-1)^sb ka + kb)
        k = (-a.rotation_index if b.reflection_bit else a.rotation_index) + b.rotation_index
        return GroupElement(a.reflection_bit ^ b.reflection_bit, k % self.n)

    def inverse(self, a: GroupElement) -> GroupElement:
        self._check(a)
        if a.reflection_bit:
            return a
        return GroupElement(0, -a.rotation_index % self.n)

    def conjugate(self, a: GroupElement, b: GroupElement) -> GroupElement:
        """Return ``b^-1 a b``, the conjugation quandle operation ``a |> b``."""
        return self.multiply(self.multiply(self.inverse(b), a), b)


def cayley_table(g: DihedralGroup) -> list[list[int]]:
    """Multiplication table on element codes: ``table[a][b]`` is the code of ``a*b``."""
    elems = list(g.elements())
    return [[g.multiply(a, b).code(g.n) for b in elems] for a in elems]


@dataclass(frozen=True)
class FiniteQuandle:
    """A quandle on ``{0, ..., size-1}``.

    ``op_table[a][b]`` is ``a |> b`` and ``inv_table[a][b]`` is ``a |>^-1 b``.
    Construction does not check the axioms; use :func:`verify_quandle_axioms`.
    """

    size: int
    op_table: tuple[tuple[int, ...], ...]
    inv_table: tuple[tuple[int, ...], ...]
    name: str = "Q"

    @classmethod
    def from_table(cls, rows: Sequence[Sequence[int]], name: str = "Q") -> FiniteQuandle:
        """Build from operation rows, deriving the inverse table column by column.

        Raises :class:`QuandleTableError` if the table is not square, has an
        out-of-range entry, or some column ``x -> x |> b`` is not a bijection.
        """
        op = _check_square(rows)
        m = len(op)
        inv = [[0] * m for _ in range(m)]
        for b in range(m):
            seen = [False] * m
            for x in range(m):
                y = op[x][b]
                if seen[y]:
                    raise QuandleTableError(
                        f"column {b} is not a bijection: {y} appears more than once"
                    )
                seen[y] = True
                inv[y][b] = x
        return cls(m, op, tuple(tuple(r) for r in inv), name)

    def __repr__(self) -> str:
        return f"FiniteQuandle(name={self.name!r}, size={self.size})"


def _check_square(rows: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    m = len(rows)
    if m == 0:
        raise QuandleTableError("empty table")
    out = []
    for i, row in enumerate(rows):
        if len(row) != m:
            raise QuandleTableError(f"row {i} has {len(row)} entries, expected {m}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < m:
                raise QuandleTableError(f"entry [{i}][{j}] = {v!r} outside 0..{m - 1}")
        out.append(tuple(row))
    return tuple(out)


def conjugation_quandle(g: DihedralGroup) -> FiniteQuandle:
    """Conj(D_n): ``a |> b = b^-1 a b`` and ``a |>^-1 b = b a b^-1``."""
    elems = list(g.elements())
    n = g.n
    op = tuple(tuple(g.conjugate(a, b).code(n) for b in elems) for a in elems)
    inv = tuple(
        tuple(g.multiply(g.multiply(b, a), g.inverse(b)).code(n) for b in elems)
        for a in elems
    )
    return FiniteQuandle(2 * n, op, inv, f"Conj({g.name})")


def conjugation_quandle_from_table(
    table: Sequence[Sequence[int]], name: str = "Conj(G)"
) -> FiniteQuandle:
    """Conjugation quandle of the group whose Cayley table is given.

    The table must describe a group (checked); element labels are kept as-is,
    which makes it possible to reproduce colorings under a non-standard labeling.
    """
    mul = _check_square(table)
    m = len(mul)
    identities = [e for e in range(m) if all(mul[e][x] == x and mul[x][e] == x for x in range(m))]
    if not identities:
        raise QuandleTableError("table has no identity element")
    e = identities[0]
    inverse = []
    for a in range(m):
        cands = [b for b in range(m) if mul[a][b] == e]
        if len(cands) != 1 or mul[cands[0]][a] != e:
            raise QuandleTableError(f"element {a} has no two-sided inverse")
        inverse.append(cands[0])
    for a in range(m):
        for b in range(m):
            ab = mul[a][b]
            for c in range(m):
                if mul[ab][c] != mul[a][mul[b][c]]:
                    raise QuandleTableError(f"not associative at ({a}, {b}, {c})")
    op = [[mul[mul[inverse[b]][a]][b] for b in range(m)] for a in range(m)]
    return FiniteQuandle.from_table(op, name)


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[int, ...]
    detail: str

    def __str__(self) -> str:
        return f"{self.axiom}: {self.detail}"


def verify_quandle_axioms(
    q: Union[FiniteQuandle, Sequence[Sequence[int]]],
) -> list[Violation]:
    """Check idempotency, right invertibility and self-distributivity.

    Accepts a :class:`FiniteQuandle` or a bare operation table.  Returns an
    empty list when all axioms hold.  A malformed table raises
    :class:`QuandleTableError` instead of producing violations.
    """
    op = _check_square(q.op_table if isinstance(q, FiniteQuandle) else q)
    m = len(op)
    found: list[Violation] = []
    for x in range(m):
        if op[x][x] != x:
            found.append(Violation("idempotency", (x,), f"{x} |> {x} = {op[x][x]}"))
    for b in range(m):
        column = [op[x][b] for x in range(m)]
        missing = sorted(set(range(m)) - set(column))
        if missing:
            found.append(
                Violation(
                    "right-invertibility",
                    (b, missing[0]),
                    f"no x with x |> {b} = {missing[0]}",
                )
            )
    if isinstance(q, FiniteQuandle):
        inv = q.inv_table
        for b in range(m):
            for x in range(m):
                if inv[op[x][b]][b] != x or op[inv[x][b]][b] != x:
                    found.append(
                        Violation(
                            "right-invertibility",
                            (x, b),
                            f"inverse table disagrees at ({x}, {b})",
                        )
                    )
    for x in range(m):
        row = op[x]
        for y in range(m):
            xy = row[y]
            for z in range(m):
                lhs = op[xy][z]
                rhs = op[row[z]][op[y][z]]
                if lhs != rhs:
                    found.append(
                        Violation(
                            "self-distributivity",
                            (x, y, z),
                            f"({x} |> {y}) |> {z} = {lhs} but "
                            f"({x} |> {z}) |> ({y} |> {z}) = {rhs}",
                        )
                    )
    return found


def conjugacy_classes(g: DihedralGroup) -> list[frozenset[int]]:
    """Conjugacy classes of D_n as sets of codes, ordered by smallest member."""
    elems = list(g.elements())
    seen: set[int] = set()
    classes = []
    for a in elems:
        ca = a.code(g.n)
        if ca in seen:
            continue
        cls = frozenset(g.conjugate(a, b).code(g.n) for b in elems)
        seen |= cls
        classes.append(cls)
    return classes


def parse_quandle_table(text: str) -> list[list[int]]:
    """Parse the ``quandle <m>`` text format into raw rows.

    Only syntax and shape are checked here; pass the rows to
    :meth:`FiniteQuandle.from_table` or :func:`verify_quandle_axioms`.
    """
    lines = [
        (no, ln.strip())
        for no, ln in enumerate(text.splitlines(), 1)
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise QuandleTableError("empty quandle file")
    no, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "quandle" or not parts[1].isdigit():
        raise QuandleTableError(f"line {no}: expected 'quandle <m>', got {header!r}")
    m = int(parts[1])
    if m < 1:
        raise QuandleTableError(f"line {no}: quandle size must be positive")
    body = lines[1:]
    if len(body) != m:
        raise QuandleTableError(f"expected {m} table rows, found {len(body)}")
    rows = []
    for no, ln in body:
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError:
            raise QuandleTableError(f"line {no}: non-integer entry in {ln!r}") from None
        if len(row) != m:
            raise QuandleTableError(f"line {no}: expected {m} entries, found {len(row)}")
        for v in row:
            if not 0 <= v < m:
                raise QuandleTableError(f"line {no}: entry {v} outside 0..{m - 1}")
        rows.append(row)
    return rows


def serialize_quandle(q: FiniteQuandle) -> str:
    lines = [f"quandle {q.size}"]
    lines.extend(" ".join(str(v) for v in row) for row in q.op_table)
    return "\n".join(lines) + "\n"
