"""Oriented link diagrams as systems of crossing relations.

A diagram has arcs ``0..A-1`` (1-based in files and printed output) and a
list of crossings ``(under_in, over, under_out)``, each meaning
``color(under_out) = color(under_in) |> color(over)``.  A negative crossing
is stored with ``under_in`` and ``under_out`` swapped, so the same triple
shape serves both signs.

File format::

    # optional comments
    link <name> arcs <A>
    x <under_in> <over> <under_out>
    ...
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from importlib import resources
from typing import NamedTuple, Sequence

__all__ = [
    "Crossing",
    "LinkDiagram",
    "DiagramError",
    "DiagramDataMissing",
    "BUILTIN_NAMES",
    "parse_diagram",
    "serialize_diagram",
    "builtin",
    "allen_swenberg",
    "repeat_section",
    "reidemeister_r1",
    "reidemeister_r2",
    "relabel_arcs",
    "permute_crossings",
    "random_diagram",
    "torus_link_2",
]


class DiagramError(ValueError):
    """Invalid diagram text or structure."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class DiagramDataMissing(LookupError):
    """A bundled diagram data file is not present in the installation."""


class Crossing(NamedTuple):
    under_in: int
    over: int
    under_out: int


@dataclass(frozen=True)
class LinkDiagram:
    name: str
    arc_count: int
    crossings: tuple[Crossing, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.arc_count < 1:
            raise DiagramError("empty diagram: at least one arc is required")
        if not self.name or any(ch.isspace() for ch in self.name):
            raise DiagramError(f"diagram name must be a non-empty token, got {self.name!r}")
        fixed = tuple(Crossing(*c) for c in self.crossings)
        object.__setattr__(self, "crossings", fixed)
        for idx, c in enumerate(fixed):
            for arc in c:
                if not 0 <= arc < self.arc_count:
                    raise DiagramError(
                        f"crossing {idx + 1} references arc {arc + 1}, "
                        f"diagram has {self.arc_count} arcs"
                    )

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def components(self) -> list[int]:
        """Component index of every arc, numbered by smallest arc."""
        parent = list(range(self.arc_count))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for c in self.crossings:
            ra, rb = find(c.under_in), find(c.under_out)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        labels: dict[int, int] = {}
        return [labels.setdefault(find(a), len(labels)) for a in range(self.arc_count)]

    def component_count(self) -> int:
        return len(set(self.components()))

    def is_closed(self) -> bool:
        """True when every arc is under-in of exactly one crossing and under-out of exactly one."""
        ins = [0] * self.arc_count
        outs = [0] * self.arc_count
        for c in self.crossings:
            ins[c.under_in] += 1
            outs[c.under_out] += 1
        return all(v == 1 for v in ins) and all(v == 1 for v in outs)

    def __str__(self) -> str:
        return f"{self.name} ({self.arc_count} arcs, {self.crossing_count} crossings)"


def parse_diagram(text: str) -> LinkDiagram:
    header: tuple[str, int] | None = None
    crossings: list[Crossing] = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 4 or parts[0] != "link" or parts[2] != "arcs":
                raise DiagramError(f"expected 'link <name> arcs <A>', got {line!r}", no)
            try:
                count = int(parts[3])
            except ValueError:
                raise DiagramError(f"arc count {parts[3]!r} is not an integer", no) from None
            if count < 1:
                raise DiagramError("empty diagram: arc count must be positive", no)
            header = (parts[1], count)
            continue
        if parts[0] != "x" or len(parts) != 4:
            raise DiagramError(f"expected 'x <under_in> <over> <under_out>', got {line!r}", no)
        try:
            arcs = [int(p) for p in parts[1:]]
        except ValueError:
            raise DiagramError(f"non-integer arc index in {line!r}", no) from None
        for a in arcs:
            if not 1 <= a <= header[1]:
                raise DiagramError(f"arc {a} out of range 1..{header[1]}", no)
        crossings.append(Crossing(*(a - 1 for a in arcs)))
    if header is None:
        raise DiagramError("empty diagram: no 'link' header found")
    return LinkDiagram(header[0], header[1], tuple(crossings))


def serialize_diagram(d: LinkDiagram) -> str:
    lines = [f"link {d.name} arcs {d.arc_count}"]
    lines.extend(f"x {c.under_in + 1} {c.over + 1} {c.under_out + 1}" for c in d.crossings)
    return "\n".join(lines) + "\n"


_FILES = {
    "hopf": "hopf.lnk",
    "trefoil": "trefoil.lnk",
    "hopf_sum": "hopf_sum.lnk",
    "allen_swenberg_1": "as1.lnk",
    "allen_swenberg_2": "as2.lnk",
}
BUILTIN_NAMES = ("unknot",) + tuple(_FILES)


def data_text(filename: str) -> str:
    res = resources.files("dihedral_quandles").joinpath("data", filename)
    if not res.is_file():
        raise DiagramDataMissing(
            f"bundled diagram file {filename!r} is not installed; the Allen-Swenberg "
            "diagrams must be transcribed into dihedral_quandles/data/ before use"
        )
    return res.read_text(encoding="utf-8")


def builtin(name: str) -> LinkDiagram:
    if name == "unknot":
        return LinkDiagram("unknot", 1, ())
    try:
        filename = _FILES[name]
    except KeyError:
        raise KeyError(
            f"unknown builtin diagram {name!r}; choose one of {', '.join(BUILTIN_NAMES)}"
        ) from None
    return parse_diagram(data_text(filename))


# Repeated block of the first Allen-Swenberg link: crossings 10-26 and 29-45
# (1-based); strands enter on arcs 5 and 26 and leave on arcs 3 and 27.
AS_SECTION = tuple(range(9, 26)) + tuple(range(28, 45))
AS_ENTRIES = (4, 25)
AS_EXITS = (2, 26)


def allen_swenberg(k: int) -> LinkDiagram:
    """The k-th Allen-Swenberg link: the first one with its middle block repeated k-1 more times."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    base = builtin("allen_swenberg_1")
    if k == 1:
        return base
    return repeat_section(
        base, AS_SECTION, AS_ENTRIES, AS_EXITS, k - 1, name=f"allen_swenberg_{k}"
    )


def repeat_section(
    d: LinkDiagram,
    section: Sequence[int],
    entries: Sequence[int],
    exits: Sequence[int],
    copies: int,
    name: str | None = None,
) -> LinkDiagram:
    """Insert ``copies`` further copies of a tangle in series after itself.

    ``section`` lists 0-based crossing indices forming the tangle.  Strand
    ``t`` enters the tangle on arc ``entries[t]`` and leaves on ``exits[t]``.
    Copy ``j`` is spliced so that its entry arcs are the exit arcs of copy
    ``j-1``; every other arc of the copy is fresh, numbered after the existing
    arcs.  Crossings outside the tangle that used an exit arc are rewired to
    the last copy's exit.  Copies are appended to the crossing list in order.
    """
    if copies < 0:
        raise ValueError("copies must be non-negative")
    if len(entries) != len(exits):
        raise ValueError("entries and exits must pair up strand by strand")
    sec = sorted(set(section))
    if any(not 0 <= i < d.crossing_count for i in sec):
        raise ValueError("section references a crossing outside the diagram")
    pairs = list(zip(entries, exits))
    through = {e for e, x in pairs if e == x}
    ends = [a for e, x in pairs if e != x for a in (e, x)]
    if len(set(ends)) != len(ends):
        raise ValueError("an arc cannot be the entry or exit of two different strands")

    in_sec = {a for i in sec for a in d.crossings[i]}
    outside = [c for i, c in enumerate(d.crossings) if i not in set(sec)]
    shared = in_sec & {a for c in outside for a in c}
    boundary = set(entries) | set(exits)
    unlisted = sorted(shared - boundary)
    if unlisted:
        raise ValueError(
            "arcs shared between the section and the rest must be listed as entries "
            f"or exits; unlisted: {[a + 1 for a in unlisted]}"
        )
    missing = sorted(boundary - in_sec)
    if missing:
        raise ValueError(f"boundary arcs not used by the section: {[a + 1 for a in missing]}")

    internal = sorted(in_sec - boundary)
    out_arcs = [x for e, x in pairs if e != x]
    next_arc = d.arc_count
    crossings = list(d.crossings)
    last_exit = {x: x for x in out_arcs}
    for _ in range(copies):
        mapping = {a: a for a in through}
        for e, x in pairs:
            if e != x:
                mapping[e] = last_exit[x]
        for a in internal + out_arcs:
            mapping[a] = next_arc
            next_arc += 1
        crossings.extend(
            Crossing(*(mapping[a] for a in d.crossings[i])) for i in sec
        )
        for x in out_arcs:
            last_exit[x] = mapping[x]
    sec_set = set(sec)
    rewired = [
        Crossing(*(last_exit.get(a, a) for a in c)) if i not in sec_set else c
        for i, c in enumerate(crossings[: d.crossing_count])
    ]
    return LinkDiagram(
        name or f"{d.name}_x{copies + 1}",
        next_arc,
        tuple(rewired + crossings[d.crossing_count :]),
    )


def _check_arc(d: LinkDiagram, arc: int) -> None:
    if not isinstance(arc, int) or not 0 <= arc < d.arc_count:
        raise DiagramError(f"arc {arc!r} is not an arc of {d.name} (0..{d.arc_count - 1})")


def _take_over_end(crossings: list[Crossing], arc: int, new: int) -> None:
    # the new arc inherits the first place where `arc` ends as an under-strand
    for i, c in enumerate(crossings):
        if c.under_in == arc:
            crossings[i] = c._replace(under_in=new)
            return


def reidemeister_r1(d: LinkDiagram, arc: int) -> LinkDiagram:
    """Add a kink on ``arc`` (0-based): one new arc and one crossing ``(arc, arc, new)``."""
    _check_arc(d, arc)
    new = d.arc_count
    crossings = list(d.crossings)
    _take_over_end(crossings, arc, new)
    crossings.append(Crossing(arc, arc, new))
    return LinkDiagram(f"{d.name}_r1", d.arc_count + 1, tuple(crossings))


def reidemeister_r2(d: LinkDiagram, arc_a: int, arc_b: int) -> LinkDiagram:
    """Slide ``arc_b`` under ``arc_a`` (0-based), making a clasp of two opposite crossings."""
    _check_arc(d, arc_a)
    _check_arc(d, arc_b)
    mid, tail = d.arc_count, d.arc_count + 1
    crossings = list(d.crossings)
    _take_over_end(crossings, arc_b, tail)
    crossings.append(Crossing(arc_b, arc_a, mid))
    # second crossing is negative: tail = mid |>^-1 a, stored swapped
    crossings.append(Crossing(tail, arc_a, mid))
    return LinkDiagram(f"{d.name}_r2", d.arc_count + 2, tuple(crossings))


def relabel_arcs(d: LinkDiagram, perm: Sequence[int]) -> LinkDiagram:
    """Rename arc ``a`` to ``perm[a]``."""
    if sorted(perm) != list(range(d.arc_count)):
        raise ValueError("perm must be a permutation of the arc indices")
    return LinkDiagram(
        d.name, d.arc_count, tuple(Crossing(*(perm[a] for a in c)) for c in d.crossings)
    )


def permute_crossings(d: LinkDiagram, order: Sequence[int]) -> LinkDiagram:
    if sorted(order) != list(range(d.crossing_count)):
        raise ValueError("order must be a permutation of the crossing indices")
    return LinkDiagram(d.name, d.arc_count, tuple(d.crossings[i] for i in order))


def random_diagram(arcs: int, rng: random.Random, name: str = "random") -> LinkDiagram:
    """A random closed relation system: every arc is under-in once and under-out once.

    The result need not be planar (it may be a virtual diagram); its relation
    system is still a valid coloring problem.
    """
    outs = list(range(arcs))
    rng.shuffle(outs)
    crossings = tuple(Crossing(i, rng.randrange(arcs), outs[i]) for i in range(arcs))
    return LinkDiagram(name, arcs, crossings)


def torus_link_2(n: int) -> LinkDiagram:
    """Closure of the 2-braid sigma_1^n; arc ``i+2`` is arc ``i`` passed under arc ``i+1``."""
    if n < 2:
        raise ValueError("need at least two crossings")
    return LinkDiagram(
        f"T2_{n}", n, tuple(Crossing(i, (i + 1) % n, (i + 2) % n) for i in range(n))
    )
