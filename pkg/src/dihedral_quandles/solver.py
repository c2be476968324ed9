"""Exact enumeration of quandle colorings of a link diagram.

Two independent routes produce the same sorted list of colorings:

* :func:`enumerate_bruteforce` walks the full product space in lexicographic
  order, testing each relation once all its arcs are set.  It is the oracle
  and refuses instances larger than its budget.
* :func:`enumerate` compiles a :class:`SearchPlan` in which most arcs are
  forced by crossing relations, then backtracks over the few remaining
  decision arcs.  A section-split/join strategy is available behind the same
  call for cross-checking.
"""

from __future__ import annotations

import builtins
import itertools
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import FiniteQuandle
from .diagram import Crossing, LinkDiagram

__all__ = [
    "Coloring",
    "BudgetExceeded",
    "DEFAULT_BUDGET",
    "SearchPlan",
    "Step",
    "build_plan",
    "enumerate_bruteforce",
    "enumerate",
    "enumerate_sections",
    "count_by_image_size",
    "is_coloring",
]

Coloring = tuple[int, ...]

DEFAULT_BUDGET = 10**8

_enum = builtins.enumerate  # the public enumerate() below shadows it

DECIDE, DECIDE_OVER, FORCE_OUT, FORCE_IN = "decide", "decide_over", "force_out", "force_in"


class BudgetExceeded(RuntimeError):
    def __init__(self, budget: int, required: int):
        self.budget = budget
        self.required = required
        super().__init__(
            f"brute-force oracle refused: {required} assignments exceed the budget of {budget}"
        )


def is_coloring(d: LinkDiagram, q: FiniteQuandle, assignment: Sequence[int]) -> bool:
    op = q.op_table
    return len(assignment) == d.arc_count and all(
        op[assignment[c.under_in]][assignment[c.over]] == assignment[c.under_out]
        for c in d.crossings
    )


def enumerate_bruteforce(
    d: LinkDiagram, q: FiniteQuandle, budget: int = DEFAULT_BUDGET
) -> list[Coloring]:
    """Every coloring, in lexicographic order, by exhaustive search.

    Arcs are assigned in index order and a relation is tested as soon as its
    largest arc is assigned.  No relation is ever used to infer a value.
    """
    m, n = q.size, d.arc_count
    required = m**n
    if required > budget:
        raise BudgetExceeded(budget, required)
    op = q.op_table
    due: list[list[Crossing]] = [[] for _ in range(n)]
    for c in d.crossings:
        due[max(c)].append(c)
    asg = [0] * n
    out: list[Coloring] = []

    def walk(k: int) -> None:
        if k == n:
            out.append(tuple(asg))
            return
        checks = due[k]
        for v in range(m):
            asg[k] = v
            if all(op[asg[i]][asg[o]] == asg[u] for i, o, u in checks):
                walk(k + 1)

    walk(0)
    return out


@dataclass(frozen=True)
class Step:
    kind: str
    arc: int
    src: tuple[int, int] = (-1, -1)
    checks: tuple[Crossing, ...] = ()


@dataclass(frozen=True)
class SearchPlan:
    """Order in which arcs get their values.

    ``decide`` steps branch over every element; ``decide_over`` steps branch
    over the elements ``b`` with ``x |> b = y`` for known ``x, y``; ``force_*``
    steps compute the arc from two known ones.  ``checks`` are the relations
    that become fully known at that step and were not used to set it.
    """

    steps: tuple[Step, ...]

    @property
    def order(self) -> tuple[int, ...]:
        return tuple(s.arc for s in self.steps)

    @property
    def decisions(self) -> int:
        return sum(s.kind in (DECIDE, DECIDE_OVER) for s in self.steps)


def build_plan(d: LinkDiagram) -> SearchPlan:
    """Greedy propagation-first ordering.

    After every decision all relations that can force an arc do so.  The next
    decision arc is the one that activates the most pending relations, ties
    going to the lowest index.
    """
    n = d.arc_count
    known = [False] * n
    pending = dict(_enum(d.crossings))
    steps: list[Step] = []
    checks: list[Crossing] = []

    def flush(step: Step) -> None:
        steps.append(step)

    def close_step() -> None:
        if steps and checks:
            last = steps[-1]
            steps[-1] = Step(last.kind, last.arc, last.src, last.checks + tuple(checks))
        checks.clear()

    def propagate() -> None:
        changed = True
        while changed:
            changed = False
            for idx in sorted(pending):
                i, o, u = c = pending[idx]
                if known[i] and known[o] and known[u]:
                    checks.append(c)
                elif known[i] and known[o]:
                    close_step()
                    flush(Step(FORCE_OUT, u, (i, o)))
                    known[u] = True
                elif known[u] and known[o]:
                    close_step()
                    flush(Step(FORCE_IN, i, (u, o)))
                    known[i] = True
                else:
                    continue
                del pending[idx]
                changed = True
        close_step()

    def activates(c: Crossing, v: int) -> bool:
        i, o, u = c
        k = lambda a: known[a] or a == v  # noqa: E731
        return (k(i) and k(o)) or (k(u) and k(o)) or (k(i) and k(u))

    while not all(known):
        touching: dict[int, list[int]] = defaultdict(list)
        for idx, c in pending.items():
            for a in set(c):
                if not known[a]:
                    touching[a].append(idx)
        best, best_score = -1, -1
        for v in range(n):
            if known[v]:
                continue
            score = sum(activates(pending[idx], v) for idx in touching.get(v, ()))
            if score > best_score:
                best, best_score = v, score
        v = best
        source = None
        for idx in sorted(touching.get(v, ())):
            i, o, u = pending[idx]
            if o == v and i != v and u != v and known[i] and known[u]:
                source = idx
                break
        if source is None:
            flush(Step(DECIDE, v))
        else:
            i, _, u = pending.pop(source)
            flush(Step(DECIDE_OVER, v, (i, u)))
        known[v] = True
        propagate()
    return SearchPlan(tuple(steps))


def _over_candidates(q: FiniteQuandle) -> tuple[tuple[tuple[int, ...], ...], ...]:
    m, op = q.size, q.op_table
    cand: list[list[list[int]]] = [[[] for _ in range(m)] for _ in range(m)]
    for x in range(m):
        for b in range(m):
            cand[x][op[x][b]].append(b)
    return tuple(tuple(tuple(c) for c in row) for row in cand)


def _search(
    plan: SearchPlan, q: FiniteQuandle, n: int, first: Sequence[int] | None = None
) -> list[Coloring]:
    op, inv, m = q.op_table, q.inv_table, q.size
    cand = _over_candidates(q)
    steps = [(s.kind, s.arc, s.src[0], s.src[1], s.checks) for s in plan.steps]
    total = len(steps)
    asg = [0] * n
    out: list[Coloring] = []

    def ok(checks: tuple[Crossing, ...]) -> bool:
        for i, o, u in checks:
            if op[asg[i]][asg[o]] != asg[u]:
                return False
        return True

    def walk(k: int) -> None:
        while k < total:
            kind, arc, s1, s2, checks = steps[k]
            if kind == FORCE_OUT:
                asg[arc] = op[asg[s1]][asg[s2]]
            elif kind == FORCE_IN:
                asg[arc] = inv[asg[s1]][asg[s2]]
            else:
                break
            if checks and not ok(checks):
                return
            k += 1
        if k == total:
            out.append(tuple(asg))
            return
        kind, arc, s1, s2, checks = steps[k]
        if kind == DECIDE:
            values: Iterable[int] = first if (k == 0 and first is not None) else range(m)
        else:
            values = cand[asg[s1]][asg[s2]]
        for v in values:
            asg[arc] = v
            if not checks or ok(checks):
                walk(k + 1)

    walk(0)
    return out


def _search_chunk(args: tuple[SearchPlan, FiniteQuandle, int, tuple[int, ...]]) -> list[Coloring]:
    plan, q, n, values = args
    return _search(plan, q, n, values)


def enumerate(
    d: LinkDiagram,
    q: FiniteQuandle,
    strategy: str = "propagate",
    workers: int = 1,
) -> list[Coloring]:
    """Every coloring of ``d`` by ``q``, sorted lexicographically.

    ``strategy`` is ``"propagate"`` (default) or ``"sections"``.  With
    ``workers > 1`` the values of the first decision arc are split across
    processes; the sorted result is the same for any worker count.
    """
    if strategy == "sections":
        return enumerate_sections(d, q)
    if strategy != "propagate":
        raise ValueError(f"unknown strategy {strategy!r}")
    plan = build_plan(d)
    n = d.arc_count
    if workers <= 1 or not plan.steps or plan.steps[0].kind != DECIDE:
        result = _search(plan, q, n)
    else:
        chunks = [tuple(range(q.size))[w::workers] for w in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_search_chunk, [(plan, q, n, c) for c in chunks if c])
            result = [col for part in parts for col in part]
    result.sort()
    return result


def enumerate_sections(d: LinkDiagram, q: FiniteQuandle, sections: int = 2) -> list[Coloring]:
    """Split the crossing list into contiguous blocks, color each, join on shared arcs."""
    n, m = d.arc_count, q.size
    k = max(1, min(sections, d.crossing_count))
    size = -(-d.crossing_count // k) if d.crossing_count else 0
    blocks = [d.crossings[s : s + size] for s in range(0, d.crossing_count, size or 1)]

    arcs: list[int] = []
    rows: list[tuple[int, ...]] = [()]
    for block in blocks:
        local_arcs = sorted({a for c in block for a in c})
        index = {a: j for j, a in _enum(local_arcs)}
        sub = LinkDiagram(
            "section",
            len(local_arcs),
            tuple(Crossing(*(index[a] for a in c)) for c in block),
        )
        local = _search(build_plan(sub), q, sub.arc_count)
        pos = {a: j for j, a in _enum(arcs)}
        shared = [a for a in local_arcs if a in pos]
        fresh = [a for a in local_arcs if a not in pos]
        by_key: dict[tuple[int, ...], list[tuple[int, ...]]] = defaultdict(list)
        for row in local:
            by_key[tuple(row[index[a]] for a in shared)].append(
                tuple(row[index[a]] for a in fresh)
            )
        joined = []
        for row in rows:
            for ext in by_key.get(tuple(row[pos[a]] for a in shared), ()):
                joined.append(row + ext)
        arcs += fresh
        rows = joined
        if not rows:
            return []

    free = [a for a in range(n) if a not in set(arcs)]
    arcs += free
    out = []
    for row in rows:
        for ext in itertools.product(range(m), repeat=len(free)):
            full = [0] * n
            for a, v in zip(arcs, row + ext):
                full[a] = v
            out.append(tuple(full))
    out.sort()
    return out


def count_by_image_size(colorings: Iterable[Sequence[int]]) -> dict[int, int]:
    """Tally colorings by how many distinct colors they use."""
    tally: Counter[int] = Counter()
    width = None
    for col in colorings:
        if width is None:
            width = len(col)
        elif len(col) != width:
            raise ValueError("colorings have different arc counts")
        tally[len(set(col))] += 1
    return dict(sorted(tally.items()))
