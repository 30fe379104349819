"""Algebra classification: schurian, monomial, gentle, and tilted gentle type."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Callable, Iterator

from .algebra import AlgebraBasis
from .presentation import Presentation
from .quiver import FORWARD, INVERSE, Quiver, Walk

TYPE_A = "typeA"
TYPE_ATILDE = "typeAtilde"
NOT_APPLICABLE = "notApplicable"


@dataclass
class ClassReport:
    admissible: bool
    finite_dimensional: bool
    dimension: int
    schurian: bool
    monomial: bool
    gentle: bool
    triangular: bool
    connected: bool


def is_monomial(p: Presentation) -> bool:
    return all(r.is_monomial for r in p.relations)


def is_gentle(p: Presentation) -> bool:
    q = p.quiver
    for x in q.vertices:
        if len(q.outgoing(x)) > 2 or len(q.incoming(x)) > 2:
            return False
    if not all(r.is_monomial and len(r.terms[0][1]) == 2 for r in p.relations):
        return False
    zero = p.relation_paths()
    for a in q.arrows:
        after = [b.name for b in q.outgoing(a.target)]
        before = [c.name for c in q.incoming(a.source)]
        if sum((a.name, b) not in zero for b in after) > 1:
            return False
        if sum((c, a.name) not in zero for c in before) > 1:
            return False
        if sum((a.name, b) in zero for b in after) > 1:
            return False
        if sum((c, a.name) in zero for c in before) > 1:
            return False
    return True


def classify(b: AlgebraBasis) -> ClassReport:
    p = b.presentation
    q = p.quiver
    blocks = Counter((path.source, path.target) for path in b.basis_paths)
    return ClassReport(
        admissible=True,
        finite_dimensional=True,
        dimension=b.dimension,
        schurian=all(n <= 1 for n in blocks.values()),
        monomial=is_monomial(p),
        gentle=is_gentle(p),
        triangular=q.is_acyclic(),
        connected=q.is_connected(),
    )


def nonzero_walks(
    q: Quiver,
    start: str,
    segment_ok: Callable[[tuple[str, ...]], bool],
    max_len: int,
    allowed: set[str] | None = None,
    first_forbidden: tuple[str, int] | None = None,
    first_step: tuple[str, int] | None = None,
) -> Iterator[Walk]:
    """Reduced walks from ``start`` whose maximal directed runs all pass ``segment_ok``.

    ``segment_ok`` receives the run as a directed path (arrow names in path
    order).  Walks reaching an already-seen state (vertex, last step, open
    run) are not extended again; the trivial walk is yielded first.  With
    ``first_step`` every walk begins with that step, which may use an arrow
    outside ``allowed``.
    """
    if first_step is None:
        todo = deque([(start, (), None, ())])
    else:
        name, d = first_step
        s, t = q.step_ends(first_step)
        if s != start:
            raise ValueError("first step does not leave the start vertex")
        todo = deque([(t, (first_step,), d, (name,))])
    seen = set()
    while todo:
        here, steps, direction, run = todo.popleft()
        state = (here, steps[-1] if steps else first_forbidden, direction, run)
        if state in seen:
            continue
        seen.add(state)
        yield Walk(start, steps)
        if len(steps) >= max_len:
            continue
        last = steps[-1] if steps else None
        moves = [(a, FORWARD, a.target) for a in q.outgoing(here)]
        moves += [(a, INVERSE, a.source) for a in q.incoming(here)]
        for a, d, there in moves:
            if allowed is not None and a.name not in allowed:
                continue
            if last == (a.name, -d) or (not steps and first_forbidden == (a.name, d)):
                continue
            if d == direction:
                new_run = run + (a.name,) if d == FORWARD else (a.name,) + run
            else:
                new_run = (a.name,)
            if not segment_ok(new_run):
                continue
            todo.append((there, steps + ((a.name, d),), d, new_run))


def _monomial_nonzero(p: Presentation) -> Callable[[tuple[str, ...]], bool]:
    zero = [r.terms[0][1].arrows for r in p.relations]

    def ok(run: tuple[str, ...]) -> bool:
        for z in zero:
            L = len(z)
            if any(run[i:i + L] == z for i in range(len(run) - L + 1)):
                return False
        return True

    return ok


def find_double_zero(p: Presentation) -> Walk | None:
    """A reduced walk ``a.b w' c.d`` with ``ab, cd`` zero relations and ``w'`` nonzero."""
    q = p.quiver
    pairs = [r.terms[0][1].arrows for r in p.relations if len(r.terms[0][1]) == 2]
    ok = _monomial_nonzero(p)
    for a, b in pairs:
        tb = q.arrow(b).target
        for w in nonzero_walks(q, tb, ok, 2 * len(q.arrows), first_forbidden=(b, INVERSE)):
            end = q.walk_end(w)
            last = w.steps[-1] if w.steps else (b, FORWARD)
            for c, d in pairs:
                if q.arrow(c).source == end and last != (c, INVERSE):
                    steps = ((a, FORWARD), (b, FORWARD)) + w.steps + ((c, FORWARD), (d, FORWARD))
                    return Walk(q.arrow(a).source, steps)
    return None


def has_overlapping_zeros(p: Presentation) -> bool:
    """Two length-2 zero relations ``ab`` and ``bc`` sharing the arrow ``b``."""
    pairs = [r.terms[0][1].arrows for r in p.relations]
    firsts = {x[0] for x in pairs}
    return any(len(x) == 2 and x[1] in firsts for x in pairs)


def cycle_vertices(q: Quiver) -> set[str]:
    """Vertices left after repeatedly pruning leaves of the underlying multigraph."""
    deg = Counter()
    for a in q.arrows:
        deg[a.source] += 1
        deg[a.target] += 1
    alive = set(q.vertices)
    live_arrows = set(a.name for a in q.arrows)
    changed = True
    while changed:
        changed = False
        for v in list(alive):
            if deg[v] <= 1:
                alive.discard(v)
                changed = True
                for a in q.arrows:
                    if a.name in live_arrows and v in (a.source, a.target):
                        live_arrows.discard(a.name)
                        deg[a.source] -= 1
                        deg[a.target] -= 1
    return alive


def gentle_tilted_type(p: Presentation) -> str:
    q = p.quiver
    if not is_gentle(p) or not q.is_connected() or not q.is_acyclic():
        return NOT_APPLICABLE
    if has_overlapping_zeros(p) or find_double_zero(p) is not None:
        return NOT_APPLICABLE
    cycles = q.cycle_rank()
    if cycles == 0:
        return TYPE_A
    if cycles != 1:
        return NOT_APPLICABLE
    on_cycle = cycle_vertices(q)
    attached = [a for a in q.arrows if (a.source in on_cycle) != (a.target in on_cycle)]
    entering = [a.target in on_cycle for a in attached]
    if all(entering) or not any(entering):
        return TYPE_ATILDE
    return NOT_APPLICABLE
