"""Finite quivers, directed paths and walks.

Paths compose left to right: in ``a.b`` the arrow ``a`` is traversed first,
so ``t(a) == s(b)``.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

FORWARD = 1
INVERSE = -1


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True, order=False)
class Path:
    """A directed path; ``arrows == ()`` is the trivial path at ``source``."""

    source: str
    target: str
    arrows: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def key(self) -> tuple:
        return (len(self.arrows), self.arrows, self.source)

    def __str__(self) -> str:
        if not self.arrows:
            return f"e_{self.source}"
        return ".".join(self.arrows)


def path_key(p: Path) -> tuple:
    return p.key()


@dataclass(frozen=True)
class Walk:
    """Sequence of ``(arrow, direction)`` steps, direction in {FORWARD, INVERSE}."""

    start: str
    steps: tuple[tuple[str, int], ...] = ()

    def __str__(self) -> str:
        if not self.steps:
            return f"e_{self.start}"
        return " ".join(a if d == FORWARD else f"{a}^-1" for a, d in self.steps)


@dataclass
class ShapeReport:
    acyclic: bool
    connected: bool
    double_arrow_pairs: list[tuple[str, str]]
    bypass_arrows: list[str]
    unoriented_cycle_count: int


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    _by_name: dict = field(init=False, repr=False, compare=False, hash=False)
    _out: dict = field(init=False, repr=False, compare=False, hash=False)
    _in: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex name")
        vset = set(self.vertices)
        by_name = {}
        out = defaultdict(list)
        inc = defaultdict(list)
        for a in self.arrows:
            if a.name in by_name or a.name in vset:
                raise ValueError(f"duplicate name {a.name!r}")
            for end in (a.source, a.target):
                if end not in vset:
                    raise ValueError(f"arrow {a.name!r}: unknown vertex {end!r}")
            by_name[a.name] = a
            out[a.source].append(a)
            inc[a.target].append(a)
        object.__setattr__(self, "_by_name", by_name)
        object.__setattr__(self, "_out", dict(out))
        object.__setattr__(self, "_in", dict(inc))

    # ---- lookups --------------------------------------------------------
    def arrow(self, name: str) -> Arrow:
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(f"unknown arrow {name!r}") from None

    def has_arrow(self, name: str) -> bool:
        return name in self._by_name

    def outgoing(self, x: str) -> list[Arrow]:
        return self._out.get(x, [])

    def incoming(self, x: str) -> list[Arrow]:
        return self._in.get(x, [])

    def _check_vertex(self, x: str) -> None:
        if x not in self.vertices:
            raise KeyError(f"unknown vertex {x!r}")

    # ---- paths ----------------------------------------------------------
    def trivial(self, x: str) -> Path:
        self._check_vertex(x)
        return Path(x, x, ())

    def path(self, arrows: Iterable[str] | str) -> Path:
        """Build a path from arrow names (or a dotted string); checks composability."""
        if isinstance(arrows, str):
            arrows = arrows.split(".")
        names = tuple(arrows)
        if not names:
            raise ValueError("use trivial() for paths of length 0")
        arrs = [self.arrow(n) for n in names]
        for a, b in zip(arrs, arrs[1:]):
            if a.target != b.source:
                raise ValueError(f"arrows {a.name!r} and {b.name!r} are not composable")
        return Path(arrs[0].source, arrs[-1].target, names)

    def compose(self, *paths: Path) -> Path:
        out = paths[0]
        for p in paths[1:]:
            if out.target != p.source:
                raise ValueError(f"paths {out} and {p} are not composable")
            out = Path(out.source, p.target, out.arrows + p.arrows)
        return out

    def enumerate_paths(self, max_len: int) -> list[Path]:
        """All directed paths of length <= max_len, ordered by path_key."""
        if max_len < 0:
            raise ValueError("max_len must be >= 0")
        paths = [self.trivial(x) for x in self.vertices]
        frontier = paths
        for _ in range(max_len):
            frontier = [
                Path(p.source, a.target, p.arrows + (a.name,))
                for p in frontier
                for a in self.outgoing(p.target)
            ]
            if not frontier:
                break
            paths = paths + frontier
        return sorted(paths, key=path_key)

    def paths_between(self, x: str, y: str, max_len: int) -> list[Path]:
        self._check_vertex(x)
        self._check_vertex(y)
        return [p for p in self.enumerate_paths(max_len) if p.source == x and p.target == y]

    # ---- shape ----------------------------------------------------------
    def components(self) -> list[set[str]]:
        adj = defaultdict(set)
        for a in self.arrows:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
        seen: set[str] = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            comp = {v}
            todo = [v]
            while todo:
                u = todo.pop()
                for w in adj[u]:
                    if w not in comp:
                        comp.add(w)
                        todo.append(w)
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def is_acyclic(self) -> bool:
        indeg = {v: 0 for v in self.vertices}
        for a in self.arrows:
            indeg[a.target] += 1
        todo = deque(v for v, d in indeg.items() if d == 0)
        seen = 0
        while todo:
            v = todo.popleft()
            seen += 1
            for a in self.outgoing(v):
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    todo.append(a.target)
        return seen == len(self.vertices)

    def cycle_rank(self) -> int:
        return len(self.arrows) - len(self.vertices) + len(self.components())

    def _has_long_path_avoiding(self, skip: str, x: str, y: str) -> bool:
        # BFS over (vertex, min(length, 2)) in the quiver without arrow `skip`.
        start = (x, 0)
        seen = {start}
        todo = deque([start])
        while todo:
            v, n = todo.popleft()
            for a in self.outgoing(v):
                if a.name == skip:
                    continue
                state = (a.target, min(n + 1, 2))
                if state == (y, 2):
                    return True
                if state not in seen:
                    seen.add(state)
                    todo.append(state)
        return False

    def shape_report(self) -> ShapeReport:
        doubles = []
        for i, a in enumerate(self.arrows):
            for b in self.arrows[i + 1:]:
                if (a.source, a.target) == (b.source, b.target):
                    doubles.append((a.name, b.name))
        bypasses = [
            a.name for a in self.arrows if self._has_long_path_avoiding(a.name, a.source, a.target)
        ]
        return ShapeReport(
            acyclic=self.is_acyclic(),
            connected=self.is_connected(),
            double_arrow_pairs=doubles,
            bypass_arrows=bypasses,
            unoriented_cycle_count=self.cycle_rank(),
        )

    # ---- walks ----------------------------------------------------------
    def step_ends(self, step: tuple[str, int]) -> tuple[str, str]:
        a = self.arrow(step[0])
        return (a.source, a.target) if step[1] == FORWARD else (a.target, a.source)

    def make_walk(self, start: str, steps: Iterable[tuple[str, int]]) -> Walk:
        """Validate endpoints and reducedness of a walk."""
        self._check_vertex(start)
        steps = tuple(steps)
        here = start
        for i, step in enumerate(steps):
            if step[1] not in (FORWARD, INVERSE):
                raise ValueError(f"bad direction {step[1]!r}")
            s, t = self.step_ends(step)
            if s != here:
                raise ValueError(f"walk breaks at step {i}: {step[0]!r} does not start at {here!r}")
            if i and steps[i - 1] == (step[0], -step[1]):
                raise ValueError(f"walk is not reduced at step {i}")
            here = t
        return Walk(start, steps)

    def walk_end(self, w: Walk) -> str:
        here = w.start
        for step in w.steps:
            here = self.step_ends(step)[1]
        return here

    def __iter__(self) -> Iterator[Arrow]:
        return iter(self.arrows)


def quiver(vertices: Iterable, arrows: Iterable[tuple[str, str, str]]) -> Quiver:
    """Shorthand: ``quiver("xy", [("a", "x", "y"), ("b", "x", "y")])``."""
    return Quiver(tuple(str(v) for v in vertices), tuple(Arrow(n, str(s), str(t)) for n, s, t in arrows))


def maximal_segments(w: Walk) -> list[tuple[int, tuple[str, ...]]]:
    """Split a walk into maximal same-direction runs: ``[(direction, arrows in path order)]``.

    An inverse run ``b^-1 a^-1`` is returned as the directed path ``a.b``.
    """
    segs: list[tuple[int, list[str]]] = []
    for name, d in w.steps:
        if segs and segs[-1][0] == d:
            segs[-1][1].append(name)
        else:
            segs.append((d, [name]))
    return [(d, tuple(names) if d == FORWARD else tuple(reversed(names))) for d, names in segs]
