"""Certified finite bases of bound quiver algebras.

The ideal is spanned degree by degree inside the truncated path space
``kQ / J^(max_len+1)``.  Paths already known to lie in ``I`` are pruned
together with every path containing them, and the span is recomputed until
no new path drops out.  What survives is row reduced block by block; the
lexicographically least paths (under :func:`~hhquiver.quiver.path_key`)
that are not pivots become the coset representatives.

The computation equals ``kQ/I`` whenever the ideal is admissible, i.e. as
soon as ``J^(max_len+1)`` lies in ``I``; the certificate checks that every
path of some length ``m <= max_len`` vanishes.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from . import linalg
from .presentation import Presentation, validate
from .quiver import Path, path_key

DEFAULT_MAX_LEN = 24

Element = dict[int, Fraction]


class NotCertifiedError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class AlgebraBasis:
    presentation: Presentation
    basis_paths: tuple[Path, ...]
    nilpotency_degree: int
    max_len: int
    reduction: dict[Path, Element] = field(repr=False)
    index: dict[Path, int] = field(init=False, repr=False)
    _blocks: dict = field(init=False, repr=False)
    _products: dict = field(init=False, repr=False, default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "index", {p: i for i, p in enumerate(self.basis_paths)})
        blocks = defaultdict(list)
        for i, p in enumerate(self.basis_paths):
            blocks[(p.source, p.target)].append(i)
        object.__setattr__(self, "_blocks", dict(blocks))

    @property
    def quiver(self):
        return self.presentation.quiver

    @property
    def dimension(self) -> int:
        return len(self.basis_paths)

    def block(self, x: str, y: str) -> list[int]:
        """Indices of basis paths in ``e_x B e_y``."""
        return self._blocks.get((x, y), [])

    def block_dim(self, x: str, y: str) -> int:
        return len(self.block(x, y))

    def reduce(self, path: Path) -> Element:
        """Coordinates of the coset of ``path``; zero is the empty dict."""
        return self.reduction.get(path, {})

    def coordinates(self, path: Path) -> list[Fraction]:
        v = [Fraction(0)] * self.dimension
        for i, c in self.reduce(path).items():
            v[i] = c
        return v

    def is_zero(self, path: Path) -> bool:
        return not self.reduce(path)

    def reduce_combination(self, terms: Iterable[tuple[Fraction, Path]]) -> Element:
        out: dict[int, Fraction] = defaultdict(Fraction)
        for c, p in terms:
            for i, x in self.reduce(p).items():
                out[i] += c * x
        return {i: x for i, x in out.items() if x != 0}

    def product(self, i: int, j: int) -> Element:
        """Structure constants: ``b_i * b_j`` in coordinates."""
        key = (i, j)
        if key not in self._products:
            u, v = self.basis_paths[i], self.basis_paths[j]
            if u.target != v.source:
                res = {}
            else:
                res = self.reduce(Path(u.source, v.target, u.arrows + v.arrows))
            self._products[key] = res
        return self._products[key]

    def multiply(self, x: Element, y: Element) -> Element:
        out: dict[int, Fraction] = defaultdict(Fraction)
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.product(i, j).items():
                    out[k] += a * b * c
        return {k: c for k, c in out.items() if c != 0}


def _has_dead_subpath(arrows: tuple[str, ...], dead: set, dead_lens: list[int]) -> bool:
    n = len(arrows)
    for L in dead_lens:
        for i in range(n - L + 1):
            if arrows[i:i + L] in dead:
                return True
    return False


def _alive_paths(p: Presentation, max_len: int, dead: set, dead_lens: list[int]) -> list[Path]:
    q = p.quiver
    out = []
    frontier = [q.trivial(x) for x in q.vertices]
    out.extend(frontier)
    for _ in range(max_len):
        nxt = []
        for path in frontier:
            for a in q.outgoing(path.target):
                arrows = path.arrows + (a.name,)
                # prefixes are clean already, so only suffixes need checking
                if any(arrows[-L:] in dead for L in dead_lens if L <= len(arrows)):
                    continue
                nxt.append(Path(path.source, a.target, arrows))
        if not nxt:
            break
        out.extend(nxt)
        frontier = nxt
    return out


def _ideal_rows(p: Presentation, alive: list[Path], max_len: int, dead: set, dead_lens: list[int]):
    """Rows ``u.rho.v`` for the non-monomial relations, bucketed by block."""
    ending = defaultdict(list)
    starting = defaultdict(list)
    for path in alive:
        ending[path.target].append(path)
        starting[path.source].append(path)
    rows = defaultdict(list)
    for rel in p.relations:
        if rel.is_monomial:
            continue
        shortest = min(len(w) for _, w in rel.terms)
        for u in ending[rel.source]:
            for v in starting[rel.target]:
                if len(u) + len(v) + shortest > max_len:
                    continue
                row: dict[Path, Fraction] = defaultdict(Fraction)
                for c, w in rel.terms:
                    arrows = u.arrows + w.arrows + v.arrows
                    if len(arrows) > max_len or _has_dead_subpath(arrows, dead, dead_lens):
                        continue
                    row[Path(u.source, v.target, arrows)] += c
                row = {k: c for k, c in row.items() if c != 0}
                if row:
                    rows[(u.source, v.target)].append(row)
    return rows


def _reduce_block(paths: list[Path], rows: list[dict]):
    cols = sorted(paths, key=path_key, reverse=True)
    pos = {c: i for i, c in enumerate(cols)}
    dense = []
    for row in rows:
        r = [Fraction(0)] * len(cols)
        for path, c in row.items():
            r[pos[path]] = c
        dense.append(r)
    red, pivots = linalg.rref_with_pivots(dense, len(cols))
    return cols, red[: len(pivots)], pivots


def compute_basis(p: Presentation, max_len: int = DEFAULT_MAX_LEN) -> AlgebraBasis:
    diags = validate(p)
    if diags:
        raise ValueError("invalid presentation: " + "; ".join(diags))
    dead = {r.terms[0][1].arrows for r in p.relations if r.is_monomial}
    while True:
        dead_lens = sorted({len(d) for d in dead})
        alive = _alive_paths(p, max_len, dead, dead_lens)
        rows = _ideal_rows(p, alive, max_len, dead, dead_lens)
        by_block = defaultdict(list)
        for path in alive:
            by_block[(path.source, path.target)].append(path)
        reduced = {}
        newly_dead = set()
        for blk, brows in rows.items():
            cols, red, pivots = _reduce_block(by_block[blk], brows)
            reduced[blk] = (cols, red, pivots)
            for r, pc in zip(red, pivots):
                if sum(1 for x in r if x != 0) == 1:
                    newly_dead.add(cols[pc].arrows)
        if not newly_dead:
            break
        dead |= newly_dead

    longest = max(len(path) for path in alive)
    if longest >= max_len:
        raise NotCertifiedError(
            f"not certified finite-dimensional within max_len={max_len}"
        )

    basis = []
    pivot_rows = {}
    for blk, paths in by_block.items():
        if blk not in reduced:
            basis.extend(paths)
            continue
        cols, red, pivots = reduced[blk]
        pivot_set = set(pivots)
        basis.extend(c for i, c in enumerate(cols) if i not in pivot_set)
        for r, pc in zip(red, pivots):
            pivot_rows[cols[pc]] = (cols, r)
    basis.sort(key=path_key)
    index = {path: i for i, path in enumerate(basis)}
    reduction: dict[Path, Element] = {path: {i: Fraction(1)} for path, i in index.items()}
    for path, (cols, r) in pivot_rows.items():
        reduction[path] = {index[cols[j]]: -x for j, x in enumerate(r) if x != 0 and cols[j] != path}
    return AlgebraBasis(
        presentation=p,
        basis_paths=tuple(basis),
        nilpotency_degree=longest + 1,
        max_len=max_len,
        reduction=reduction,
    )


def center_dim(b: AlgebraBasis) -> int:
    """Dimension of the centre: kernel of ``z -> (z g - g z)`` over the generators."""
    q = b.quiver
    n = b.dimension
    gens = [q.trivial(x) for x in q.vertices] + [q.path([a.name]) for a in q.arrows]
    rows = []
    for g in gens:
        block = defaultdict(lambda: [Fraction(0)] * n)
        for i, bi in enumerate(b.basis_paths):
            if bi.target == g.source:
                for k, c in b.reduce(q.compose(bi, g)).items():
                    block[k][i] += c
            if g.target == bi.source:
                for k, c in b.reduce(q.compose(g, bi)).items():
                    block[k][i] -= c
        rows.extend(r for r in block.values() if any(r))
    return n - linalg.rank(rows, n)
