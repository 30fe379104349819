"""Combinatorial HH^1 of a monomial algebra via parallel paths.

For a monomial presentation the nonzero paths ``N`` form a basis, and

    dim HH^1 = dim Z - |Q0||N| + |Q1||N| - |(Q1||N)_e| - rank R_g

where ``Q0||N`` pairs each vertex with the nonzero oriented cycles at it
(the vertex itself included), ``Q1||N`` pairs each arrow with the nonzero
paths parallel to it, and ``R_g`` substitutes the parallel path into the
generating relation paths.  Repeated occurrences of an arrow inside one
relation path are substituted one occurrence at a time.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .algebra import AlgebraBasis, center_dim
from .classify import is_monomial
from .hochschild import PreconditionError
from .quiver import Path


@dataclass
class ParallelData:
    N: list[Path]
    q0N: list[tuple[str, Path]]
    q1N: list[tuple[str, Path]]
    q1N_g: list[tuple[str, Path]]
    q1N_a: list[tuple[str, Path]]
    q1N_e: list[tuple[str, Path]]
    RN: list[tuple[Path, Path]]
    rg_matrix: list[list[int]]


@dataclass
class EpsilonReport:
    epsilon: int
    epsilon_prime: int
    relation_count: int
    hh1_dim: int
    violation: bool = False


def _require_monomial(b: AlgebraBasis) -> None:
    if not is_monomial(b.presentation):
        raise PreconditionError("not monomial")


def _substitute(rho: Path, i: int, gamma: Path) -> Path:
    a = rho.arrows
    return Path(rho.source, rho.target, a[:i] + gamma.arrows + a[i + 1:])


def parallel_data(b: AlgebraBasis) -> ParallelData:
    _require_monomial(b)
    q = b.quiver
    N = list(b.basis_paths)
    by_ends: dict[tuple[str, str], list[Path]] = {}
    for p in N:
        by_ends.setdefault((p.source, p.target), []).append(p)

    q0N = [(x, g) for x in q.vertices for g in by_ends.get((x, x), [])]
    q1N = [(a.name, g) for a in q.arrows for g in by_ends.get((a.source, a.target), [])]

    g_set = [
        (a, g) for a, g in q1N
        if g.is_trivial or g.arrows[0] == a or g.arrows[-1] == a
    ]
    rel_paths = [r.terms[0][1] for r in b.presentation.relations]

    def in_a(a: str, g: Path) -> bool:
        for rho in rel_paths:
            for i, x in enumerate(rho.arrows):
                if x == a and not b.is_zero(_substitute(rho, i, g)):
                    return False
        return True

    a_set = [(a, g) for a, g in q1N if in_a(a, g)]
    ga = set(g_set) | set(a_set)
    e_set = [pair for pair in q1N if pair not in ga]

    RN = [(rho, w) for rho in rel_paths for w in by_ends.get((rho.source, rho.target), [])]
    col = {pair: j for j, pair in enumerate(RN)}
    rg = []
    for a, g in g_set:
        row = [0] * len(RN)
        for rho in rel_paths:
            for i, x in enumerate(rho.arrows):
                if x != a:
                    continue
                sub = _substitute(rho, i, g)
                if not b.is_zero(sub):
                    row[col[(rho, sub)]] += 1
        rg.append(row)
    return ParallelData(N, q0N, q1N, g_set, a_set, e_set, RN, rg)


def hh1_monomial(b: AlgebraBasis) -> int:
    d = parallel_data(b)
    rank_rg = linalg.rank(d.rg_matrix, len(d.RN)) if d.rg_matrix else 0
    return center_dim(b) - len(d.q0N) + len(d.q1N) - len(d.q1N_e) - rank_rg


def epsilon_prime(b: AlgebraBasis) -> int:
    shape = b.quiver.shape_report()
    if shape.double_arrow_pairs:
        return 2
    if shape.bypass_arrows:
        return 1
    return 0


def epsilon_report(b: AlgebraBasis, relation_count: int, assert_type_atilde: bool = False) -> EpsilonReport:
    """``epsilon = HH^1 - 1 - |R|`` with its quiver-shape bound."""
    _require_monomial(b)
    hh1 = hh1_monomial(b)
    eps = hh1 - 1 - relation_count
    eps_p = epsilon_prime(b)
    bad = assert_type_atilde and not (0 <= eps <= eps_p <= 2)
    return EpsilonReport(eps, eps_p, relation_count, hh1, bad)
