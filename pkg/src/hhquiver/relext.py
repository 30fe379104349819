"""Relation-extensions of tilted algebras.

For a system of relations ``R`` of ``C = kQ/I`` the quiver of the
relation-extension has the same vertices, every arrow of ``Q`` (old arrows)
and one new arrow ``t(rho) -> s(rho)`` for each ``rho`` in ``R``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .algebra import DEFAULT_MAX_LEN, AlgebraBasis, NotCertifiedError, compute_basis
from .classify import TYPE_A, TYPE_ATILDE, gentle_tilted_type, nonzero_walks
from .presentation import Presentation, Relation, monomial, validate
from .quiver import FORWARD, Arrow, Quiver, Walk, maximal_segments


@dataclass(frozen=True)
class SystemOfRelations:
    relations: tuple[Relation, ...]


@dataclass(frozen=True, eq=False)
class ExtensionPair:
    c_presentation: Presentation
    b_presentation: Presentation
    new_arrows: frozenset[str]
    correspondence: dict[str, int] = field(default_factory=dict)

    @property
    def relation_count(self) -> int:
        return len(self.c_presentation.relations)

    def old_arrows(self) -> list[str]:
        return [a.name for a in self.b_presentation.quiver.arrows if a.name not in self.new_arrows]


def new_arrow_name(i: int, taken: set[str]) -> str:
    name = f"nw_{i}"
    while name in taken:
        name += "_"
    return name


def relext_quiver(c: Presentation, r: SystemOfRelations | None = None) -> tuple[Quiver, dict[str, int]]:
    """Quiver of the relation-extension plus the new-arrow -> relation-index map."""
    if validate(c):
        raise ValueError("invalid presentation")
    rels = c.relations if r is None else r.relations
    if r is not None and not verify_system(c, r)["generates"]:
        raise ValueError("invalid system of relations: does not generate the ideal")
    q = c.quiver
    taken = set(q.vertices) | {a.name for a in q.arrows}
    arrows = list(q.arrows)
    corr = {}
    for i, rho in enumerate(rels):
        name = new_arrow_name(i, taken)
        taken.add(name)
        arrows.append(Arrow(name, rho.target, rho.source))
        corr[name] = i
    return Quiver(q.vertices, tuple(arrows)), corr


def auto_relext_gentle(c: Presentation) -> ExtensionPair:
    """Relation-extension of a gentle tilted algebra of type A or A-tilde.

    Each relation ``a.b`` with new arrow ``d`` closes a 3-cycle bound by
    ``a.b``, ``b.d`` and ``d.a``.
    """
    if gentle_tilted_type(c) not in (TYPE_A, TYPE_ATILDE):
        raise ValueError("not gentle tilted of type A or Atilde")
    bq, corr = relext_quiver(c)
    rels = []
    for rho in c.relations:
        rels.append(monomial(bq, rho.terms[0][1].arrows))
    for name, i in corr.items():
        a, b = c.relations[i].terms[0][1].arrows
        rels.append(monomial(bq, (b, name)))
        rels.append(monomial(bq, (name, a)))
    return ExtensionPair(c, Presentation(bq, tuple(rels)), frozenset(corr), corr)


def find_forbidden_walk(pair: ExtensionPair, b_basis: AlgebraBasis) -> Walk | None:
    """A walk ``new . w' . new`` with ``w'`` all-old and no zero relation of B along it.

    Both new arrows are traversed forward; ``w'`` may be trivial and the two
    new arrows may coincide.  Every maximal directed run of the whole walk,
    junctions with the new arrows included, must be nonzero in B.
    """
    bq = pair.b_presentation.quiver
    old = set(pair.old_arrows())

    def ok(run: tuple[str, ...]) -> bool:
        return not b_basis.is_zero(bq.path(run))

    for first in sorted(pair.new_arrows):
        a = bq.arrow(first)
        walks = nonzero_walks(bq, a.source, ok, 2 * len(bq.arrows) + 1, allowed=old,
                              first_step=(first, FORWARD))
        for w in walks:
            end = bq.walk_end(w)
            last_run = maximal_segments(w)[-1]
            for second in sorted(pair.new_arrows):
                if bq.arrow(second).source != end:
                    continue
                if last_run[0] == FORWARD and not ok(last_run[1] + (second,)):
                    continue
                return Walk(a.source, w.steps + ((second, FORWARD),))
    return None


def validate_pair(pair: ExtensionPair, max_len: int = DEFAULT_MAX_LEN) -> list[str]:
    c, b = pair.c_presentation, pair.b_presentation
    cq, bq = c.quiver, b.quiver
    diags = [f"C: {d}" for d in validate(c)] + [f"B: {d}" for d in validate(b)]
    if set(cq.vertices) != set(bq.vertices):
        diags.append("vertex sets of B and C differ")
    for name in pair.new_arrows:
        if not bq.has_arrow(name):
            diags.append(f"new arrow {name!r} is not an arrow of B")
    old_b = {(a.name, a.source, a.target) for a in bq.arrows if a.name not in pair.new_arrows}
    old_c = {(a.name, a.source, a.target) for a in cq.arrows}
    if old_b != old_c:
        diags.append("old arrows of B do not match the arrows of C")
    used = Counter()
    for name in sorted(pair.new_arrows):
        if name not in pair.correspondence:
            diags.append(f"new arrow {name!r} has no corresponding relation")
            continue
        i = pair.correspondence[name]
        if not 0 <= i < len(c.relations):
            diags.append(f"new arrow {name!r} corresponds to missing relation {i}")
            continue
        used[i] += 1
        if bq.has_arrow(name):
            a = bq.arrow(name)
            rho = c.relations[i]
            if (a.source, a.target) != (rho.target, rho.source):
                diags.append(f"new arrow {name!r} must run from t(rho_{i}) to s(rho_{i})")
    for name in pair.correspondence:
        if name not in pair.new_arrows:
            diags.append(f"correspondence names {name!r}, which is not tagged new")
    for i in range(len(c.relations)):
        if used[i] != 1:
            diags.append(f"relation {i} has {used[i]} new arrows (expected 1)")
    if diags:
        return diags
    try:
        compute_basis(c, max_len)
    except NotCertifiedError as exc:
        return [f"C: {exc}"]
    try:
        b_basis = compute_basis(b, max_len)
    except NotCertifiedError as exc:
        return [f"B: {exc}"]
    w = find_forbidden_walk(pair, b_basis)
    if w is not None:
        diags.append(f"forbidden walk between new arrows through a nonzero old walk: {w}")
    return diags


def _generates(basis: AlgebraBasis, relations) -> bool:
    return all(not basis.reduce_combination(rho.terms) for rho in relations)


def verify_system(c: Presentation, r: SystemOfRelations, check_minimal: bool = False,
                  max_len: int = DEFAULT_MAX_LEN) -> dict:
    """Does ``r`` generate the ideal of ``c`` (and is it minimal)?"""
    c_basis = compute_basis(c, max_len)
    report = {"generates": False, "minimal": None}
    try:
        r_basis = compute_basis(c.with_relations(r.relations), max_len)
    except NotCertifiedError:
        r_basis = None
    if r_basis is not None:
        report["generates"] = _generates(c_basis, r.relations) and _generates(r_basis, c.relations)
    if check_minimal:
        minimal = True
        for i, rho in enumerate(r.relations):
            rest = r.relations[:i] + r.relations[i + 1:]
            try:
                rest_basis = compute_basis(c.with_relations(rest), max_len)
            except NotCertifiedError:
                continue
            if not rest_basis.reduce_combination(rho.terms):
                minimal = False
                break
        report["minimal"] = minimal
    return report
