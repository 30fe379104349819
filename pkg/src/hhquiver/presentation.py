"""Bound quiver presentations ``kQ/I`` given by a generating list of relations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .quiver import Path, Quiver


@dataclass(frozen=True)
class Relation:
    """Linear combination of parallel paths: ``terms = ((coef, path), ...)``."""

    terms: tuple[tuple[Fraction, Path], ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple((Fraction(c), p) for c, p in self.terms))

    @property
    def source(self) -> str:
        return self.terms[0][1].source

    @property
    def target(self) -> str:
        return self.terms[0][1].target

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    @property
    def is_binomial(self) -> bool:
        return len(self.terms) == 2

    def paths(self) -> list[Path]:
        return [p for _, p in self.terms]

    def __str__(self) -> str:
        out = []
        for i, (c, p) in enumerate(self.terms):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = str(p) if mag == 1 else f"{mag}*{p}"
            out.append((sign + " " if i else ("-" if c < 0 else "")) + body)
        return " ".join(out)


@dataclass(frozen=True)
class Presentation:
    quiver: Quiver
    relations: tuple[Relation, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "relations", tuple(self.relations))

    def with_relations(self, relations: Iterable[Relation]) -> "Presentation":
        return Presentation(self.quiver, tuple(relations))

    def relation_paths(self) -> set[tuple[str, ...]]:
        """Arrow tuples of monomial relations."""
        return {r.terms[0][1].arrows for r in self.relations if r.is_monomial}


def monomial(q: Quiver, path: str | Sequence[str]) -> Relation:
    return Relation(((Fraction(1), q.path(path)),))


def binomial(q: Quiver, left: str, right: str, coef: Fraction | int = -1) -> Relation:
    """``left + coef*right``; the default gives a commutativity relation."""
    return Relation(((Fraction(1), q.path(left)), (Fraction(coef), q.path(right))))


def validate(p: Presentation) -> list[str]:
    """Diagnostics for malformed relations; an empty list means the presentation is usable."""
    q = p.quiver
    diags = []
    for i, rel in enumerate(p.relations):
        where = f"relation {i}"
        if not rel.terms:
            diags.append(f"{where}: empty relation")
            continue
        ok = True
        for c, path in rel.terms:
            if c == 0:
                diags.append(f"{where}: zero coefficient")
            try:
                if path.is_trivial:
                    q.trivial(path.source)
                else:
                    rebuilt = q.path(path.arrows)
                    if (rebuilt.source, rebuilt.target) != (path.source, path.target):
                        diags.append(f"{where}: path {path} has wrong endpoints")
                        ok = False
            except (KeyError, ValueError) as exc:
                diags.append(f"{where}: {exc.args[0]}")
                ok = False
            if len(path) < 2:
                diags.append(f"{where}: relation term of length < 2")
        if not ok:
            continue
        ends = {(path.source, path.target) for _, path in rel.terms}
        if len(ends) > 1:
            diags.append(f"{where}: terms not parallel")
        if len({path for _, path in rel.terms}) != len(rel.terms):
            diags.append(f"{where}: repeated term path")
    return diags


def tits_form(p: Presentation, v: Sequence[int] | dict) -> Fraction:
    """``sum v_x^2 - sum_{arrows} v_s v_t + sum_{relations} v_s v_t``."""
    verts = p.quiver.vertices
    if isinstance(v, dict):
        if set(v) != set(verts):
            raise ValueError("vector must have one entry per vertex")
        val = {x: Fraction(v[x]) for x in verts}
    else:
        if len(v) != len(verts):
            raise ValueError(f"vector has {len(v)} entries, quiver has {len(verts)} vertices")
        val = {x: Fraction(c) for x, c in zip(verts, v)}
    total = sum((c * c for c in val.values()), Fraction(0))
    total -= sum((val[a.source] * val[a.target] for a in p.quiver.arrows), Fraction(0))
    total += sum((val[r.source] * val[r.target] for r in p.relations), Fraction(0))
    return total
