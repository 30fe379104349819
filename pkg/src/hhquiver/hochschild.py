"""HH^1 as normalized derivations modulo normalized inner derivations.

Two routes:

* :func:`hh1_oracle` solves the Leibniz constraints for arbitrary arrow
  images ``delta(a) in e_s B e_t`` and ranks the inner derivations over
  ``sum_x e_x B e_x``.  Works for any certified presentation.
* :func:`hh1_schurian` uses that in a schurian algebra every normalized
  derivation is diagonal, ``delta(a) = lam_a * a``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from . import linalg
from .algebra import AlgebraBasis, Element
from .classify import classify
from .quiver import Path

if TYPE_CHECKING:
    from .relext import ExtensionPair

ORACLE = "oracle"
SCHURIAN = "schurian"


class PreconditionError(ValueError):
    """A method was asked to run on an input outside its hypotheses."""


@dataclass(frozen=True)
class HH1Report:
    dim_der0: int
    dim_int0: int
    hh1_dim: int
    method: str

    def __post_init__(self):
        if self.hh1_dim != self.dim_der0 - self.dim_int0:
            raise ValueError("hh1_dim must equal dim_der0 - dim_int0")


@dataclass(frozen=True, eq=False)
class DerivationValue:
    """Normalized derivation given on arrows; images are sparse basis coordinates."""

    assignment: dict[str, Element]


@dataclass(frozen=True)
class DiagonalDerivation:
    lam: dict[str, Fraction]

    def __getitem__(self, arrow: str) -> Fraction:
        return self.lam.get(arrow, Fraction(0))


@dataclass(frozen=True)
class InnerElement:
    coefficients: dict[str, Fraction]


# ---- general derivations --------------------------------------------------

def derivation_of_path(b: AlgebraBasis, delta: DerivationValue, path: Path) -> Element:
    """Leibniz extension ``sum_i a_1..delta(a_i)..a_t`` reduced in ``b``."""
    out: dict[int, Fraction] = defaultdict(Fraction)
    arrows = path.arrows
    for i, name in enumerate(arrows):
        image = delta.assignment.get(name, {})
        for j, c in image.items():
            bj = b.basis_paths[j]
            full = Path(path.source, path.target, arrows[:i] + bj.arrows + arrows[i + 1:])
            for k, x in b.reduce(full).items():
                out[k] += c * x
    return {k: x for k, x in out.items() if x != 0}


def apply_derivation(b: AlgebraBasis, delta: DerivationValue, element: Element) -> Element:
    out: dict[int, Fraction] = defaultdict(Fraction)
    for i, c in element.items():
        for k, x in derivation_of_path(b, delta, b.basis_paths[i]).items():
            out[k] += c * x
    return {k: x for k, x in out.items() if x != 0}


def _arrow_variables(b: AlgebraBasis) -> list[tuple[str, int]]:
    return [(a.name, j) for a in b.quiver.arrows for j in b.block(a.source, a.target)]


def _leibniz_matrix(b: AlgebraBasis, variables: list[tuple[str, int]]) -> list[list[Fraction]]:
    col = {v: i for i, v in enumerate(variables)}
    rows = []
    for rel in b.presentation.relations:
        eqs: dict[int, dict[int, Fraction]] = defaultdict(lambda: defaultdict(Fraction))
        for coef, w in rel.terms:
            for i, name in enumerate(w.arrows):
                a = b.quiver.arrow(name)
                for j in b.block(a.source, a.target):
                    bj = b.basis_paths[j]
                    full = Path(w.source, w.target, w.arrows[:i] + bj.arrows + w.arrows[i + 1:])
                    for k, x in b.reduce(full).items():
                        eqs[k][col[(name, j)]] += coef * x
        for eq in eqs.values():
            row = [Fraction(0)] * len(variables)
            for c, x in eq.items():
                row[c] = x
            if any(row):
                rows.append(row)
    return rows


def make_derivation(b: AlgebraBasis, assignment: dict[str, Element]) -> DerivationValue:
    """Build a :class:`DerivationValue`, checking blocks and that every relation is killed."""
    q = b.quiver
    for name, image in assignment.items():
        a = q.arrow(name)
        allowed = set(b.block(a.source, a.target))
        if any(i not in allowed for i, c in image.items() if c != 0):
            raise ValueError(f"image of {name!r} leaves e_{a.source} B e_{a.target}")
    delta = DerivationValue({k: dict(v) for k, v in assignment.items()})
    for rel in b.presentation.relations:
        total: dict[int, Fraction] = defaultdict(Fraction)
        for c, w in rel.terms:
            for k, x in derivation_of_path(b, delta, w).items():
                total[k] += c * x
        if any(x != 0 for x in total.values()):
            raise ValueError(f"assignment does not annihilate relation {rel}")
    return delta


def der0_basis(b: AlgebraBasis) -> list[DerivationValue]:
    variables = _arrow_variables(b)
    rows = _leibniz_matrix(b, variables)
    out = []
    for v in linalg.kernel_basis(rows, len(variables)):
        assignment: dict[str, Element] = {a.name: {} for a in b.quiver.arrows}
        for (name, j), x in zip(variables, v):
            if x != 0:
                assignment[name][j] = x
        out.append(DerivationValue(assignment))
    return out


def der0_dim(b: AlgebraBasis) -> int:
    variables = _arrow_variables(b)
    return len(variables) - linalg.rank(_leibniz_matrix(b, variables), len(variables))


def int0_dim(b: AlgebraBasis) -> int:
    """Rank of ``a -> (a x - x a)_arrows`` over ``a in sum_x e_x B e_x``."""
    q = b.quiver
    diag = [i for i, p in enumerate(b.basis_paths) if p.source == p.target]
    if not diag:
        return 0
    rows = []
    for a in q.arrows:
        arrow = q.path([a.name])
        eqs: dict[int, list[Fraction]] = defaultdict(lambda: [Fraction(0)] * len(diag))
        for col, i in enumerate(diag):
            bi = b.basis_paths[i]
            if bi.target == arrow.source:
                for k, x in b.reduce(q.compose(bi, arrow)).items():
                    eqs[k][col] += x
            if arrow.target == bi.source:
                for k, x in b.reduce(q.compose(arrow, bi)).items():
                    eqs[k][col] -= x
        rows.extend(r for r in eqs.values() if any(r))
    return linalg.rank(rows, len(diag))


def hh1_oracle(b: AlgebraBasis) -> HH1Report:
    d, i = der0_dim(b), int0_dim(b)
    return HH1Report(d, i, d - i, ORACLE)


# ---- schurian fast path ---------------------------------------------------

def diagonal_constraints(b: AlgebraBasis) -> list[list[Fraction]]:
    """Linear equations on ``lam`` (columns in quiver arrow order) from the relations."""
    arrows = [a.name for a in b.quiver.arrows]
    col = {a: i for i, a in enumerate(arrows)}
    rows = []
    for rel in b.presentation.relations:
        eqs: dict[int, list[Fraction]] = defaultdict(lambda: [Fraction(0)] * len(arrows))
        for coef, w in rel.terms:
            red = b.reduce(w)
            for name in w.arrows:
                for k, x in red.items():
                    eqs[k][col[name]] += coef * x
        rows.extend(r for r in eqs.values() if any(r))
    return rows


def _require_schurian(b: AlgebraBasis) -> None:
    report = classify(b)
    if not report.schurian:
        raise PreconditionError("not schurian")
    if not report.connected:
        raise PreconditionError("not connected")


def hh1_schurian(b: AlgebraBasis) -> HH1Report:
    _require_schurian(b)
    n = len(b.quiver.arrows)
    d = n - linalg.rank(diagonal_constraints(b), n)
    i = len(b.quiver.vertices) - 1
    return HH1Report(d, i, d - i, SCHURIAN)


def is_diagonal_derivation(b: AlgebraBasis, delta: DiagonalDerivation) -> bool:
    lam = [delta[a.name] for a in b.quiver.arrows]
    return all(x == 0 for x in linalg.mat_vec(diagonal_constraints(b), lam))


def diagonal_as_derivation(b: AlgebraBasis, delta: DiagonalDerivation) -> DerivationValue:
    q = b.quiver
    assignment = {}
    for a in q.arrows:
        lam = delta[a.name]
        assignment[a.name] = {k: lam * x for k, x in b.reduce(q.path([a.name])).items() if lam != 0}
    return DerivationValue(assignment)


def inner_derivation(b: AlgebraBasis, a: InnerElement) -> DiagonalDerivation:
    """``delta_a(x) = a x - x a`` for ``a = sum a_x e_x``: arrow ``s->t`` scales by ``a_s - a_t``."""
    z = Fraction(0)
    return DiagonalDerivation({
        ar.name: a.coefficients.get(ar.source, z) - a.coefficients.get(ar.target, z)
        for ar in b.quiver.arrows
    })


# ---- the maps zeta and phi ------------------------------------------------

def defining_sum(pair: "ExtensionPair", delta: DiagonalDerivation, new_arrow: str) -> Fraction:
    """``sum lam_beta`` along the C-relation that defines ``new_arrow``.

    Every term path of the relation must give the same value.
    """
    rel = pair.c_presentation.relations[pair.correspondence[new_arrow]]
    sums = {sum((delta[x] for x in w.arrows), Fraction(0)) for _, w in rel.terms}
    if len(sums) != 1:
        raise ValueError(f"ambiguous defining sum for new arrow {new_arrow!r}")
    return sums.pop()


def extend_derivation(pair: "ExtensionPair", delta: DiagonalDerivation) -> DiagonalDerivation:
    """The map zeta: keep old arrows, new arrows get minus the defining sum."""
    lam = {a.name: delta[a.name] for a in pair.c_presentation.quiver.arrows}
    for new in sorted(pair.new_arrows):
        lam[new] = -defining_sum(pair, delta, new)
    return DiagonalDerivation(lam)


def restrict_to_c(pair: "ExtensionPair", delta: DiagonalDerivation) -> DiagonalDerivation:
    return DiagonalDerivation({a.name: delta[a.name] for a in pair.c_presentation.quiver.arrows})


def project_new_components(
    pair: "ExtensionPair", delta: DiagonalDerivation, reps: list[str]
) -> list[Fraction]:
    """The map phi: coefficient of ``delta - zeta(delta|_C)`` on each representative."""
    out = []
    for r in reps:
        if r not in pair.new_arrows:
            raise ValueError(f"{r!r} is not a new arrow")
        out.append(delta[r] + defining_sum(pair, delta, r))
    return out
