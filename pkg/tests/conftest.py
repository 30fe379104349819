from fractions import Fraction

import pytest

from hhquiver import corpus
from hhquiver.presentation import Presentation, binomial, monomial
from hhquiver.quiver import quiver
from hhquiver.relext import ExtensionPair


@pytest.fixture
def kronecker():
    return corpus.kronecker()


@pytest.fixture
def triangle():
    return corpus.triangle_bypass()


@pytest.fixture
def a2():
    return corpus.a2()


@pytest.fixture
def cycle3():
    return corpus.bound_three_cycle()


@pytest.fixture
def tilde_pair():
    return corpus.tilde_a_example_b()


def merging_pair() -> ExtensionPair:
    """Two parallel zero relations x->y whose new arrows meet in one binomial of B.

    Structural fixture only: C does not tie the lambda-sums of the two relation
    paths together, so zeta is not defined on it.
    """
    c_arrows = [("u", "w", "y"), ("p1", "x", "a"), ("p2", "a", "y"),
                ("q1", "x", "b"), ("q2", "b", "y"), ("v", "x", "z")]
    verts = ["w", "y", "a", "b", "x", "z"]
    cq = quiver(verts, c_arrows)
    c = Presentation(cq, (monomial(cq, "p1.p2"), monomial(cq, "q1.q2")))
    bq = quiver(verts, c_arrows + [("al1", "y", "x"), ("al2", "y", "x")])
    rels = tuple(monomial(bq, r) for r in ("p1.p2", "q1.q2", "p2.al1", "al1.p1", "q2.al2", "al2.q1"))
    rels += (binomial(bq, "u.al1.v", "u.al2.v"),)
    return ExtensionPair(c, Presentation(bq, rels), frozenset({"al1", "al2"}), {"al1": 0, "al2": 1})


@pytest.fixture
def merging():
    return merging_pair()


def F(x):
    return Fraction(x)
