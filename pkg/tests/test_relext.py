import random
from dataclasses import replace

import pytest

from hhquiver import corpus
from hhquiver.classify import is_gentle
from hhquiver.presentation import Presentation, monomial
from hhquiver.quiver import quiver
from hhquiver.relext import (ExtensionPair, SystemOfRelations, auto_relext_gentle, relext_quiver,
                             validate_pair, verify_system)


def a3():
    q = quiver("123", [("alpha1", "1", "2"), ("beta1", "2", "3")])
    return Presentation(q, (monomial(q, "alpha1.beta1"),))


def test_relext_quiver_c1():
    q, corr = relext_quiver(a3())
    (new,) = corr
    a = q.arrow(new)
    assert (a.source, a.target) == ("3", "1")
    assert len(q.arrows) == 3 and not q.is_acyclic()


def test_relext_quiver_tilde(tilde_pair):
    q, corr = relext_quiver(tilde_pair.c_presentation)
    ends = sorted((q.arrow(n).source, q.arrow(n).target) for n in corr)
    assert ends == [("2", "4"), ("6", "4")]


def test_relext_quiver_hereditary(kronecker):
    q, corr = relext_quiver(kronecker)
    assert corr == {} and q == kronecker.quiver


def test_relext_with_system():
    c = a3()
    q, corr = relext_quiver(c, SystemOfRelations(c.relations))
    assert len(corr) == 1
    bad = SystemOfRelations(())
    with pytest.raises(ValueError, match="does not generate"):
        relext_quiver(c, bad)


def test_auto_c1_is_bound_cycle():
    pair = auto_relext_gentle(a3())
    (new,) = pair.new_arrows
    assert {str(r) for r in pair.b_presentation.relations} == {
        "alpha1.beta1", f"beta1.{new}", f"{new}.alpha1"}


def test_auto_tilde_matches_hand_written(tilde_pair):
    pair = auto_relext_gentle(tilde_pair.c_presentation)
    rename = {"nw_0": "delta", "nw_1": "delta'"}
    got = set()
    for r in pair.b_presentation.relations:
        got.add(".".join(rename.get(x, x) for x in r.terms[0][1].arrows))
    assert got == {str(r) for r in tilde_pair.b_presentation.relations}
    assert len(got) == 6


def test_auto_hereditary_tree():
    c = Presentation(quiver("123", [("a", "1", "2"), ("b", "3", "2")]))
    pair = auto_relext_gentle(c)
    assert pair.b_presentation == c and not pair.new_arrows


def test_auto_rejects_non_tilted():
    q = quiver("12345", [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4"), ("d", "4", "5")])
    with pytest.raises(ValueError, match="not gentle tilted"):
        auto_relext_gentle(Presentation(q, (monomial(q, "a.b"), monomial(q, "c.d"))))


def test_validate_pair_clean(tilde_pair):
    assert validate_pair(tilde_pair) == []
    assert validate_pair(corpus.hereditary_pair(corpus.kronecker())) == []


def double_zero_pair():
    """A5 with a.b and c.d: the new arrows close 3-cycles joined at vertex 3."""
    arrows = [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4"), ("d", "4", "5")]
    cq = quiver("12345", arrows)
    c = Presentation(cq, (monomial(cq, "a.b"), monomial(cq, "c.d")))
    bq = quiver("12345", arrows + [("n0", "3", "1"), ("n1", "5", "3")])
    rels = tuple(monomial(bq, r) for r in ("a.b", "b.n0", "n0.a", "c.d", "d.n1", "n1.c"))
    return ExtensionPair(c, Presentation(bq, rels), frozenset({"n0", "n1"}), {"n0": 0, "n1": 1})


def test_validate_pair_forbidden_walk():
    diags = validate_pair(double_zero_pair())
    assert len(diags) == 1
    assert diags[0].startswith("forbidden walk between new arrows")
    assert "n1 n0" in diags[0]


def test_validate_pair_structural(tilde_pair):
    broken = replace(tilde_pair, correspondence={"delta": 0})
    assert any("no corresponding relation" in d for d in validate_pair(broken))
    flipped = replace(tilde_pair, correspondence={"delta": 1, "delta'": 0})
    assert any("must run from" in d for d in validate_pair(flipped))
    extra = replace(tilde_pair, new_arrows=frozenset({"delta", "delta'", "alpha"}))
    assert validate_pair(extra)


def test_auto_pairs_pass_validation():
    rng = random.Random(2)
    pairs = [auto_relext_gentle(corpus.zigzag(d)) for d in (1, 2, 3)]
    pairs += [auto_relext_gentle(corpus.random_gentle_tree(rng.randint(2, 8), rng)) for _ in range(20)]
    pairs += [auto_relext_gentle(corpus.random_gentle_atilde(rng.randint(2, 8), rng)) for _ in range(10)]
    for pair in pairs:
        assert validate_pair(pair) == []
        assert is_gentle(pair.b_presentation)
        assert len(pair.new_arrows) == pair.relation_count
        # dropping the new arrows recovers the quiver of C
        old = tuple(a for a in pair.b_presentation.quiver.arrows if a.name not in pair.new_arrows)
        assert old == pair.c_presentation.quiver.arrows


def test_verify_system_examples():
    c = a3()
    assert verify_system(c, SystemOfRelations(c.relations), check_minimal=True) == {
        "generates": True, "minimal": True}
    q = quiver("1234", [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4")])
    c2 = Presentation(q, (monomial(q, "a.b"),))
    redundant = SystemOfRelations((monomial(q, "a.b"), monomial(q, "a.b.c")))
    rep = verify_system(c2, redundant, check_minimal=True)
    assert rep["generates"] and rep["minimal"] is False
    two = Presentation(q, (monomial(q, "a.b"), monomial(q, "b.c")))
    assert verify_system(two, SystemOfRelations((monomial(q, "a.b"),)))["generates"] is False
