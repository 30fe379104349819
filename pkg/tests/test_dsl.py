from fractions import Fraction
from pathlib import Path

import pytest

from hhquiver import corpus, dsl

FIX = Path(__file__).parent / "fixtures"


def test_parse_kronecker():
    pf = dsl.parse(FIX / "kronecker.q")
    q = pf.parsed.quiver
    assert len(q.vertices) == 2 and len(q.arrows) == 2 and pf.parsed.relations == ()
    assert pf.new_arrows == frozenset()


def test_parse_b_half(tilde_pair):
    pf = dsl.parse(FIX / "tilde.b.q")
    assert pf.new_arrows == {"delta", "delta'"}
    assert pf.correspondences == {"delta": 0, "delta'": 1}
    assert pf.parsed == tilde_pair.b_presentation


def test_parse_rational_coefficient():
    (rel,) = dsl.parse(FIX / "square.q").parsed.relations
    assert [c for c, _ in rel.terms] == [1, Fraction(-3, 2)]


def err(text):
    with pytest.raises(dsl.ParseError) as info:
        dsl.parse_text(text, "t.q")
    return info.value


BASE = "vertex 1\nvertex 2\nvertex 3\narrow alpha 1 2\narrow beta 2 3\n"


def test_length_one_term():
    e = err(BASE + "rel alpha\n")
    assert e.message == "relation term of length < 2"
    assert (e.line, e.column) == (6, 5)
    assert str(e).startswith("t.q:6:5:")


def test_unknown_vertex():
    e = err("vertex 1\narrow a 1 9\n")
    assert "unknown vertex" in e.message and (e.line, e.column) == (2, 11)


def test_non_composable():
    e = err(BASE + "rel beta.alpha\n")
    assert "non-composable" in e.message and e.column == 10


def test_duplicate_name():
    assert "duplicate name" in err("vertex 1\nvertex 1\n").message
    assert "duplicate name" in err(BASE + "arrow alpha 1 2\n").message


def test_syntax_errors():
    assert err("vertex\n").message.startswith("syntax error")
    assert err("frob 1\n").message.startswith("syntax error")
    assert err(BASE + "rel alpha.beta +\n").message.startswith("syntax error")
    assert err(BASE + "rel alpha.beta $\n").message.startswith("syntax error")
    assert err("vertex 1\nvertex 2\narrow a 1 2 old\n").message.startswith("syntax error")


def test_relation_checks():
    text = BASE + "vertex 4\narrow gamma 2 4\n"
    assert err(text + "rel alpha.beta - alpha.gamma\n").message == "terms not parallel"
    assert "repeated term" in err(BASE + "rel alpha.beta - alpha.beta\n").message


def test_corresponds_checks():
    assert "not tagged new" in err(BASE + "rel alpha.beta\ncorresponds alpha 0\n").message
    assert "unknown arrow" in err(BASE + "corresponds zz 0\n").message


def test_comments_and_blank_lines():
    pf = dsl.parse_text("# header\n\nvertex 1  # trailing\n")
    assert pf.parsed.quiver.vertices == ("1",)


def _all_corpus():
    out = []
    for spec in [corpus.CorpusSpec("kronecker"), corpus.CorpusSpec("triangle_bypass"),
                 corpus.CorpusSpec("cd", d=4), corpus.CorpusSpec("tildeA_example"),
                 corpus.CorpusSpec("random_gentle_tree", vertices=7, seed=3, count=5),
                 corpus.CorpusSpec("random_gentle_atilde", vertices=7, seed=3, count=5)]:
        out.extend(corpus.generate_corpus(spec))
    return out


@pytest.mark.parametrize("stem,pair", _all_corpus())
def test_round_trip(stem, pair):
    c = dsl.parse_text(dsl.emit(pair.c_presentation))
    assert c.parsed == pair.c_presentation
    b = dsl.parse_text(dsl.emit(pair.b_presentation, pair.new_arrows, pair.correspondence))
    assert b.parsed == pair.b_presentation
    assert b.new_arrows == pair.new_arrows and b.correspondences == pair.correspondence


def test_round_trip_coefficients():
    pf = dsl.parse(FIX / "square.q")
    assert dsl.parse_text(dsl.emit_file(pf)).parsed == pf.parsed
