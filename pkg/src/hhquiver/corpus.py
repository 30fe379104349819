"""Built-in example presentations and seeded random gentle corpora."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from pathlib import Path as FsPath

from . import dsl
from .classify import TYPE_A, TYPE_ATILDE, gentle_tilted_type
from .presentation import Presentation, monomial
from .quiver import Arrow, Quiver, quiver
from .relext import ExtensionPair, auto_relext_gentle

KINDS = ("kronecker", "triangle_bypass", "cd", "tildeA_example", "random_gentle_tree", "random_gentle_atilde")


@dataclass
class CorpusSpec:
    kind: str
    d: int = 1
    vertices: int = 6
    seed: int = 0
    count: int = 1
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown corpus kind {self.kind!r}")
        if self.kind == "cd" and self.d < 1:
            raise ValueError("cd requires d >= 1")
        if self.kind.startswith("random") and self.vertices < 2:
            raise ValueError("random corpora require vertices >= 2")


# ---- fixed examples -------------------------------------------------------

def kronecker() -> Presentation:
    return Presentation(quiver("xy", [("a", "x", "y"), ("b", "x", "y")]))


def triangle_bypass() -> Presentation:
    return Presentation(quiver("123", [("f", "1", "3"), ("g", "1", "2"), ("h", "2", "3")]))


def a2() -> Presentation:
    return Presentation(quiver("12", [("alpha", "1", "2")]))


def bound_three_cycle() -> Presentation:
    q = quiver("123", [("alpha", "1", "2"), ("beta", "2", "3"), ("delta", "3", "1")])
    return Presentation(q, (monomial(q, "alpha.beta"), monomial(q, "beta.delta"), monomial(q, "delta.alpha")))


def zigzag(d: int) -> Presentation:
    """The tilted algebra C_d: a zigzag of 2d+1 vertices bound by a_i.b_i.

    Relation ``i`` has its middle vertex at position ``2i-1``; odd relations
    run right to left, even ones left to right, so sources and sinks are
    shared by neighbouring relations.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    names = [str(k + 1) for k in range(2 * d + 1)]
    arrows = []
    for i in range(1, d + 1):
        mid = 2 * i - 1
        src, snk = (2 * i, 2 * i - 2) if i % 2 else (2 * i - 2, 2 * i)
        arrows.append((f"a{i}", names[src], names[mid]))
        arrows.append((f"b{i}", names[mid], names[snk]))
    q = quiver(names, arrows)
    return Presentation(q, tuple(monomial(q, (f"a{i}", f"b{i}")) for i in range(1, d + 1)))


def tilde_a_example() -> Presentation:
    """Six vertices on one unoriented cycle, bound by alpha.beta and alpha'.beta'."""
    q = quiver("123456", [
        ("alpha", "4", "3"), ("beta", "3", "2"), ("gamma", "2", "1"),
        ("alpha'", "4", "5"), ("beta'", "5", "6"), ("gamma'", "6", "1"),
    ])
    return Presentation(q, (monomial(q, "alpha.beta"), monomial(q, "alpha'.beta'")))


def tilde_a_example_b() -> ExtensionPair:
    """Hand-written relation-extension of :func:`tilde_a_example` with new arrows delta, delta'."""
    c = tilde_a_example()
    q = Quiver(c.quiver.vertices, c.quiver.arrows + (Arrow("delta", "2", "4"), Arrow("delta'", "6", "4")))
    rels = tuple(monomial(q, r) for r in (
        "alpha.beta", "beta.delta", "delta.alpha", "alpha'.beta'", "beta'.delta'", "delta'.alpha'"))
    return ExtensionPair(c, Presentation(q, rels), frozenset({"delta", "delta'"}), {"delta": 0, "delta'": 1})


def hereditary_pair(p: Presentation) -> ExtensionPair:
    """``B = C`` for a relation-free presentation."""
    return ExtensionPair(p, p, frozenset(), {})


# ---- random gentle presentations ------------------------------------------

def _gentle_relations(q: Quiver, rng: random.Random, p_free: float) -> list[tuple[str, str]]:
    """Length-2 zero relations meeting the gentle conditions vertex by vertex."""
    rels = []
    for v in q.vertices:
        ins = [a.name for a in q.incoming(v)]
        outs = [a.name for a in q.outgoing(v)]
        if not ins or not outs:
            continue
        if len(ins) == 2 and len(outs) == 2:
            if rng.random() < 0.5:
                rels += [(ins[0], outs[0]), (ins[1], outs[1])]
            else:
                rels += [(ins[0], outs[1]), (ins[1], outs[0])]
        elif len(ins) == 2:
            rels.append((rng.choice(ins), outs[0]))
        elif len(outs) == 2:
            rels.append((ins[0], rng.choice(outs)))
        elif rng.random() < p_free:
            rels.append((ins[0], outs[0]))
    return rels


def _orient(rng, u, v, indeg, outdeg):
    options = [(u, v), (v, u)]
    rng.shuffle(options)
    for s, t in options:
        if outdeg[s] < 2 and indeg[t] < 2:
            return s, t
    return None


def _grow_tree(rng, names, start, arrows, indeg, outdeg, attach_dir=None, anchors=None):
    """Attach ``names`` one by one to already placed vertices."""
    placed = list(start)
    for v in names:
        for _ in range(20):
            u = rng.choice(placed)
            if attach_dir is not None and u in anchors:
                s, t = (u, v) if attach_dir == "out" else (v, u)
                if outdeg[s] >= 2 or indeg[t] >= 2:
                    continue
                pair = (s, t)
            else:
                pair = _orient(rng, u, v, indeg, outdeg)
                if pair is None:
                    continue
            s, t = pair
            arrows.append((f"x{len(arrows) + 1}", s, t))
            outdeg[s] += 1
            indeg[t] += 1
            placed.append(v)
            break
        else:
            return False
    return True


def _build(rng, names, arrows) -> Presentation:
    q = quiver(names, arrows)
    density = rng.choice([0.0, 0.4, 0.8])
    rels = _gentle_relations(q, rng, density)
    return Presentation(q, tuple(monomial(q, r) for r in rels))


def random_gentle_tree(n: int, rng: random.Random, max_tries: int = 500) -> Presentation:
    """Gentle tree presentation certified tilted of type A."""
    names = [str(k + 1) for k in range(n)]
    for _ in range(max_tries):
        arrows = []
        indeg = {v: 0 for v in names}
        outdeg = {v: 0 for v in names}
        if not _grow_tree(rng, names[1:], names[:1], arrows, indeg, outdeg):
            continue
        p = _build(rng, names, arrows)
        if gentle_tilted_type(p) == TYPE_A:
            return p
    raise RuntimeError("could not generate a type A gentle tree")


def random_gentle_atilde(n: int, rng: random.Random, max_tries: int = 500) -> Presentation:
    """Gentle presentation with one non-oriented cycle, certified type A-tilde."""
    names = [str(k + 1) for k in range(n)]
    for _ in range(max_tries):
        k = rng.randint(2, min(n, 5))
        cyc = names[:k]
        arrows = []
        indeg = {v: 0 for v in names}
        outdeg = {v: 0 for v in names}
        dirs = [rng.random() < 0.5 for _ in range(k)]
        if all(dirs) or not any(dirs):
            if k > 2:
                continue
        ok = True
        for i in range(k):
            u, v = cyc[i], cyc[(i + 1) % k]
            if k == 2 and i == 1:
                # two parallel arrows, oriented the same way to avoid a 2-cycle
                s, t = (u, v) if dirs[0] else (v, u)
                s, t = t, s
            else:
                s, t = (u, v) if dirs[i] else (v, u)
            if outdeg[s] >= 2 or indeg[t] >= 2:
                ok = False
                break
            arrows.append((f"c{i + 1}", s, t))
            outdeg[s] += 1
            indeg[t] += 1
        if not ok:
            continue
        mode = rng.choice(["in", "out"])
        if not _grow_tree(rng, names[k:], cyc, arrows, indeg, outdeg, attach_dir=mode, anchors=set(cyc)):
            continue
        p = _build(rng, names, arrows)
        if gentle_tilted_type(p) == TYPE_ATILDE:
            return p
    raise RuntimeError("could not generate a type A-tilde gentle presentation")


# ---- corpus assembly ------------------------------------------------------

def generate_corpus(spec: CorpusSpec) -> list[tuple[str, ExtensionPair]]:
    if spec.kind == "kronecker":
        return [("kronecker", hereditary_pair(kronecker()))]
    if spec.kind == "triangle_bypass":
        return [("triangle_bypass", hereditary_pair(triangle_bypass()))]
    if spec.kind == "cd":
        return [(f"cd_{spec.d}", auto_relext_gentle(zigzag(spec.d)))]
    if spec.kind == "tildeA_example":
        return [("tildeA_example", tilde_a_example_b())]
    rng = random.Random(spec.seed)
    gen = random_gentle_tree if spec.kind == "random_gentle_tree" else random_gentle_atilde
    out = []
    for i in range(spec.count):
        c = gen(spec.vertices, rng)
        out.append((f"{spec.kind}_s{spec.seed}_{i:03d}", auto_relext_gentle(c)))
    return out


def write_pair(stem: str, pair: ExtensionPair, out_dir) -> tuple[FsPath, FsPath]:
    out_dir = FsPath(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    c_path = out_dir / f"{stem}.c.q"
    b_path = out_dir / f"{stem}.b.q"
    c_path.write_text(dsl.emit(pair.c_presentation, header=f"{stem}: tilted algebra C"), encoding="utf-8")
    b_path.write_text(
        dsl.emit(pair.b_presentation, pair.new_arrows, pair.correspondence,
                 header=f"{stem}: relation-extension B of C"),
        encoding="utf-8",
    )
    return c_path, b_path


def write_corpus(spec: CorpusSpec, out_dir) -> list[tuple[FsPath, FsPath]]:
    return [write_pair(stem, pair, out_dir) for stem, pair in generate_corpus(spec)]
