"""Line-oriented presentation files.

Grammar (one statement per line, ``#`` starts a comment)::

    vertex NAME
    arrow NAME SRC TGT [new]
    rel TERM ((+|-) TERM)*
    corresponds NEWARROW INT

    TERM     := [RATIONAL '*'] NAME ('.' NAME)*
    RATIONAL := INT ['/' POSINT]

Names are declared before use.  Paths compose left to right.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path as FsPath

from .presentation import Presentation, Relation
from .quiver import Arrow, Path, Quiver

OLD = "old"
NEW = "new"

_TOKEN = re.compile(
    r"(?P<num>\d+(?:/\d+)?)(?=\s*\*)"
    r"|(?P<name>[\w']+)"
    r"|(?P<op>[*+\-.])"
    r"|(?P<bad>\S)"
)


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int, source: str = "<string>"):
        super().__init__(f"{source}:{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass
class PresentationFile:
    path: str
    parsed: Presentation
    arrow_tags: dict[str, str] = field(default_factory=dict)
    correspondences: dict[str, int] = field(default_factory=dict)

    @property
    def new_arrows(self) -> frozenset[str]:
        return frozenset(a for a, t in self.arrow_tags.items() if t == NEW)


def _tokens(text: str) -> list[tuple[str, str, int]]:
    out = []
    for m in _TOKEN.finditer(text):
        kind = m.lastgroup
        out.append((kind, m.group(), m.start() + 1))
    return out


class _LineParser:
    def __init__(self, toks, lineno, source):
        self.toks = toks
        self.i = 0
        self.lineno = lineno
        self.source = source
        self.end_col = (toks[-1][2] + len(toks[-1][1])) if toks else 1

    def error(self, msg, col=None):
        if col is None:
            col = self.toks[self.i][2] if self.i < len(self.toks) else self.end_col
        raise ParseError(msg, self.lineno, col, self.source)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, self.end_col)

    def take(self, kind=None, value=None, what="token"):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            self.error(f"syntax error: expected {what}")
        self.i += 1
        return tok

    def done(self):
        if self.i != len(self.toks):
            self.error("syntax error: unexpected trailing input")


def parse_text(text: str, source: str = "<string>") -> PresentationFile:
    vertices: list[str] = []
    arrows: list[Arrow] = []
    by_name: dict[str, Arrow] = {}
    tags: dict[str, str] = {}
    corr: dict[str, int] = {}
    rel_specs = []  # (lineno, col, [(coef, [names], col)])

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = _tokens(line)
        if not toks:
            continue
        lp = _LineParser(toks, lineno, source)
        for kind, val, col in toks:
            if kind == "bad":
                raise ParseError(f"syntax error: unexpected character {val!r}", lineno, col, source)
        _, keyword, kcol = lp.take("name", what="keyword")

        if keyword == "vertex":
            _, name, col = lp.take("name", what="vertex name")
            lp.done()
            if name in vertices or name in by_name:
                raise ParseError(f"duplicate name {name!r}", lineno, col, source)
            vertices.append(name)

        elif keyword == "arrow":
            _, name, col = lp.take("name", what="arrow name")
            ends = []
            for _ in range(2):
                _, v, vcol = lp.take("name", what="vertex name")
                if v not in vertices:
                    raise ParseError(f"unknown vertex {v!r}", lineno, vcol, source)
                ends.append(v)
            tag = OLD
            if lp.peek()[0] is not None:
                _, flag, fcol = lp.take("name", what="'new'")
                if flag != "new":
                    raise ParseError(f"syntax error: unknown arrow flag {flag!r}", lineno, fcol, source)
                tag = NEW
            lp.done()
            if name in by_name or name in vertices:
                raise ParseError(f"duplicate name {name!r}", lineno, col, source)
            a = Arrow(name, ends[0], ends[1])
            arrows.append(a)
            by_name[name] = a
            tags[name] = tag

        elif keyword == "rel":
            terms = []
            sign = 1
            if lp.peek()[1] in ("+", "-"):
                sign = -1 if lp.take("op")[1] == "-" else 1
            while True:
                tcol = lp.peek()[2]
                coef = Fraction(1)
                if lp.peek()[0] == "num":
                    num = lp.take("num")[1]
                    coef = Fraction(num)
                    lp.take("op", "*", what="'*'")
                names = [lp.take("name", what="arrow name")]
                while lp.peek()[1] == ".":
                    lp.take("op", ".")
                    names.append(lp.take("name", what="arrow name"))
                terms.append((sign * coef, names, tcol))
                if lp.peek()[0] is None:
                    break
                op = lp.take("op", what="'+' or '-'")
                if op[1] not in ("+", "-"):
                    lp.error("syntax error: expected '+' or '-'", op[2])
                sign = -1 if op[1] == "-" else 1
            rel_specs.append((lineno, kcol, terms))

        elif keyword == "corresponds":
            _, name, col = lp.take("name", what="new arrow name")
            _, idx, icol = lp.take("name", what="relation index")
            lp.done()
            if not idx.isdigit():
                raise ParseError("syntax error: relation index must be a non-negative integer", lineno, icol, source)
            if name not in by_name:
                raise ParseError(f"unknown arrow {name!r}", lineno, col, source)
            if tags[name] != NEW:
                raise ParseError(f"arrow {name!r} is not tagged new", lineno, col, source)
            if name in corr:
                raise ParseError(f"duplicate correspondence for {name!r}", lineno, col, source)
            corr[name] = int(idx)

        else:
            raise ParseError(f"syntax error: unknown keyword {keyword!r}", lineno, kcol, source)

    q = Quiver(tuple(vertices), tuple(arrows))
    relations = []
    for lineno, kcol, terms in rel_specs:
        built = []
        for coef, names, tcol in terms:
            arrs = []
            for _, n, ncol in names:
                if n not in by_name:
                    raise ParseError(f"unknown arrow {n!r}", lineno, ncol, source)
                arrs.append(by_name[n])
            for k in range(1, len(arrs)):
                if arrs[k - 1].target != arrs[k].source:
                    raise ParseError(
                        f"non-composable path: {arrs[k - 1].name!r} then {arrs[k].name!r}",
                        lineno, names[k][2], source,
                    )
            if len(arrs) < 2:
                raise ParseError("relation term of length < 2", lineno, tcol, source)
            if coef == 0:
                raise ParseError("zero coefficient", lineno, tcol, source)
            path = Path(arrs[0].source, arrs[-1].target, tuple(a.name for a in arrs))
            built.append((coef, path, tcol))
        ends = {(p.source, p.target) for _, p, _ in built}
        if len(ends) > 1:
            raise ParseError("terms not parallel", lineno, kcol, source)
        seen = set()
        for _, p, tcol in built:
            if p in seen:
                raise ParseError(f"repeated term {p}", lineno, tcol, source)
            seen.add(p)
        relations.append(Relation(tuple((c, p) for c, p, _ in built)))
    return PresentationFile(source, Presentation(q, tuple(relations)), tags, corr)


def parse(path) -> PresentationFile:
    path = FsPath(path)
    return parse_text(path.read_text(encoding="utf-8"), str(path))


def _fmt_coef(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_relation(rel: Relation) -> str:
    parts = []
    for i, (c, p) in enumerate(rel.terms):
        body = ".".join(p.arrows)
        if abs(c) != 1:
            body = f"{_fmt_coef(abs(c))}*{body}"
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def emit(p: Presentation, new_arrows=(), correspondences: dict[str, int] | None = None,
         header: str | None = None) -> str:
    lines = []
    if header:
        lines.extend(f"# {h}" for h in header.splitlines())
    lines.extend(f"vertex {v}" for v in p.quiver.vertices)
    new_arrows = set(new_arrows)
    for a in p.quiver.arrows:
        flag = " new" if a.name in new_arrows else ""
        lines.append(f"arrow {a.name} {a.source} {a.target}{flag}")
    lines.extend(f"rel {format_relation(r)}" for r in p.relations)
    for name, i in sorted((correspondences or {}).items(), key=lambda kv: (kv[1], kv[0])):
        lines.append(f"corresponds {name} {i}")
    return "\n".join(lines) + "\n"


def emit_file(pf: PresentationFile, header: str | None = None) -> str:
    return emit(pf.parsed, pf.new_arrows, pf.correspondences, header)
