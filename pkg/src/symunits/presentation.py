"""Finite presentations: a small text grammar and Todd-Coxeter enumeration.

Grammar::

    # comment
    gens: x y u
    x^4 = y^4 = 1
    x^2 = [y,x]
    (x*y)^-2 x y

Juxtaposition or ``*`` multiplies, ``^k`` is an integer power (never
conjugation), ``[a,b]`` is ``a^-1 b^-1 a b`` and ``[a,b,c] = [[a,b],c]``,
``1`` is the empty word.  An equation chain ``w1 = w2 = ... = wk`` yields the
relators ``w1 w2^-1, ..., w(k-1) wk^-1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from .groups import Group

DEFAULT_MAX_COSETS = 100_000

Word = tuple[tuple[int, int], ...]


class PresentationError(ValueError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line, self.col = line, col
        where = f"line {line}, column {col}: " if line is not None else ""
        super().__init__(where + message)


class CosetLimitExceeded(RuntimeError):
    pass


def normalize(word) -> Word:
    """Free reduction, merging adjacent powers of the same generator."""
    out: list[list[int]] = []
    for g, e in word:
        if e == 0:
            continue
        if out and out[-1][0] == g:
            out[-1][1] += e
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([g, e])
    return tuple((g, e) for g, e in out)


def invert(word: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(word))


def word_power(word: Word, k: int) -> Word:
    base = word if k > 0 else invert(word)
    return normalize(base * abs(k))


def commutator(a: Word, b: Word) -> Word:
    return normalize(invert(a) + invert(b) + a + b)


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise PresentationError("generator names must be distinct")
        for r in self.relators:
            for g, e in r:
                if not 0 <= g < len(self.generators) or e == 0:
                    raise PresentationError("relator references an unknown generator")

    def format_word(self, word: Word) -> str:
        if not word:
            return "1"
        return "*".join(
            self.generators[g] if e == 1 else f"{self.generators[g]}^{e}" for g, e in word
        )

    def format(self) -> str:
        lines = ["gens: " + " ".join(self.generators)]
        lines += [self.format_word(r) for r in self.relators]
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_']*)|(?P<op>[\^\-*=\[\](),]))"
)


class _Parser:
    def __init__(self, text: str, lineno: int, offset: int, gens: dict[str, int]):
        self.lineno = lineno
        self.gens = gens
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise PresentationError(f"unexpected character {text[pos]!r}", lineno, offset + pos + 1)
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), offset + m.start(kind) + 1))
            pos = m.end()
            while pos < len(text) and text[pos].isspace():
                pos += 1
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, None)

    def error(self, msg, col=None):
        if col is None:
            col = self.peek()[2]
            if col is None:
                col = (self.tokens[-1][2] + len(self.tokens[-1][1])) if self.tokens else 1
        raise PresentationError(msg, self.lineno, col)

    def expect(self, op):
        kind, val, col = self.peek()
        if kind != "op" or val != op:
            self.error(f"expected {op!r}")
        self.i += 1

    def equation(self) -> list[Word]:
        sides = [self.word()]
        while self.peek()[1] == "=":
            self.i += 1
            sides.append(self.word())
        if self.i != len(self.tokens):
            self.error(f"unexpected token {self.peek()[1]!r}")
        if len(sides) == 1:
            return [sides[0]]
        return [normalize(a + invert(b)) for a, b in zip(sides, sides[1:])]

    def word(self) -> Word:
        parts: list[Word] = []
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                if not parts:
                    self.error("'*' without a left operand")
                self.i += 1
                parts.append(self.factor())
            elif kind in ("int", "name") or (kind == "op" and val in "(["):
                parts.append(self.factor())
            else:
                break
        if not parts:
            self.error("expected a word")
        return normalize(sum(parts, ()))

    def factor(self) -> Word:
        prefix: Word = ()
        kind, val, col = self.peek()
        base = self.atom()
        if kind == "name" and len(base) > 1:
            # in "xy^2" the exponent binds to y only
            prefix, base = base[:-1], base[-1:]
        while self.peek()[1] == "^":
            self.i += 1
            sign = 1
            if self.peek()[1] == "-":
                self.i += 1
                sign = -1
            kind, val, col = self.peek()
            if kind != "int":
                self.error("expected an integer exponent")
            self.i += 1
            k = sign * int(val)
            if k == 0:
                self.error("zero exponent", col)
            base = word_power(base, k)
        return normalize(prefix + base)

    def atom(self) -> Word:
        kind, val, col = self.peek()
        if kind == "int":
            if val != "1":
                self.error(f"integer {val} is not a word (only 1 denotes the identity)", col)
            self.i += 1
            return ()
        if kind == "name":
            self.i += 1
            return self.split_name(val, col)
        if val == "(":
            self.i += 1
            w = self.word()
            self.expect(")")
            return w
        if val == "[":
            self.i += 1
            items = [self.word()]
            while self.peek()[1] == ",":
                self.i += 1
                items.append(self.word())
            self.expect("]")
            if len(items) < 2:
                self.error("commutator needs at least two entries", col)
            w = items[0]
            for b in items[1:]:
                w = commutator(w, b)
            return w
        self.error(f"unexpected token {val!r}" if val else "unexpected end of line")

    def split_name(self, name: str, col: int) -> Word:
        # identifiers like "xy" are read as x*y when they are not generator names
        if name in self.gens:
            return ((self.gens[name], 1),)
        out = []
        pos = 0
        while pos < len(name):
            for end in range(len(name), pos, -1):
                if name[pos:end] in self.gens:
                    out.append((self.gens[name[pos:end]], 1))
                    pos = end
                    break
            else:
                raise PresentationError(f"unknown generator {name[pos:]!r}", self.lineno, col + pos)
        return normalize(out)


def parse_presentation(text: str) -> Presentation:
    """Parse the presentation grammar described in the module docstring.

    >>> parse_presentation("gens: x\\nx^4").relators
    (((0, 4),),)
    """
    gens: list[str] | None = None
    relators: list[Word] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if gens is None:
            m = re.match(r"\s*gens\s*:", line)
            if not m:
                raise PresentationError("presentation must start with 'gens:'", lineno, 1)
            names = [n for n in re.split(r"[\s,]+", line[m.end():]) if n]
            for n in names:
                if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_']*", n):
                    raise PresentationError(f"bad generator name {n!r}", lineno, line.find(n) + 1)
            if len(set(names)) != len(names):
                raise PresentationError("duplicate generator name", lineno, 1)
            gens = names
            continue
        parser = _Parser(line, lineno, 0, {n: i for i, n in enumerate(gens)})
        relators.extend(r for r in parser.equation() if r)
    if gens is None:
        raise PresentationError("missing 'gens:' header")
    return Presentation(tuple(gens), tuple(relators))


def load_presentation(path) -> Presentation:
    return parse_presentation(Path(path).read_text(encoding="utf-8"))


# ---------------------------------------------------------------------------
# coset enumeration


@dataclass
class CosetTable:
    """Coset table over the trivial subgroup.

    Column ``2*i`` is generator i and ``2*i+1`` its inverse.  After
    :func:`coset_enumerate` returns, ``rows`` is complete and compacted (live
    cosets renumbered ``0..n-1`` in ascending order).
    """

    rows: list[list[int]]
    parent: list[int]
    ngens: int
    defined: int = 0

    @property
    def live(self) -> list[int]:
        return [c for c, p in enumerate(self.parent) if p == c]

    def as_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64)

    def trace(self, coset: int, cols: Sequence[int]) -> int:
        for x in cols:
            coset = self.rows[coset][x]
        return coset


def _columns(word: Word) -> list[int]:
    cols = []
    for g, e in word:
        cols.extend([2 * g + (e < 0)] * abs(e))
    return cols


class _Enumerator:
    def __init__(self, P: Presentation, max_cosets: int):
        self.ncols = 2 * len(P.generators)
        self.max_cosets = max_cosets
        self.rows: list[list[int]] = []
        self.parent: list[int] = []
        self.relators = [_columns(r) for r in P.relators]
        self.new_coset()

    def new_coset(self) -> int:
        if len(self.rows) >= self.max_cosets:
            raise CosetLimitExceeded(f"coset enumeration exceeded {self.max_cosets} cosets")
        c = len(self.rows)
        self.rows.append([-1] * self.ncols)
        self.parent.append(c)
        return c

    def define(self, c: int, x: int) -> None:
        d = self.new_coset()
        self.rows[c][x] = d
        self.rows[d][x ^ 1] = c

    def rep(self, c: int) -> int:
        root = c
        p = self.parent
        while p[root] != root:
            root = p[root]
        while p[c] != root:
            p[c], c = root, p[c]
        return root

    def merge(self, a: int, b: int, queue: list[int]) -> None:
        a, b = self.rep(a), self.rep(b)
        if a != b:
            lo, hi = min(a, b), max(a, b)
            self.parent[hi] = lo
            queue.append(hi)

    def coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []
        self.merge(a, b, queue)
        rows = self.rows
        k = 0
        while k < len(queue):
            e = queue[k]
            k += 1
            for x in range(self.ncols):
                f = rows[e][x]
                if f < 0:
                    continue
                xi = x ^ 1
                rows[f][xi] = -1
                e1, f1 = self.rep(e), self.rep(f)
                if rows[e1][x] >= 0:
                    self.merge(f1, rows[e1][x], queue)
                elif rows[f1][xi] >= 0:
                    self.merge(e1, rows[f1][xi], queue)
                else:
                    rows[e1][x] = f1
                    rows[f1][xi] = e1

    def scan_and_fill(self, c: int, word: list[int]) -> None:
        rows = self.rows
        f, b = c, c
        i, j = 0, len(word) - 1
        while True:
            while i <= j and rows[f][word[i]] >= 0:
                f = rows[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and rows[b][word[j] ^ 1] >= 0:
                b = rows[b][word[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                rows[f][word[i]] = b
                rows[b][word[i] ^ 1] = f
                return
            self.define(f, word[i])

    def live(self, c: int) -> bool:
        return self.parent[c] == c

    def run(self) -> None:
        c = 0
        while c < len(self.rows):
            for w in self.relators:
                if not self.live(c):
                    break
                self.scan_and_fill(c, w)
            if self.live(c):
                for x in range(self.ncols):
                    if self.rows[c][x] < 0:
                        self.define(c, x)
            c += 1


def coset_enumerate(P: Presentation, max_cosets: int = DEFAULT_MAX_COSETS) -> CosetTable:
    """HLT enumeration of the cosets of the trivial subgroup.

    Cosets are scanned in ascending order and columns in generator declaration
    order, so the numbering is deterministic.  Raises
    :class:`CosetLimitExceeded` if more than ``max_cosets`` rows are needed.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be positive")
    en = _Enumerator(P, max_cosets)
    en.run()
    live = [c for c in range(len(en.rows)) if en.live(c)]
    renum = {c: i for i, c in enumerate(live)}
    rows = [[renum[en.rep(en.rows[c][x])] for x in range(en.ncols)] for c in live]
    table = CosetTable(rows, list(range(len(rows))), len(P.generators), defined=len(en.rows))
    for c in range(len(rows)):
        for x in range(table.ngens * 2):
            if rows[rows[c][x]][x ^ 1] != c:
                raise RuntimeError("coset table is inconsistent after enumeration")
        for w in en.relators:
            if table.trace(c, w) != c:
                raise RuntimeError("relator does not close after enumeration")
    return table


def group_from_presentation(
    P: Presentation, max_cosets: int = DEFAULT_MAX_COSETS, label: str = ""
) -> Group:
    """Cayley table of the presented group via its regular coset action."""
    ct = coset_enumerate(P, max_cosets)
    cols = ct.as_array()
    n = cols.shape[0]
    # perms[b][a] = a * g_b, built along a spanning tree from coset 0
    perms = np.full((n, n), -1, dtype=np.int64)
    perms[0] = np.arange(n)
    queue = [0]
    seen = {0}
    for c in queue:
        for x in range(cols.shape[1]):
            d = int(cols[c, x])
            if d not in seen:
                seen.add(d)
                perms[d] = cols[perms[c], x]
                queue.append(d)
    table = perms.T.copy()
    gens = tuple((name, int(cols[0, 2 * i])) for i, name in enumerate(P.generators))
    return Group(table, gens, label)


def word_evaluate(G: Group, assignment: Mapping[int, int] | Sequence[int], word: Word) -> int:
    """Product of the assigned images of the word's letters."""
    result = 0
    for g, e in word:
        try:
            img = assignment[g]
        except (KeyError, IndexError):
            raise KeyError(f"generator {g} has no assigned image") from None
        result = G.mul(result, G.power(img, e))
    return result


def defining_assignment(G: Group, P: Presentation) -> list[int]:
    return [G.generator(name) for name in P.generators]
