"""q-ary code analytics and the grid <-> code correspondence.

Internally symbols are 0-based row indices; a code may carry a label list so
row names print faithfully next to the source array.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .designs import DesignGrid, block, verify_gbtp
from .errors import (
    DistanceTooSmall,
    MTooSmall,
    NotEquitable,
    NotVerified,
    SymbolOutOfRange,
    TooFewWords,
)


@dataclass
class Code:
    q: int
    n: int
    words: tuple  # tuple of length-n int tuples
    labels: tuple | None = None  # symbol -> display label

    def __post_init__(self):
        self.words = tuple(tuple(w) for w in self.words)
        for w in self.words:
            if len(w) != self.n:
                raise ValueError("word length %d != n=%d" % (len(w), self.n))
            for s in w:
                if not 0 <= s < self.q:
                    raise SymbolOutOfRange("symbol %d out of range for q=%d" % (s, self.q))
        if len(set(self.words)) != len(self.words):
            raise ValueError("code words must be distinct")

    @property
    def size(self) -> int:
        return len(self.words)


def symbol_weights(word, q: int) -> tuple:
    """Frequency of each symbol 0..q-1 in the word."""
    out = [0] * q
    for s in word:
        if not 0 <= s < q:
            raise SymbolOutOfRange("symbol %d out of range for q=%d" % (s, q))
        out[s] += 1
    return tuple(out)


def word_equitable(word, q: int) -> bool:
    n = len(word)
    lo, hi = n // q, -(-n // q)
    return all(lo <= w <= hi for w in symbol_weights(word, q))


def is_equitable(c: Code) -> bool:
    return all(word_equitable(w, c.q) for w in c.words)


def hamming(u, v) -> int:
    return sum(1 for a, b in zip(u, v) if a != b)


def min_distance(c: Code) -> int:
    if c.size < 2:
        raise TooFewWords("need at least two words")
    return min(hamming(u, v) for u, v in itertools.combinations(c.words, 2))


def ec_table(c: Code) -> tuple:
    """E(e) for e = 1..q: largest total weight any e symbols reach in one word.

    For a fixed word the best e symbols are its e most frequent ones, so the
    table is the max over words of sorted-frequency prefix sums.
    """
    best = [0] * c.q
    for w in c.words:
        freqs = sorted(symbol_weights(w, c.q), reverse=True)
        acc = 0
        for e in range(c.q):
            acc += freqs[e]
            if acc > best[e]:
                best[e] = acc
    return tuple(best)


def ec_table_exhaustive(c: Code) -> tuple:
    """Oracle: maximize over every symbol subset of each size explicitly."""
    out = []
    syms = range(c.q)
    weights = [symbol_weights(w, c.q) for w in c.words]
    for e in range(1, c.q + 1):
        best = 0
        for gamma in itertools.combinations(syms, e):
            for wt in weights:
                s = sum(wt[g] for g in gamma)
                if s > best:
                    best = s
        out.append(best)
    return tuple(out)


def capability(c: Code) -> tuple:
    """(E table, c(C)) with c(C) = min{e : E(e) >= d}."""
    d = min_distance(c)
    table = ec_table(c)
    for e, val in enumerate(table, start=1):
        if val >= d:
            return table, e
    return table, c.q  # unreachable: E(q) = n >= d


@dataclass
class PlotkinResult:
    lhs: int
    rhs: int
    holds: bool
    equality: bool


def plotkin_check(n: int, d: int, q: int, M: int) -> PlotkinResult:
    """Generalized Plotkin bound: C(M,2)d <= n * sum_{i<j} M_i M_j, M_i = floor((M+i)/q).

    equality marks the optimality clause: q | M and C(M,2)d = n C(q,2) (M/q)^2.
    """
    lhs = M * (M - 1) // 2 * d
    mi = [(M + i) // q for i in range(q)]
    s = sum(mi)
    s2 = sum(x * x for x in mi)
    rhs = n * (s * s - s2) // 2
    holds = lhs <= rhs
    equality = (M % q == 0) and lhs == n * (q * (q - 1) // 2) * (M // q) ** 2
    return PlotkinResult(lhs, rhs, holds, equality)


@dataclass
class CodeStats:
    n: int
    q: int
    M: int
    d: int
    equitable: bool
    ec: tuple
    capability: int
    plotkin: PlotkinResult

    def describe(self) -> str:
        lines = [
            "n=%d q=%d M=%d d=%d" % (self.n, self.q, self.M, self.d),
            "equitable: %s" % self.equitable,
            "E_C: %s" % (list(self.ec),),
            "c(C): %d" % self.capability,
            "plotkin: lhs=%d rhs=%d holds=%s equality=%s"
            % (self.plotkin.lhs, self.plotkin.rhs, self.plotkin.holds, self.plotkin.equality),
        ]
        return "\n".join(lines)


def code_stats(c: Code) -> CodeStats:
    d = min_distance(c)
    table, cap = capability(c)
    return CodeStats(c.n, c.q, c.size, d, is_equitable(c), table, cap,
                     plotkin_check(c.n, d, c.q, c.size))


def gbtp_to_code(g: DesignGrid) -> Code:
    """One word per point; symbol j is the row holding the point in column j."""
    if g.hole is not None:
        raise NotVerified("cannot derive a code from a holed grid")
    rep = verify_gbtp(g)
    if not rep.ok:
        raise NotVerified("grid fails verify_gbtp:\n" + rep.describe())
    row_index = {r: i for i, r in enumerate(g.rows)}
    where = {}
    for (r, c), b in g.cells.items():
        for p in b:
            where[(p, c)] = row_index[r]
    words = []
    for p in g.points:
        words.append(tuple(where[(p, c)] for c in g.cols))
    if len(set(words)) != len(words):
        raise NotVerified("derived words are not distinct")
    return Code(g.m, g.n, tuple(words), labels=tuple(g.rows))


def code_to_gbtp(c: Code, k_set, lam: int, points=None, kind: str = "GBTP") -> DesignGrid:
    """Reverse correspondence: cell (r, j) collects the points whose word has r at j."""
    if not is_equitable(c):
        raise NotEquitable("code is not of equitable symbol weight")
    if min_distance(c) < c.n - lam:
        raise DistanceTooSmall("minimum distance below n - lambda")
    if points is None:
        points = tuple((0, (i,), -1) for i in range(c.size))
    points = tuple(points)
    if len(points) != c.size:
        raise ValueError("need one point per word")
    rows = tuple(c.labels) if c.labels is not None else tuple(str(i + 1) for i in range(c.q))
    cols = tuple(str(j + 1) for j in range(c.n))
    cells = {}
    for j in range(c.n):
        for r in range(c.q):
            members = [points[i] for i, w in enumerate(c.words) if w[j] == r]
            if members:
                cells[(rows[r], cols[j])] = block(members)
    g = DesignGrid(kind, lam, tuple(sorted(set(k_set))), points, rows, cols, cells)
    rep = verify_gbtp(g, exact=False)
    if not rep.ok:
        raise NotVerified("reconstructed grid fails verify_gbtp:\n" + rep.describe())
    return g


@dataclass
class OptimalityCert:
    m: int
    n: int
    d: int
    q: int
    M: int
    lhs: int
    rhs: int
    violated: bool


def optimality_cert_2q3(m: int) -> OptimalityCert:
    """Certify that no equitable (2m-3, 2m-4)_m code of size 2m+2 exists, m >= 7."""
    if m < 7:
        raise MTooSmall("certificate needs m >= 7")
    n, d, q, M = 2 * m - 3, 2 * m - 4, m, 2 * m + 2
    res = plotkin_check(n, d, q, M)
    if res.holds:
        raise AssertionError("expected a bound violation at m=%d" % m)
    return OptimalityCert(m, n, d, q, M, res.lhs, res.rhs, not res.holds)


# ---------------------------------------------------------------------------
# file format


def code_to_obj(c: Code) -> dict:
    obj = {"q": c.q, "n": c.n, "words": [list(w) for w in sorted(c.words)]}
    if c.labels is not None:
        obj["labels"] = list(c.labels)
    return obj


def code_from_obj(obj: dict) -> Code:
    return Code(obj["q"], obj["n"], tuple(tuple(w) for w in obj["words"]),
                tuple(obj["labels"]) if obj.get("labels") else None)


def dumps_code(c: Code) -> str:
    return json.dumps(code_to_obj(c), sort_keys=True, indent=1) + "\n"


def loads_code(text: str) -> Code:
    return code_from_obj(json.loads(text))


def save_code(c: Code, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_code(c))


def load_code(path) -> Code:
    with open(path, encoding="utf-8") as fh:
        return loads_code(fh.read())
