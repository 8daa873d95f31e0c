"""Finite abelian groups, small prime-power fields, point labels and difference lists.

Points come in two flavours and are stored as plain tuples so they hash fast
and sort deterministically:

  finite point:   (0, base, copy)  with base a tuple of ints and copy an int,
                  copy == -1 meaning "no copy index"
  infinite point: (1, (index,), -1), fixed under translation

The text grammar is ``INT{.INT}*[_INT]`` for finite points (residues joined
by ".", optional "_copy") and ``infINT`` for infinite points.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass, field

from .errors import CapExceeded, DegreeZero, GroupMismatch, MissingCopyIndex, NotPrime

Point = tuple
Block = tuple  # sorted tuple of points

GF_CAP = 2 ** 20


def fpoint(base, copy: int = -1) -> Point:
    if isinstance(base, int):
        base = (base,)
    return (0, tuple(base), copy)


def ipoint(index: int) -> Point:
    return (1, (index,), -1)


def is_finite(p: Point) -> bool:
    return p[0] == 0


def base_of(p: Point) -> tuple:
    return p[1]


def copy_of(p: Point) -> int:
    return p[2]


def block(points) -> Block:
    """Canonical block: sorted tuple, duplicates rejected."""
    pts = sorted(points)
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate point in block: %r" % (pts,))
    return tuple(pts)


_INF_RE = re.compile(r"^inf(\d+)$")
_FIN_RE = re.compile(r"^(\d+(?:\.\d+)*)(?:_(\d+))?$")


def format_point(p: Point) -> str:
    if p[0] == 1:
        return "inf%d" % p[1][0]
    s = ".".join(str(x) for x in p[1])
    if p[2] >= 0:
        s += "_%d" % p[2]
    return s


def parse_point(s: str) -> Point:
    m = _INF_RE.match(s)
    if m:
        return ipoint(int(m.group(1)))
    m = _FIN_RE.match(s)
    if not m:
        raise ValueError("bad point label: %r" % s)
    base = tuple(int(x) for x in m.group(1).split("."))
    copy = int(m.group(2)) if m.group(2) is not None else -1
    return fpoint(base, copy)


@dataclass(frozen=True)
class AbelianGroup:
    """Direct product of cyclic groups; elements are tuples of residues."""

    factors: tuple

    def __post_init__(self):
        if not all(isinstance(m, int) and m >= 1 for m in self.factors):
            raise ValueError("moduli must be positive integers")
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def order(self) -> int:
        n = 1
        for m in self.factors:
            n *= m
        return n

    def check(self, x: tuple) -> tuple:
        if len(x) != len(self.factors):
            raise GroupMismatch("element arity %d != %d" % (len(x), len(self.factors)))
        return tuple(a % m for a, m in zip(x, self.factors))

    def zero(self) -> tuple:
        return (0,) * len(self.factors)

    def add(self, x: tuple, y: tuple) -> tuple:
        return tuple((a + b) % m for a, b, m in zip(x, y, self.factors))

    def neg(self, x: tuple) -> tuple:
        return tuple((-a) % m for a, m in zip(x, self.factors))

    def sub(self, x: tuple, y: tuple) -> tuple:
        return tuple((a - b) % m for a, b, m in zip(x, y, self.factors))

    def elements(self) -> list:
        return [tuple(reversed(t)) for t in
                itertools.product(*[range(m) for m in reversed(self.factors)])]


def cyclic(m: int) -> AbelianGroup:
    return AbelianGroup((m,))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factor_prime_power(q: int):
    """Return (p, e) with q == p**e, or None when q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if p * p > q:
            return (q, 1) if is_prime(q) else None
        if q % p:
            continue
        e, m = 0, q
        while m % p == 0:
            m //= p
            e += 1
        return (p, e) if m == 1 else None
    return None


# Polynomials over Z_p are coefficient tuples, most significant first.

def _poly_trim(c):
    i = 0
    while i < len(c) - 1 and c[i] == 0:
        i += 1
    return tuple(c[i:])


def _poly_mod(a, mod, p):
    a = list(a)
    dm = len(mod) - 1
    while len(a) - 1 >= dm and any(a):
        if a[0] == 0:
            a.pop(0)
            continue
        f = a[0]
        for i in range(len(mod)):
            a[i] = (a[i] - f * mod[i]) % p
        a.pop(0)
    return _poly_trim(tuple(a))


def _poly_mulmod(a, b, mod, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _poly_mod(tuple(out), mod, p)


def _poly_divides(d, a, p):
    """True when monic d divides a over Z_p."""
    a = list(a)
    while len(a) >= len(d) and any(a):
        if a[0] == 0:
            a.pop(0)
            continue
        f = a[0]
        for i in range(len(d)):
            a[i] = (a[i] - f * d[i]) % p
        a.pop(0)
    return not any(a)


def _irreducible(mod, p) -> bool:
    e = len(mod) - 1
    for deg in range(1, e // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            d = (1,) + tail
            if _poly_divides(d, mod, p):
                return False
    return True


@dataclass(frozen=True)
class FieldGF:
    """GF(p^e) with a fixed monic irreducible modulus and primitive element.

    Elements are length-e coefficient tuples, most significant first, so the
    canonical order is plain tuple order.
    """

    p: int
    e: int
    modulus: tuple
    omega: tuple

    @property
    def q(self) -> int:
        return self.p ** self.e

    def zero(self) -> tuple:
        return (0,) * self.e

    def one(self) -> tuple:
        return (0,) * (self.e - 1) + (1,)

    def from_int(self, n: int) -> tuple:
        digs = []
        for _ in range(self.e):
            digs.append(n % self.p)
            n //= self.p
        return tuple(reversed(digs))

    def to_int(self, x: tuple) -> int:
        n = 0
        for d in x:
            n = n * self.p + d
        return n

    def elements(self) -> list:
        return [self.from_int(n) for n in range(self.q)]

    def add(self, x, y):
        return tuple((a + b) % self.p for a, b in zip(x, y))

    def sub(self, x, y):
        return tuple((a - b) % self.p for a, b in zip(x, y))

    def neg(self, x):
        return tuple((-a) % self.p for a in x)

    def mul(self, x, y):
        r = _poly_mulmod(x, y, self.modulus, self.p)
        return (0,) * (self.e - len(r)) + r

    def pow(self, x, n: int):
        r, b = self.one(), x
        while n:
            if n & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            n >>= 1
        return r

    def inv(self, x):
        if x == self.zero():
            raise ZeroDivisionError("inverse of zero")
        return self.pow(x, self.q - 2)

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def mult_order(self, x) -> int:
        if x == self.zero():
            return 0
        k, acc = 1, x
        while acc != self.one():
            acc = self.mul(acc, x)
            k += 1
        return k

    def additive_group(self) -> AbelianGroup:
        return AbelianGroup((self.p,) * self.e)


def gf_build(p: int, e: int, cap: int = GF_CAP) -> FieldGF:
    """Deterministic field: least monic irreducible modulus, least primitive omega."""
    if e < 1:
        raise DegreeZero("extension degree must be >= 1")
    if not is_prime(p):
        raise NotPrime("%d is not prime" % p)
    if p ** e > cap:
        raise CapExceeded("p^e = %d exceeds cap %d" % (p ** e, cap))
    if e == 1:
        modulus = (1, 0)
    else:
        modulus = None
        for tail in itertools.product(range(p), repeat=e):
            cand = (1,) + tail
            if _irreducible(cand, p):
                modulus = cand
                break
        assert modulus is not None
    fld = FieldGF(p, e, modulus, (0,) * e)
    target = p ** e - 1
    omega = None
    for n in range(1, p ** e):
        x = fld.from_int(n)
        if fld.mult_order(x) == target:
            omega = x
            break
    assert omega is not None
    return FieldGF(p, e, modulus, omega)


def translate_point(p: Point, gamma: tuple, g: AbelianGroup) -> Point:
    if p[0] == 1:
        return p
    return (0, g.add(g.check(p[1]), g.check(gamma)), p[2])


def translate_block(b: Block, gamma: tuple, g: AbelianGroup) -> Block:
    """Shift finite points by gamma, fix infinite points."""
    return block(translate_point(p, gamma, g) for p in b)


def difference_list(blocks, g: AbelianGroup, mode="plain") -> Counter:
    """Multiset of within-block differences; infinite points never contribute.

    mode is "plain", ("pure", i) or ("mixed", i, j); the indexed modes read
    point copy indices and collect x - y over ordered pairs of distinct
    points whose copies match the mode.
    """
    out = Counter()
    if mode == "plain":
        for b in blocks:
            fin = [p for p in b if is_finite(p)]
            for x in fin:
                for y in fin:
                    if x != y:
                        out[g.sub(g.check(x[1]), g.check(y[1]))] += 1
        return out
    kind = mode[0]
    if kind == "pure":
        i = j = mode[1]
    elif kind == "mixed":
        i, j = mode[1], mode[2]
        if i == j:
            raise ValueError("mixed mode needs distinct copies")
    else:
        raise ValueError("unknown difference mode %r" % (mode,))
    for b in blocks:
        fin = [p for p in b if is_finite(p)]
        if any(copy_of(p) < 0 for p in fin):
            raise MissingCopyIndex("pure/mixed differences need copy-indexed points")
        xs = [p for p in fin if copy_of(p) == i]
        ys = [p for p in fin if copy_of(p) == j]
        for x in xs:
            for y in ys:
                if x != y:
                    out[g.sub(g.check(x[1]), g.check(y[1]))] += 1
    return out
