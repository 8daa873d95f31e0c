"""Starter families, their verifiers, and deterministic development into grids.

Four starter kinds are supported: the triple-system starter over an abelian
group with three point copies, the two incomplete-packing starters over
Z_m x Z_2 and Z_m x Z_4 with infinite points, and the frame starter over
Z_3t x [2].  Each kind has a condition-by-condition verifier and a fixed
placement rule that develops the translates into a full DesignGrid.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass

from .algebra import (
    AbelianGroup,
    FieldGF,
    block,
    cyclic,
    difference_list,
    factor_prime_power,
    format_point,
    fpoint,
    gf_build,
    ipoint,
    is_finite,
    parse_point,
    translate_block,
)
from .designs import DesignGrid, VerifyReport
from .errors import NotOneMod6, NotPrimePower, StarterInvalid

CLUB, DIAMOND, HEART = 0, 1, 2


def _elem_label(elem) -> str:
    return ".".join(str(x) for x in elem)


# ---------------------------------------------------------------------------
# triple-system starter: blocks A_alpha (alpha in Gamma) and B_t over Gamma x {0,1,2}


@dataclass
class GbtdStarter:
    group: AbelianGroup
    blocks_a: dict  # group element -> Block
    blocks_b: tuple  # Block list, index 1..(m-1)/2
    special: bool = False
    colors_a: dict | None = None  # group element -> color of A_alpha - alpha
    colors_b: tuple | None = None

    @property
    def m(self) -> int:
        return self.group.order


def _counter_eq(rep, cid, got: Counter, want: Counter):
    bad = []
    for k in sorted(set(got) | set(want)):
        if got.get(k, 0) != want.get(k, 0):
            bad.append("%r: got %d want %d" % (k, got.get(k, 0), want.get(k, 0)))
    rep.add(cid, bad)


def _r_multiset(s: GbtdStarter) -> Counter:
    g = s.group
    r = Counter()
    for alpha, b in s.blocks_a.items():
        for p in translate_block(b, g.neg(alpha), g):
            r[p] += 1
    for b in s.blocks_b:
        for p in b:
            r[p] += 1
    return r


def verify_gbtd_starter(s: GbtdStarter) -> VerifyReport:
    rep = VerifyReport()
    g = s.group
    m = s.m
    shape_bad = []
    if m % 2 == 0:
        shape_bad.append("group order %d is even" % m)
    if sorted(s.blocks_a) != sorted(g.elements()):
        shape_bad.append("A blocks not indexed by the group")
    if len(s.blocks_b) != (m - 1) // 2:
        shape_bad.append("expected %d B blocks" % ((m - 1) // 2))
    for b in list(s.blocks_a.values()) + list(s.blocks_b):
        if len(b) != 3:
            shape_bad.append("block size %d" % len(b))
        for p in b:
            if not is_finite(p) or p[2] not in (0, 1, 2):
                shape_bad.append("point %s outside Gamma x {0,1,2}" % format_point(p))
    rep.add("shape", shape_bad)
    if shape_bad:
        return rep

    blocks = list(s.blocks_a.values()) + list(s.blocks_b)
    nonzero = Counter({e: 1 for e in g.elements() if e != g.zero()})
    full = Counter({e: 1 for e in g.elements()})
    for i in range(3):
        _counter_eq(rep, "pure-diffs-%d" % i, difference_list(blocks, g, ("pure", i)), nonzero)
    for i, j in itertools.permutations(range(3), 2):
        _counter_eq(rep, "mixed-diffs-%d%d" % (i, j),
                    difference_list(blocks, g, ("mixed", i, j)), full)

    cover = Counter(p for b in s.blocks_a.values() for p in b)
    want = Counter({fpoint(e, c): 1 for e in g.elements() for c in range(3)})
    _counter_eq(rep, "a-cover", cover, want)

    b_bad = []
    for t, b in enumerate(s.blocks_b, start=1):
        if {p[2] for p in b} != {0, 1, 2}:
            b_bad.append("B_%d misses a copy" % t)
    rep.add("b-transversal", b_bad)

    r = _r_multiset(s)
    r_bad = []
    for e in g.elements():
        for c in range(3):
            k = r.get(fpoint(e, c), 0)
            if k not in (1, 2):
                r_bad.append("%s appears %d times in R" % (format_point(fpoint(e, c)), k))
    rep.add("row-multiset", r_bad)

    if s.special:
        a0 = s.blocks_a[g.zero()]
        sp_bad = ["%s appears %d times in R" % (format_point(p), r.get(p, 0))
                  for p in a0 if r.get(p, 0) != 1]
        rep.add("special-a0-once", sp_bad)

    if s.colors_a is not None:
        by_color = {}
        for alpha, b in s.blocks_a.items():
            col = s.colors_a[alpha]
            by_color.setdefault(col, []).append(translate_block(b, g.neg(alpha), g))
        for t, b in enumerate(s.blocks_b):
            by_color.setdefault(s.colors_b[t], []).append(b)
        col_bad = []
        for col, bs in sorted(by_color.items()):
            cnt = Counter(p for b in bs for p in b)
            for p, k in sorted(cnt.items()):
                if k > 1:
                    col_bad.append("color %d: %s in %d blocks" % (col, format_point(p), k))
        rep.add("color-disjoint", col_bad)
        wit_bad = []
        all_pts = {fpoint(e, c) for e in g.elements() for c in range(3)}
        for col, bs in sorted(by_color.items()):
            covered = {p for b in bs for p in b}
            if not all_pts - covered:
                wit_bad.append("color %d has no witness" % col)
        rep.add("color-witness", wit_bad)
    return rep


def develop_gbtd(s: GbtdStarter) -> DesignGrid:
    """Place A_alpha+beta at (alpha+beta, beta) and B_t+alpha at (alpha, t)."""
    rep = verify_gbtd_starter(s)
    if not rep.ok:
        raise StarterInvalid("starter fails verification:\n" + rep.describe())
    g = s.group
    elems = sorted(g.elements())
    rows = tuple(_elem_label(e) for e in elems)
    t_count = len(s.blocks_b)
    cols = rows + tuple("t%d" % t for t in range(1, t_count + 1))
    cells = {}
    colors = {} if s.colors_a is not None else None
    for alpha, b in s.blocks_a.items():
        for beta in elems:
            rc = (_elem_label(g.add(alpha, beta)), _elem_label(beta))
            cells[rc] = translate_block(b, beta, g)
            if colors is not None:
                colors[rc] = s.colors_a[alpha]
    for t, b in enumerate(s.blocks_b, start=1):
        for alpha in elems:
            rc = (_elem_label(alpha), "t%d" % t)
            cells[rc] = translate_block(b, alpha, g)
            if colors is not None:
                colors[rc] = s.colors_b[t - 1]
    points = tuple(fpoint(e, c) for e in elems for c in range(3))
    special = None
    if s.special:
        z = _elem_label(g.zero())
        special = (z, z)
    return DesignGrid("GBTD", 1, (3,), points, rows, cols, cells,
                      colors, special=special)


def build_fq_gbtd_starter(q: int) -> GbtdStarter:
    """Prime-power starter: special and 3-colorable with a witness row.

    Needs q = 1 mod 6.  All choices (modulus, omega, gamma) follow the
    canonical element order, so the starter is reproducible.
    """
    if q % 6 != 1:
        raise NotOneMod6("q = %d is not 1 mod 6" % q)
    pe = factor_prime_power(q)
    if pe is None:
        raise NotPrimePower("q = %d is not a prime power" % q)
    fld = gf_build(*pe)
    s = (q - 1) // 6
    w = fld.omega
    cube = [fld.pow(w, 2 * j * s) for j in range(3)]  # the cube roots of unity

    forbidden = {fld.zero()} | {fld.neg(u) for u in cube}
    for t in range(1, s):
        wt = fld.pow(w, t)
        den = fld.inv(fld.sub(wt, fld.one()))
        for a, b in itertools.permutations(range(3), 2):
            forbidden.add(fld.mul(fld.sub(cube[a], fld.mul(cube[b], wt)), den))
    gamma = None
    for x in fld.elements():
        if x not in forbidden:
            gamma = x
            break
    assert gamma is not None

    lam_index = {}
    for t in range(s):
        for i in range(3):
            lam_index[fld.neg(fld.mul(gamma, fld.pow(w, t + 2 * i * s)))] = (t, i)

    blocks_a = {}
    colors_a = {}
    inv_gamma = fld.inv(gamma)
    for alpha in fld.elements():
        if alpha in lam_index:
            t, i = lam_index[alpha]
            blocks_a[alpha] = block(
                fpoint(fld.pow(w, t + 2 * j * s), i) for j in range(3))
            colors_a[alpha] = DIAMOND
        else:
            scale = fld.neg(fld.mul(alpha, inv_gamma))
            blocks_a[alpha] = block(
                fpoint(fld.mul(scale, cube[i]), i) for i in range(3))
            colors_a[alpha] = CLUB if alpha == fld.zero() else HEART
    blocks_b = []
    for t in range(s):
        for j in range(3):
            base = fld.pow(w, t + 2 * j * s)
            blocks_b.append(block(
                fpoint(fld.mul(base, fld.add(cube[i], gamma)), i) for i in range(3)))
    group = fld.additive_group()
    return GbtdStarter(group, blocks_a, tuple(blocks_b), special=True,
                       colors_a=colors_a, colors_b=(HEART,) * len(blocks_b))


# ---------------------------------------------------------------------------
# incomplete-packing starter over (Z_m x Z_2) u W_w


@dataclass
class IgbtpStarterZ2:
    m: int
    w: int
    blocks_a: tuple  # (w-5)/2 pairs, one point of each parity
    blocks_b: tuple  # (w-1)/2 pairs
    blocks_c: tuple  # m blocks indexed by Z_m, |C_0| = 3

    @property
    def group(self) -> AbelianGroup:
        return AbelianGroup((self.m, 2))


def verify_igbtp_z2_starter(s: IgbtpStarterZ2) -> VerifyReport:
    rep = VerifyReport()
    g = s.group
    m, w = s.m, s.w
    shape_bad = []
    if m % 2 == 0:
        shape_bad.append("m must be odd")
    if w % 2 == 0 or w < 5:
        shape_bad.append("w must be odd and >= 5")
    if len(s.blocks_a) != (w - 5) // 2:
        shape_bad.append("expected %d A blocks" % ((w - 5) // 2))
    if len(s.blocks_b) != (w - 1) // 2:
        shape_bad.append("expected %d B blocks" % ((w - 1) // 2))
    if len(s.blocks_c) != m:
        shape_bad.append("expected %d C blocks" % m)
    for i, b in enumerate(s.blocks_c):
        if len(b) != (3 if i == 0 else 2):
            shape_bad.append("C_%d has size %d" % (i, len(b)))
    for b in s.blocks_a + s.blocks_b:
        if len(b) != 2:
            shape_bad.append("A/B block of size %d" % len(b))
    rep.add("shape", shape_bad)
    if shape_bad:
        return rep
    if m < 11:
        rep.conditions[-1].detail = "m < 11 is outside the stated range"

    blocks = list(s.blocks_a) + list(s.blocks_b) + list(s.blocks_c)
    want = Counter({e: 1 for e in g.elements() if e not in ((0, 0), (0, 1))})
    _counter_eq(rep, "difference-list", difference_list(blocks, g, "plain"), want)

    a_bad = []
    for i, b in enumerate(s.blocks_a, start=1):
        if any(not is_finite(p) for p in b) or {p[1][1] for p in b} != {0, 1}:
            a_bad.append("A_%d does not meet both parities" % i)
    rep.add("a-parities", a_bad)

    cover = Counter(p for b in list(s.blocks_b) + list(s.blocks_c) for p in b)
    want_pts = Counter({fpoint(e): 1 for e in g.elements()})
    for i in range(1, w + 1):
        want_pts[ipoint(i)] = 1
    _counter_eq(rep, "bc-cover", cover, want_pts)

    c_bad = []
    for i, b in enumerate(s.blocks_c):
        if sum(1 for p in b if not is_finite(p)) > 1:
            c_bad.append("C_%d has two infinite points" % i)
    rep.add("c-one-infinite", c_bad)

    r = Counter()
    for p in (fpoint((0, 0)), fpoint((0, 1))):
        r[p] += 1
    for b in s.blocks_a:
        for j in (0, 1):
            for p in translate_block(b, (0, j), g):
                r[p] += 1
    for i, b in enumerate(s.blocks_c):
        for j in (0, 1):
            for p in translate_block(b, g.neg((i, j)), g):
                r[p] += 1
    r_bad = []
    for p in [fpoint(e) for e in g.elements()] + [ipoint(i) for i in range(1, w + 1)]:
        k = r.get(p, 0)
        if k not in (1, 2):
            r_bad.append("%s appears %d times in R" % (format_point(p), k))
    rep.add("row-multiset", r_bad)
    return rep


def develop_igbtp_z2(s: IgbtpStarterZ2) -> DesignGrid:
    rep = verify_igbtp_z2_starter(s)
    if not rep.ok:
        raise StarterInvalid("starter fails verification:\n" + rep.describe())
    g = s.group
    m, w = s.m, s.w
    hole_rows = tuple("p%d" % i for i in range(1, (w - 1) // 2 + 1))
    rows = hole_rows + tuple(str(i) for i in range(m))
    hole_cols = tuple("q%d" % j for j in range(1, w - 4 + 1))
    gcols = [(j, l) for j in range(m) for l in (0, 1)]
    cols = hole_cols + tuple(_elem_label(e) for e in gcols)
    cells = {}
    for i in range(m):
        cells[(str(i), "q1")] = block([fpoint((i, 0)), fpoint((i, 1))])
        for a, b in enumerate(s.blocks_a, start=1):
            for j in (0, 1):
                cells[(str(i), "q%d" % (2 * a + j))] = translate_block(b, (i, j), g)
    for bi, b in enumerate(s.blocks_b, start=1):
        for e in gcols:
            cells[("p%d" % bi, _elem_label(e))] = translate_block(b, e, g)
    for e in gcols:
        j, l = e
        for rr in range(m):
            cells[(str(rr), _elem_label(e))] = translate_block(
                s.blocks_c[(rr - j) % m], e, g)
    points = tuple(fpoint(e) for e in g.elements()) + tuple(ipoint(i) for i in range(1, w + 1))
    hole = (tuple(sorted(ipoint(i) for i in range(1, w + 1))), hole_rows, hole_cols)
    return DesignGrid("IGBTP", 1, (2, 3), points, rows, cols, cells,
                      hole=hole, star=True)


# ---------------------------------------------------------------------------
# incomplete-packing starter over (Z_m x Z_4) u W_9


@dataclass
class IgbtpStarterZ4:
    m: int
    x: int
    y: int
    block_a: tuple  # one pair on parities {0, 2}
    blocks_b: tuple  # four pairs
    blocks_c: tuple  # m blocks, |C_0| = 3
    blocks_d: tuple  # m pairs

    @property
    def group(self) -> AbelianGroup:
        return AbelianGroup((self.m, 4))


def _z4_r_multisets(s: IgbtpStarterZ4):
    g = s.group
    m, x, y = s.m, s.x, s.y
    r_o = Counter()
    r_b = Counter()
    for p in (fpoint((0, 0)), fpoint((0, 1)), fpoint((x, 0)), fpoint((x, 2)),
              fpoint((y, 0)), fpoint((y, 3))):
        r_o[p] += 1
    for p in (fpoint((0, 2)), fpoint((0, 3)), fpoint((x, 1)), fpoint((x, 3)),
              fpoint((y, 1)), fpoint((y, 2))):
        r_b[p] += 1
    for j, tgt in ((0, r_o), (2, r_o), (1, r_b), (3, r_b)):
        for p in translate_block(s.block_a, (0, j), g):
            tgt[p] += 1
    for i in range(m):
        for j in (0, 2):
            for p in translate_block(s.blocks_c[i], g.neg((i, j)), g):
                r_o[p] += 1
            for p in translate_block(s.blocks_d[i], g.neg((i, j)), g):
                r_b[p] += 1
        for j in (1, 3):
            for p in translate_block(s.blocks_c[i], g.neg((i, j)), g):
                r_b[p] += 1
            for p in translate_block(s.blocks_d[i], g.neg((i, j)), g):
                r_o[p] += 1
    return r_o, r_b


def verify_igbtp_z4_starter(s: IgbtpStarterZ4) -> VerifyReport:
    rep = VerifyReport()
    g = s.group
    m = s.m
    shape_bad = []
    if m % 2 == 0 or m < 5:
        shape_bad.append("m must be odd and >= 5")
    if len(s.block_a) != 2:
        shape_bad.append("A must be a pair")
    if len(s.blocks_b) != 4:
        shape_bad.append("expected 4 B blocks")
    if len(s.blocks_c) != m or len(s.blocks_d) != m:
        shape_bad.append("expected %d C and D blocks" % m)
    for i, b in enumerate(s.blocks_c):
        if len(b) != (3 if i == 0 else 2):
            shape_bad.append("C_%d has size %d" % (i, len(b)))
    for b in s.blocks_b + s.blocks_d:
        if len(b) != 2:
            shape_bad.append("B/D block of size %d" % len(b))
    rep.add("shape", shape_bad)
    if shape_bad:
        return rep

    blocks = [s.block_a] + list(s.blocks_b) + list(s.blocks_c) + list(s.blocks_d)
    want = Counter({e: 1 for e in g.elements() if e[0] != 0})
    _counter_eq(rep, "difference-list", difference_list(blocks, g, "plain"), want)

    a_bad = []
    if any(not is_finite(p) for p in s.block_a) or {p[1][1] for p in s.block_a} != {0, 2}:
        a_bad.append("A must meet parities 0 and 2")
    rep.add("a-parities", a_bad)

    cover = Counter(p for b in list(s.blocks_b) + list(s.blocks_c) + list(s.blocks_d)
                    for p in b)
    want_pts = Counter({fpoint(e): 1 for e in g.elements()})
    for i in range(1, 10):
        want_pts[ipoint(i)] = 1
    _counter_eq(rep, "bcd-cover", cover, want_pts)

    cd_bad = []
    for name, fam in (("C", s.blocks_c), ("D", s.blocks_d)):
        for i, b in enumerate(fam):
            if sum(1 for p in b if not is_finite(p)) > 1:
                cd_bad.append("%s_%d has two infinite points" % (name, i))
    rep.add("cd-one-infinite", cd_bad)

    r_o, r_b = _z4_r_multisets(s)
    r_bad = []
    universe = [fpoint(e) for e in g.elements()] + [ipoint(i) for i in range(1, 10)]
    for tag, r in (("o", r_o), ("b", r_b)):
        for p in universe:
            k = r.get(p, 0)
            if k not in (1, 2):
                r_bad.append("%s appears %d times in R_%s" % (format_point(p), k, tag))
    rep.add("row-multisets", r_bad)
    return rep


def develop_igbtp_z4(s: IgbtpStarterZ4) -> DesignGrid:
    rep = verify_igbtp_z4_starter(s)
    if not rep.ok:
        raise StarterInvalid("starter fails verification:\n" + rep.describe())
    g = s.group
    m, x, y = s.m, s.x, s.y
    hole_rows = tuple("p%d" % i for i in range(1, 5))
    o_rows = tuple("%d:0" % i for i in range(m))
    b_rows = tuple("%d:1" % i for i in range(m))
    rows = hole_rows + o_rows + b_rows
    hole_cols = tuple("q%d" % j for j in range(1, 6))
    gcols = [(j, l) for j in range(m) for l in range(4)]
    cols = hole_cols + tuple(_elem_label(e) for e in gcols)
    cells = {}
    for i in range(m):
        cells[(o_rows[i], "q1")] = block([fpoint((i, 0)), fpoint((i, 1))])
        cells[(b_rows[i], "q1")] = block([fpoint((i, 2)), fpoint((i, 3))])
        cells[(o_rows[i], "q2")] = block([fpoint(((x + i) % m, 0)), fpoint(((x + i) % m, 2))])
        cells[(b_rows[i], "q2")] = block([fpoint(((x + i) % m, 1)), fpoint(((x + i) % m, 3))])
        cells[(o_rows[i], "q3")] = block([fpoint(((y + i) % m, 0)), fpoint(((y + i) % m, 3))])
        cells[(b_rows[i], "q3")] = block([fpoint(((y + i) % m, 1)), fpoint(((y + i) % m, 2))])
        cells[(o_rows[i], "q4")] = translate_block(s.block_a, (i, 0), g)
        cells[(b_rows[i], "q4")] = translate_block(s.block_a, (i, 1), g)
        cells[(o_rows[i], "q5")] = translate_block(s.block_a, (i, 2), g)
        cells[(b_rows[i], "q5")] = translate_block(s.block_a, (i, 3), g)
    for bi, b in enumerate(s.blocks_b, start=1):
        for e in gcols:
            cells[("p%d" % bi, _elem_label(e))] = translate_block(b, e, g)
    for e in gcols:
        j, l = e
        first = s.blocks_c if l in (0, 2) else s.blocks_d
        second = s.blocks_d if l in (0, 2) else s.blocks_c
        for rr in range(m):
            cells[(o_rows[rr], _elem_label(e))] = translate_block(first[(rr - j) % m], e, g)
            cells[(b_rows[rr], _elem_label(e))] = translate_block(second[(rr - j) % m], e, g)
    points = tuple(fpoint(e) for e in g.elements()) + tuple(ipoint(i) for i in range(1, 10))
    hole = (tuple(sorted(ipoint(i) for i in range(1, 10))), hole_rows, hole_cols)
    return DesignGrid("IGBTP", 1, (2, 3), points, rows, cols, cells,
                      hole=hole, star=True)


# ---------------------------------------------------------------------------
# frame starter over Z_3t x {0,1}


@dataclass
class FrGbtdStarter:
    t: int
    blocks: dict  # (i, j) -> Block for i in 1..t-1, j in 0..1

    @property
    def group(self) -> AbelianGroup:
        return cyclic(3 * self.t)


def verify_frgbtd_starter(s: FrGbtdStarter) -> VerifyReport:
    rep = VerifyReport()
    t = s.t
    g = s.group
    shape_bad = []
    if sorted(s.blocks) != [(i, j) for i in range(1, t) for j in (0, 1)]:
        shape_bad.append("blocks must be indexed by [t-1] x {0,1}")
    for key, b in sorted(s.blocks.items()):
        if len(b) != 3:
            shape_bad.append("block %r has size %d" % (key, len(b)))
        for p in b:
            if not is_finite(p) or p[2] not in (0, 1):
                shape_bad.append("point %s outside Z_3t x {0,1}" % format_point(p))
    rep.add("shape", shape_bad)
    if shape_bad:
        return rep

    blocks = [s.blocks[k] for k in sorted(s.blocks)]
    forbidden = {(0,), (t,), (2 * t,)}
    want = Counter({e: 1 for e in g.elements() if e not in forbidden})
    for i in range(2):
        _counter_eq(rep, "pure-diffs-%d" % i, difference_list(blocks, g, ("pure", i)), want)
    for i, j in ((0, 1), (1, 0)):
        _counter_eq(rep, "mixed-diffs-%d%d" % (i, j),
                    difference_list(blocks, g, ("mixed", i, j)), want)

    cover = Counter(p for b in blocks for p in b)
    want_pts = Counter({fpoint(e, c): 1 for e in g.elements() if e not in forbidden
                        for c in range(2)})
    _counter_eq(rep, "cover", cover, want_pts)

    r_bad = []
    for j in (0, 1):
        r = Counter()
        for i in range(1, t):
            for p in s.blocks[(i, j)]:
                r[((p[1][0] - i) % t, p[2])] += 1
        for (res, c), k in sorted(r.items()):
            if res == 0:
                r_bad.append("R_%d hits the zero residue (copy %d)" % (j, c))
        for res in range(1, t):
            for c in range(2):
                k = r.get((res, c), 0)
                if k not in (1, 2):
                    r_bad.append("R_%d: residue %d copy %d appears %d times" % (j, res, c, k))
    rep.add("row-multisets", r_bad)
    return rep


def develop_frgbtd(s: FrGbtdStarter) -> DesignGrid:
    """Place block (i,j) translated by k at row (i+k mod t, j), column k."""
    rep = verify_frgbtd_starter(s)
    if not rep.ok:
        raise StarterInvalid("starter fails verification:\n" + rep.describe())
    t = s.t
    g = s.group
    rows = tuple("%d:%d" % (i, j) for i in range(t) for j in (0, 1))
    cols = tuple(str(k) for k in range(3 * t))
    cells = {}
    for (i, j), b in sorted(s.blocks.items()):
        for k in range(3 * t):
            cells[("%d:%d" % ((i + k) % t, j), str(k))] = translate_block(b, (k,), g)
    points = tuple(fpoint(e, c) for e in g.elements() for c in range(2))
    groups = []
    rgi = []
    cgi = []
    for i in range(t):
        groups.append(tuple(sorted(fpoint(((u * t + i) % (3 * t),), c)
                                   for u in range(3) for c in range(2))))
        rgi.append(("%d:0" % i, "%d:1" % i))
        cgi.append(tuple(str((u * t + i) % (3 * t)) for u in range(3)))
    return DesignGrid("FrGBTD", 1, (3,), points, rows, cols, cells,
                      groups=tuple(groups), row_group_index=tuple(rgi),
                      col_group_index=tuple(cgi))


# ---------------------------------------------------------------------------
# explicit constructions


FRGBTD_6_8_BLOCKS = {
    1: (2, 3, 5),
    2: (4, 14, 31),
    3: (9, 22, 45),
    4: (15, 34, 43),
    5: (20, 35, 42),
    6: (13, 17, 47),
    7: (1, 6, 12),
}


def frgbtd_6_8_base_blocks() -> list:
    return [block(fpoint(x) for x in FRGBTD_6_8_BLOCKS[i]) for i in sorted(FRGBTD_6_8_BLOCKS)]


def build_frgbtd_6_8() -> DesignGrid:
    """16 x 24 frame of type 6^8 over Z_48; block i+j sits at (i+j mod 16, j mod 24)."""
    g = cyclic(48)
    rows = tuple(str(r) for r in range(16))
    cols = tuple(str(c) for c in range(24))
    cells = {}
    for i, base in sorted(FRGBTD_6_8_BLOCKS.items()):
        b = block(fpoint(x) for x in base)
        for j in range(48):
            rc = (str((i + j) % 16), str(j % 24))
            assert rc not in cells
            cells[rc] = translate_block(b, (j,), g)
    points = tuple(fpoint(x) for x in range(48))
    groups = []
    rgi = []
    cgi = []
    for i in range(8):
        groups.append(tuple(sorted(fpoint(i + 8 * k) for k in range(6))))
        rgi.append(tuple(str(r) for r in range(16) if r % 8 == i))
        cgi.append(tuple(str(c) for c in range(24) if c % 8 == i))
    return DesignGrid("FrGBTD", 1, (3,), points, rows, cols, cells,
                      groups=tuple(groups), row_group_index=tuple(rgi),
                      col_group_index=tuple(cgi))


# 33-point incomplete packing over (Z_3 x Z_8) u W_9: 20 within-row pairs A,
# 4 pairs B, and a C family (one triple, two cross pairs, nine blocks pairing
# a finite point with an infinite one), laid out in a 16 x 29 array.

IGBTP_33_A = [
    ((1, 0), (1, 2)), ((1, 1), (1, 5)), ((0, 0), (0, 4)), ((1, 3), (1, 6)),
    ((0, 3), (0, 5)), ((1, 1), (1, 3)), ((1, 4), (1, 7)), ((0, 1), (0, 6)),
    ((0, 0), (0, 5)), ((0, 2), (0, 4)), ((1, 4), (1, 6)), ((1, 0), (1, 3)),
    ((0, 2), (0, 5)), ((1, 2), (1, 7)), ((0, 1), (0, 7)), ((1, 5), (1, 7)),
    ((0, 2), (0, 6)), ((0, 3), (0, 7)), ((1, 1), (1, 4)), ((1, 0), (1, 6)),
]

IGBTP_33_B = [
    ((0, 4), (2, 0)), ((0, 5), (2, 3)), ((0, 7), (1, 4)), ((1, 6), (2, 4)),
]

# (i, s) -> finite points; slots without a full pair carry one infinite point,
# numbered in slot order
IGBTP_33_C = {
    (1, 0): ((0, 0), (0, 1), (1, 0)),
    (1, 1): ((0, 6),),
    (1, 2): ((0, 3), (2, 2)),
    (2, 0): ((2, 5),),
    (2, 1): ((1, 3), (2, 6)),
    (2, 2): ((1, 5),),
    (3, 0): ((2, 7),),
    (3, 1): ((1, 1),),
    (3, 2): ((1, 7),),
    (4, 0): ((2, 1),),
    (4, 1): ((0, 2),),
    (4, 2): ((1, 2),),
}


def build_igbtp_33() -> DesignGrid:
    """16 x 29 incomplete packing with a 4 x 5 hole on the nine infinite points."""
    g = AbelianGroup((3, 8))
    hole_rows = tuple("p%d" % i for i in range(1, 5))
    body_rows = tuple("b%d.%d" % (rb, rs) for rb in range(4) for rs in range(3))
    rows = hole_rows + body_rows
    hole_cols = tuple("q%d" % j for j in range(1, 6))
    gcols = [(c, l) for l in range(8) for c in range(3)]
    cols = hole_cols + tuple(_elem_label(e) for e in gcols)
    cells = {}
    for rb in range(4):
        for rs in range(3):
            row = "b%d.%d" % (rb, rs)
            for j in range(1, 6):
                b = block(fpoint(p) for p in IGBTP_33_A[5 * rb + j - 1])
                cells[(row, "q%d" % j)] = translate_block(b, (rs, 0), g)
    for bi, base in enumerate(IGBTP_33_B, start=1):
        b = block(fpoint(p) for p in base)
        for e in gcols:
            cells[("p%d" % bi, _elem_label(e))] = translate_block(b, e, g)
    inf_index = itertools.count(1)
    for (i, sdx), pts in sorted(IGBTP_33_C.items()):
        members = [fpoint(p) for p in pts]
        if len(members) == 1:
            members.append(ipoint(next(inf_index)))
        b = block(members)
        for (c, l) in gcols:
            row = "b%d.%d" % ((i - 1 + l) % 4, (sdx + c) % 3)
            cells[(row, _elem_label((c, l)))] = translate_block(b, (c, l), g)
    points = tuple(fpoint(e) for e in g.elements()) + tuple(ipoint(i) for i in range(1, 10))
    hole = (tuple(sorted(ipoint(i) for i in range(1, 10))), hole_rows, hole_cols)
    return DesignGrid("IGBTP", 1, (2, 3), points, rows, cols, cells,
                      hole=hole, star=True)


# ---------------------------------------------------------------------------
# starter files


def starter_to_obj(s) -> dict:
    def fam(blocks):
        return [[format_point(p) for p in b] for b in blocks]

    if isinstance(s, GbtdStarter):
        elems = sorted(s.group.elements())
        obj = {"starter_kind": "gbtd",
               "group": {"factors": list(s.group.factors)},
               "params": {"m": s.m, "special": s.special},
               "families": {"A": fam(s.blocks_a[e] for e in elems),
                            "B": fam(s.blocks_b)}}
        if s.colors_a is not None:
            obj["colors"] = {"A": [s.colors_a[e] for e in elems],
                             "B": list(s.colors_b)}
        return obj
    if isinstance(s, IgbtpStarterZ2):
        return {"starter_kind": "igbtp_z2",
                "group": {"factors": [s.m, 2]},
                "params": {"m": s.m, "w": s.w},
                "families": {"A": fam(s.blocks_a), "B": fam(s.blocks_b),
                             "C": fam(s.blocks_c)}}
    if isinstance(s, IgbtpStarterZ4):
        return {"starter_kind": "igbtp_z4",
                "group": {"factors": [s.m, 4]},
                "params": {"m": s.m, "w": 9, "x": s.x, "y": s.y},
                "families": {"A": fam([s.block_a]), "B": fam(s.blocks_b),
                             "C": fam(s.blocks_c), "D": fam(s.blocks_d)}}
    if isinstance(s, FrGbtdStarter):
        keys = sorted(s.blocks)
        return {"starter_kind": "frgbtd",
                "group": {"factors": [3 * s.t]},
                "params": {"t": s.t},
                "families": {"A": fam(s.blocks[k] for k in keys)}}
    raise TypeError("unknown starter type %r" % type(s))


def starter_from_obj(obj: dict):
    def fam(lst):
        return [block(parse_point(x) for x in entry) for entry in lst]

    kind = obj["starter_kind"]
    fams = obj["families"]
    if kind == "gbtd":
        group = AbelianGroup(tuple(obj["group"]["factors"]))
        elems = sorted(group.elements())
        blocks_a = dict(zip(elems, fam(fams["A"])))
        colors_a = None
        colors_b = None
        if obj.get("colors"):
            colors_a = dict(zip(elems, obj["colors"]["A"]))
            colors_b = tuple(obj["colors"]["B"])
        return GbtdStarter(group, blocks_a, tuple(fam(fams["B"])),
                           special=bool(obj["params"].get("special")),
                           colors_a=colors_a, colors_b=colors_b)
    if kind == "igbtp_z2":
        return IgbtpStarterZ2(obj["params"]["m"], obj["params"]["w"],
                              tuple(fam(fams["A"])), tuple(fam(fams["B"])),
                              tuple(fam(fams["C"])))
    if kind == "igbtp_z4":
        return IgbtpStarterZ4(obj["params"]["m"], obj["params"]["x"], obj["params"]["y"],
                              fam(fams["A"])[0], tuple(fam(fams["B"])),
                              tuple(fam(fams["C"])), tuple(fam(fams["D"])))
    if kind == "frgbtd":
        t = obj["params"]["t"]
        keys = [(i, j) for i in range(1, t) for j in (0, 1)]
        return FrGbtdStarter(t, dict(zip(keys, fam(fams["A"]))))
    raise ValueError("unknown starter kind %r" % kind)


def verify_starter(s) -> VerifyReport:
    if isinstance(s, GbtdStarter):
        return verify_gbtd_starter(s)
    if isinstance(s, IgbtpStarterZ2):
        return verify_igbtp_z2_starter(s)
    if isinstance(s, IgbtpStarterZ4):
        return verify_igbtp_z4_starter(s)
    if isinstance(s, FrGbtdStarter):
        return verify_frgbtd_starter(s)
    raise TypeError("unknown starter type %r" % type(s))


def develop_starter(s) -> DesignGrid:
    if isinstance(s, GbtdStarter):
        return develop_gbtd(s)
    if isinstance(s, IgbtpStarterZ2):
        return develop_igbtp_z2(s)
    if isinstance(s, IgbtpStarterZ4):
        return develop_igbtp_z4(s)
    if isinstance(s, FrGbtdStarter):
        return develop_frgbtd(s)
    raise TypeError("unknown starter type %r" % type(s))


def dumps_starter(s) -> str:
    return json.dumps(starter_to_obj(s), sort_keys=True, indent=1) + "\n"


def loads_starter(text: str):
    return starter_from_obj(json.loads(text))


def save_starter(s, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_starter(s))


def load_starter(path):
    with open(path, encoding="utf-8") as fh:
        return loads_starter(fh.read())
