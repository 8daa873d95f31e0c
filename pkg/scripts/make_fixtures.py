#!/usr/bin/env python3
"""Regenerate the reference arrays under fixtures/ and verify each one.

Cell syntax in the tables below: blocks are space-separated point labels,
an optional trailing |c / |d / |h marks the block color (club / diamond /
heart), "-" is an empty cell.  Point labels: "3_1" = 3 with copy 1,
"I4" = the fourth infinite point, bare letters map to numbered infinite
points.
"""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from tforge.algebra import fpoint, ipoint
from tforge.designs import DesignGrid, block, dumps_grid, verify_auto, verify_coloring

OUT = pathlib.Path(__file__).resolve().parents[1] / "fixtures"

COLOR = {"c": 0, "d": 1, "h": 2}


def parse_cell(text, letters=None):
    text = text.strip()
    if text in ("", "-"):
        return None, None
    color = None
    if "|" in text:
        text, mark = text.split("|")
        color = COLOR[mark.strip()]
    pts = []
    for tok in text.split():
        if tok.startswith("I"):
            pts.append(ipoint(int(tok[1:] or 0)))
        elif letters and tok in letters:
            pts.append(ipoint(letters.index(tok) + 1))
        elif "_" in tok:
            b, c = tok.split("_")
            pts.append(fpoint(int(b), int(c)))
        else:
            pts.append(fpoint(int(tok)))
    return block(pts), color


def build(kind, lam, k_set, table, rows, cols, letters=None, **kw):
    cells, colors = {}, {}
    for r, row in zip(rows, table):
        assert len(row) == len(cols), "row %s has %d cells" % (r, len(row))
        for c, cell in zip(cols, row):
            b, col = parse_cell(cell, letters)
            if b is None:
                continue
            cells[(r, c)] = b
            if col is not None:
                colors[(r, c)] = col
    points = sorted({p for b in cells.values() for p in b})
    return DesignGrid(kind, lam, k_set, tuple(points), tuple(rows), tuple(cols),
                      cells, colors or None, **kw)


def rc(n, prefix=""):
    return tuple(prefix + str(i + 1) for i in range(n))


# ---------------------------------------------------------------------------
# fig1: the 3x4 packing whose code is the running 6-word example

FIG1 = [
    ["-",     "1 4", "2 6", "3 5"],
    ["1 2 3", "2 5", "3 4", "1 6"],
    ["4 5 6", "3 6", "1 5", "2 4"],
]

# ---------------------------------------------------------------------------
# fig2: 3-*colorable RBIBD(15,3,1) over (Z7 x Z2) + one infinite point

FIG2 = [
    ["0_0 0_1 I0|c", "2_0 4_0 3_1|c", "6_1 4_0 1_0|d", "2_1 1_1 6_1|c",
     "5_1 1_0 2_0|h", "4_1 3_1 1_1|h", "5_1 4_1 2_1|d"],
    ["6_1 5_1 3_1|c", "1_0 1_1 I0|c", "3_0 5_0 4_1|c", "3_0 3_1 I0|d",
     "5_0 0_0 6_1|d", "6_0 1_0 0_1|d", "0_0 2_0 1_1|h"],
    ["1_0 3_0 2_1|c", "0_1 6_1 4_1|c", "2_0 2_1 I0|d", "4_0 6_0 5_1|c",
     "1_1 6_0 3_0|d", "5_0 5_1 I0|h", "3_1 1_0 5_0|d"],
    ["4_1 2_0 6_0|c", "5_1 3_0 0_0|c", "1_1 0_1 5_1|d", "0_1 5_0 2_0|h",
     "4_0 4_1 I0|d", "2_1 0_0 4_0|h", "6_0 6_1 I0|h"],
    ["1_1 4_0 5_0|c", "2_1 5_0 6_0|d", "3_1 6_0 0_0|c", "4_1 0_0 1_0|d",
     "3_1 2_1 0_1|h", "6_1 2_0 3_0|c", "0_1 3_0 4_0|d"],
]

# ---------------------------------------------------------------------------
# fig3: 2-*colorable special 9x13 array over (Z8 x [3]) + 3 infinite points

FIG3 = [
    ["1_0 7_1 I2|c", "6_0 3_2 I1|c", "0_0 4_1 6_2|c", "6_0 7_1 0_2|d",
     "7_0 0_1 1_2|c", "5_0 5_1 5_2|d", "1_1 4_2 I0|c",
     "0_0 6_1 I2|d", "4_0 6_1 5_2|c", "1_0 2_0 4_0|d", "2_0 3_0 5_0|c",
     "2_2 7_2 0_2|c", "2_1 3_1 5_1|c"],
    ["5_0 2_2 I1|d", "2_0 0_1 I2|c", "7_0 4_2 I1|c", "1_0 5_1 7_2|c",
     "4_0 4_1 4_2|d", "0_0 1_1 2_2|c", "7_0 5_1 I2|d",
     "2_1 5_2 I0|c", "5_0 7_1 6_2|c", "3_1 4_1 6_1|c", "0_1 1_1 3_1|d",
     "3_0 4_0 6_0|c", "3_2 0_2 1_2|c"],
    ["3_1 6_2 I0|c", "4_1 7_2 I0|d", "3_0 1_1 I2|c", "0_0 5_2 I1|c",
     "2_0 6_1 0_2|c", "3_0 7_1 1_2|d", "1_0 2_1 3_2|c",
     "2_0 3_1 4_2|d", "6_0 0_1 7_2|c", "4_2 1_2 2_2|c", "4_1 5_1 7_1|c",
     "5_1 6_1 0_1|d", "4_0 5_0 7_0|c"],
    ["3_0 4_1 5_2|c", "1_0 1_1 1_2|d", "5_1 0_2 I0|c", "4_0 2_1 I2|d",
     "5_0 3_1 I2|c", "2_0 7_2 I1|c", "4_0 0_1 2_2|c",
     "7_0 7_1 7_2|d", "0_0 2_1 1_2|c", "0_2 5_2 6_2|d", "6_0 7_0 1_0|c",
     "6_2 3_2 4_2|c", "6_1 7_1 1_1|c"],
    ["6_0 2_1 4_2|d", "4_0 5_1 6_2|c", "5_0 6_1 7_2|d", "6_1 1_2 I0|c",
     "1_0 6_2 I1|d", "6_0 4_1 I2|c", "3_0 0_2 I1|c",
     "5_0 1_1 3_2|c", "1_0 3_1 2_2|c", "7_1 0_1 2_1|c", "5_2 2_2 3_2|d",
     "7_0 0_0 2_0|c", "7_2 4_2 5_2|c"],
    ["0_0 0_1 0_2|d", "5_0 2_1 0_2|c", "4_0 7_1 3_2|c", "2_0 1_1 6_2|c",
     "7_1 2_2 I0|d", "1_0 6_1 4_2|c", "0_0 3_1 7_2|c",
     "6_0 5_1 2_2|c", "2_0 4_1 3_2|d", "3_0 7_0 I0|c", "1_2 6_2 7_2|d",
     "5_2 1_2 I2|c", "4_1 0_1 I1|c"],
    ["7_0 6_1 3_2|c", "7_0 3_1 5_2|d", "6_0 3_1 1_2|c", "5_0 0_1 4_2|c",
     "3_0 2_1 7_2|c", "0_1 3_2 I0|d", "2_0 7_1 5_2|c",
     "1_0 4_1 0_2|c", "3_0 5_1 4_2|d", "1_1 5_1 I1|c", "4_0 0_0 I0|c",
     "1_1 2_1 4_1|d", "6_2 2_2 I2|c"],
    ["2_0 5_1 1_2|c", "0_0 7_1 4_2|c", "2_0 2_1 2_2|d", "7_0 4_1 2_2|c",
     "6_0 1_1 5_2|c", "4_0 3_1 0_2|c", "6_0 6_1 6_2|d",
     "3_0 0_1 6_2|c", "I0 I1 I2|d", "3_2 7_2 I2|c", "2_1 6_1 I1|c",
     "5_0 1_0 I0|c", "0_0 1_0 3_0|d"],
    ["4_0 1_1 7_2|c", "3_0 6_1 2_2|c", "1_0 0_1 5_2|c", "3_0 3_1 3_2|d",
     "0_0 5_1 3_2|c", "7_0 2_1 6_2|c", "5_0 4_1 1_2|c",
     "4_0 1_2 I1|d", "7_0 1_1 0_2|d", "5_0 6_0 0_0|d", "4_2 0_2 I2|c",
     "3_1 7_1 I1|c", "6_0 2_0 I0|c"],
]

# ---------------------------------------------------------------------------
# fig7: incomplete 14x25 packing over Z20 + 9 infinite points (letters a..i)

W9 = list("abcdefghi")

FIG7 = [
    ["-", "-", "-", "-", "-",
     "2 13", "3 14", "4 15", "5 16", "6 17", "7 18", "8 19", "9 0",
     "10 1", "11 2", "12 3", "13 4", "14 5", "15 6", "16 7", "17 8",
     "18 9", "19 10", "0 11", "1 12"],
    ["-", "-", "-", "-", "-",
     "12 16", "13 17", "14 18", "15 19", "16 0", "17 1", "18 2", "19 3",
     "0 4", "1 5", "2 6", "3 7", "4 8", "5 9", "6 10", "7 11",
     "8 12", "9 13", "10 14", "11 15"],
    ["-", "-", "-", "-", "-",
     "15 18", "16 19", "17 0", "18 1", "19 2", "0 3", "1 4", "2 5",
     "3 6", "4 7", "5 8", "6 9", "7 10", "8 11", "9 12", "10 13",
     "11 14", "12 15", "13 16", "14 17"],
    ["-", "-", "-", "-", "-",
     "1 3", "2 4", "3 5", "4 6", "5 7", "6 8", "7 9", "8 10",
     "9 11", "10 12", "11 13", "12 14", "13 15", "14 16", "15 17", "16 18",
     "17 19", "18 0", "19 1", "0 2"],
    ["0 10", "0 12", "2 7", "4 16", "9 17",
     "4 5 11", "i 18", "h 1", "g 12", "f 18", "e 13", "d 16", "c 13",
     "b 15", "a 9", "14 15 1", "i 8", "h 11", "g 2", "f 8", "e 3",
     "d 6", "c 3", "b 5", "a 19"],
    ["1 11", "1 13", "0 5", "3 8", "10 18",
     "a 0", "5 6 12", "i 19", "h 2", "g 13", "f 19", "e 14", "d 17",
     "c 14", "b 16", "a 10", "15 16 2", "i 9", "h 12", "g 3", "f 9",
     "e 4", "d 7", "c 4", "b 6"],
    ["2 12", "14 19", "4 19", "1 9", "11 16",
     "b 7", "a 1", "6 7 13", "i 0", "h 3", "g 14", "f 0", "e 15",
     "d 18", "c 15", "b 17", "a 11", "16 17 3", "i 10", "h 13", "g 4",
     "f 10", "e 5", "d 8", "c 5"],
    ["3 13", "2 10", "12 17", "0 15", "5 13",
     "c 6", "b 8", "a 2", "7 8 14", "i 1", "h 4", "g 15", "f 1",
     "e 16", "d 19", "c 16", "b 18", "a 12", "17 18 4", "i 11", "h 14",
     "g 5", "f 11", "e 6", "d 9"],
    ["4 14", "6 11", "1 16", "13 18", "0 8",
     "d 10", "c 7", "b 9", "a 3", "8 9 15", "i 2", "h 5", "g 16",
     "f 2", "e 17", "d 0", "c 17", "b 19", "a 13", "18 19 5", "i 12",
     "h 15", "g 6", "f 12", "e 7"],
    ["5 15", "7 15", "9 14", "2 17", "4 12",
     "e 8", "d 11", "c 8", "b 10", "a 4", "9 10 16", "i 3", "h 6",
     "g 17", "f 3", "e 18", "d 1", "c 18", "b 0", "a 14", "19 0 6",
     "i 13", "h 16", "g 7", "f 13"],
    ["6 16", "3 18", "8 13", "5 10", "3 15",
     "f 14", "e 9", "d 12", "c 9", "b 11", "a 5", "10 11 17", "i 4",
     "h 7", "g 18", "f 4", "e 19", "d 2", "c 19", "b 1", "a 15",
     "0 1 7", "i 14", "h 17", "g 8"],
    ["7 17", "4 9", "3 11", "6 14", "7 19",
     "g 9", "f 15", "e 10", "d 13", "c 10", "b 12", "a 6", "11 12 18",
     "i 5", "h 8", "g 19", "f 5", "e 0", "d 3", "c 0", "b 2",
     "a 16", "1 2 8", "i 15", "h 18"],
    ["8 18", "5 17", "10 15", "7 12", "2 14",
     "h 19", "g 10", "f 16", "e 11", "d 14", "c 11", "b 13", "a 7",
     "12 13 19", "i 6", "h 9", "g 0", "f 6", "e 1", "d 4", "c 1",
     "b 3", "a 17", "2 3 9", "i 16"],
    ["9 19", "8 16", "6 18", "11 19", "1 6",
     "i 17", "h 0", "g 11", "f 17", "e 12", "d 15", "c 12", "b 14",
     "a 8", "13 14 0", "i 7", "h 10", "g 1", "f 7", "e 2", "d 5",
     "c 2", "b 4", "a 18", "3 4 10"],
]

# ---------------------------------------------------------------------------
# fig8: 12x18 frame of type 6^6 over (Z10 x [3]) + 6 infinite points

FIG8 = [
    ["-", "-", "-",
     "4_0 1_0 7_0", "4_1 1_1 7_1", "4_2 1_2 7_2",
     "6_0 3_0 9_0", "6_1 3_1 9_1", "6_2 3_2 9_2",
     "8_0 5_0 1_0", "8_1 5_1 1_1", "8_2 5_2 1_2",
     "0_0 7_0 3_0", "0_1 7_1 3_1", "0_2 7_2 3_2",
     "2_0 9_0 5_0", "2_1 9_1 5_1", "2_2 9_2 5_2"],
    ["-", "-", "-",
     "6_0 7_2 8_0", "6_1 7_0 8_1", "6_2 7_1 8_2",
     "8_0 9_2 0_0", "8_1 9_0 0_1", "8_2 9_1 0_2",
     "0_0 1_2 2_0", "0_1 1_0 2_1", "0_2 1_1 2_2",
     "2_0 3_2 4_0", "2_1 3_0 4_1", "2_2 3_1 4_2",
     "4_0 5_2 6_0", "4_1 5_0 6_1", "4_2 5_1 6_2"],
    ["2_0 8_1 1_0", "2_1 8_2 1_1", "2_2 8_0 1_2",
     "-", "-", "-",
     "4_1 8_2 I4", "4_2 8_0 I3", "4_0 8_1 I5",
     "6_2 3_0 I2", "6_0 3_1 I0", "6_1 3_2 I1",
     "4_1 7_2 I0", "4_2 7_0 I1", "4_0 7_1 I2",
     "9_1 1_0 7_1", "9_2 1_1 7_2", "9_0 1_2 7_0"],
    ["6_2 7_2 3_1", "6_0 7_0 3_2", "6_1 7_1 3_0",
     "-", "-", "-",
     "9_1 1_2 I5", "9_2 1_0 I4", "9_0 1_1 I3",
     "7_2 8_1 I3", "7_0 8_2 I5", "7_1 8_0 I4",
     "8_0 9_1 I1", "8_1 9_2 I2", "8_2 9_0 I0",
     "2_2 4_1 6_2", "2_0 4_2 6_0", "2_1 4_0 6_1"],
    ["4_0 0_1 3_0", "4_1 0_2 3_1", "4_2 0_0 3_2",
     "1_1 3_0 9_1", "1_2 3_1 9_2", "1_0 3_2 9_0",
     "-", "-", "-",
     "6_1 0_2 I4", "6_2 0_0 I3", "6_0 0_1 I5",
     "8_2 5_0 I2", "8_0 5_1 I0", "8_1 5_2 I1",
     "6_1 9_2 I0", "6_2 9_0 I1", "6_0 9_1 I2"],
    ["8_2 9_2 5_1", "8_0 9_0 5_2", "8_1 9_1 5_0",
     "4_2 6_1 8_2", "4_0 6_2 8_0", "4_1 6_0 8_1",
     "-", "-", "-",
     "1_1 3_2 I5", "1_2 3_0 I4", "1_0 3_1 I3",
     "9_2 0_1 I3", "9_0 0_2 I5", "9_1 0_0 I4",
     "0_0 1_1 I1", "0_1 1_2 I2", "0_2 1_0 I0"],
    ["6_0 2_1 5_0", "6_1 2_2 5_1", "6_2 2_0 5_2",
     "8_1 1_2 I0", "8_2 1_0 I1", "8_0 1_1 I2",
     "3_1 5_0 1_1", "3_2 5_1 1_2", "3_0 5_2 1_0",
     "-", "-", "-",
     "8_1 2_2 I4", "8_2 2_0 I3", "8_0 2_1 I5",
     "0_2 7_0 I2", "0_0 7_1 I0", "0_1 7_2 I1"],
    ["0_2 1_2 7_1", "0_0 1_0 7_2", "0_1 1_1 7_0",
     "2_0 3_1 I1", "2_1 3_2 I2", "2_2 3_0 I0",
     "6_2 8_1 0_2", "6_0 8_2 0_0", "6_1 8_0 0_1",
     "-", "-", "-",
     "3_1 5_2 I5", "3_2 5_0 I4", "3_0 5_1 I3",
     "1_2 2_1 I3", "1_0 2_2 I5", "1_1 2_0 I4"],
    ["8_0 4_1 7_0", "8_1 4_2 7_1", "8_2 4_0 7_2",
     "2_2 9_0 I2", "2_0 9_1 I0", "2_1 9_2 I1",
     "0_1 3_2 I0", "0_2 3_0 I1", "0_0 3_1 I2",
     "5_1 7_0 3_1", "5_2 7_1 3_2", "5_0 7_2 3_0",
     "-", "-", "-",
     "0_1 4_2 I4", "0_2 4_0 I3", "0_0 4_1 I5"],
    ["2_2 3_2 9_1", "2_0 3_0 9_2", "2_1 3_1 9_0",
     "3_2 4_1 I3", "3_0 4_2 I5", "3_1 4_0 I4",
     "4_0 5_1 I1", "4_1 5_2 I2", "4_2 5_0 I0",
     "8_2 0_1 2_2", "8_0 0_2 2_0", "8_1 0_0 2_1",
     "-", "-", "-",
     "5_1 7_2 I5", "5_2 7_0 I4", "5_0 7_1 I3"],
    ["0_0 6_1 9_0", "0_1 6_2 9_1", "0_2 6_0 9_2",
     "2_1 6_2 I4", "2_2 6_0 I3", "2_0 6_1 I5",
     "4_2 1_0 I2", "4_0 1_1 I0", "4_1 1_2 I1",
     "2_1 5_2 I0", "2_2 5_0 I1", "2_0 5_1 I2",
     "7_1 9_0 5_1", "7_2 9_1 5_2", "7_0 9_2 5_0",
     "-", "-", "-"],
    ["4_2 5_2 1_1", "4_0 5_0 1_2", "4_1 5_1 1_0",
     "7_1 9_2 I5", "7_2 9_0 I4", "7_0 9_1 I3",
     "5_2 6_1 I3", "5_0 6_2 I5", "5_1 6_0 I4",
     "6_0 7_1 I1", "6_1 7_2 I2", "6_2 7_0 I0",
     "0_2 2_1 4_2", "0_0 2_2 4_0", "0_1 2_0 4_1",
     "-", "-", "-"],
]


def fig8_groups():
    rows = rc(12)
    cols = rc(18)
    groups = [tuple(sorted(ipoint(i) for i in range(6)))]
    for t in (0, 2, 4, 1, 3):
        groups.append(tuple(sorted(fpoint(x, c) for x in (t, t + 5) for c in range(3))))
    rgi = [rows[2 * i:2 * i + 2] for i in range(6)]
    cgi = [cols[3 * i:3 * i + 3] for i in range(6)]
    return tuple(groups), tuple(rgi), tuple(cgi)


def main():
    OUT.mkdir(exist_ok=True)
    made = {}

    g1 = build("GBTP", 1, (2, 3), FIG1, rc(3), rc(4))
    made["fig1.json"] = g1
    assert verify_auto(g1).ok, "fig1 failed verification"

    g2 = build("RBIBD", 1, (3,), FIG2, rc(5), rc(7))
    made["fig2_rbibd_15.json"] = g2
    assert verify_auto(g2).ok, "fig2 failed verification"
    assert verify_coloring(g2, 3, want_pi=True).ok, "fig2 coloring failed"

    g3 = build("GBTD", 1, (3,), FIG3, rc(9), rc(13), special=("1", "5"))
    made["fig3_gbtd_3_9.json"] = g3
    assert verify_auto(g3).ok, "fig3 failed verification"
    assert verify_coloring(g3, 2).ok, "fig3 coloring failed"

    g7 = build("IGBTP", 1, (2, 3), FIG7, rc(14), rc(25), letters=W9,
               hole=(tuple(ipoint(i) for i in range(1, 10)), rc(4), rc(5)),
               star=True)
    made["fig7_igbtp_29.json"] = g7
    assert verify_auto(g7).ok, "fig7 failed verification"

    groups, rgi, cgi = fig8_groups()
    g8 = build("FrGBTD", 1, (3,), FIG8, rc(12), rc(18),
               groups=groups, row_group_index=rgi, col_group_index=cgi)
    made["fig8_frgbtd_6_6.json"] = g8
    assert verify_auto(g8).ok, "fig8 failed verification"

    for name, g in made.items():
        (OUT / name).write_text(dumps_grid(g), encoding="utf-8")
        print("wrote", OUT / name)


if __name__ == "__main__":
    main()
