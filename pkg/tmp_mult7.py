import itertools, time, sys
sys.path.insert(0, "src")
from collections import Counter

t, n3, U = 7, 21, 4   # U has multiplicative order 3 mod 21; hole preserved
hole = {0, 7, 14}
pts = sorted((e, c) for c in range(2) for e in range(n3) if e not in hole)

def sig(p):
    return ((p[0] * U) % n3, p[1])

def sig_block(b):
    return tuple(sorted(sig(p) for p in b))

needed = {d: 1 for d in range(n3) if d not in hole}
pools = {("p", 0): Counter(needed), ("p", 1): Counter(needed),
         ("m", (0, 1)): Counter(needed), ("m", (1, 0)): Counter(needed)}

def diff_items(b):
    out = []
    for (x, cx), (y, cy) in itertools.permutations(b, 2):
        key = ("p", cx) if cx == cy else ("m", (cx, cy))
        out.append((key, (x - y) % n3))
    return out

def take(items):
    got = []
    for k, d in items:
        if pools[k][d] <= 0:
            for kk, dd in got:
                pools[kk][dd] += 1
            return None
        pools[k][d] -= 1
        got.append((k, d))
    return got

def give(got):
    for k, d in got:
        pools[k][d] += 1

rj = {0: Counter(), 1: Counter()}

def r_try(key, b):
    i, j = key
    items = Counter((((x - i) % t), c) for x, c in b)
    if any(res == 0 for res, _ in items):
        return None
    for it, c in items.items():
        if rj[j][it] + c > 2:
            return None
    for it, c in items.items():
        rj[j][it] += c
    return items

def r_undo(key, items):
    for it, c in items.items():
        rj[key[1]][it] -= c

# orbit representative slots; index orbit of i under x -> U*x mod t
REPS = [(1, 0), (3, 0), (1, 1), (3, 1)]

def slot_orbit(i, j):
    out = []
    cur = i
    for _ in range(3):
        out.append((cur, j))
        cur = (cur * U) % t
    return out

used = set()
assign = {}
found = None
nodes = 0
t0 = time.time()

def rec(free_orbits):
    global found, nodes
    nodes += 1
    if found:
        return
    if not free_orbits:
        ok = all(rj[j][(res, c)] in (1, 2)
                 for j in (0, 1) for res in range(1, t) for c in range(2))
        if ok and len(used) == 36:
            found = dict(assign)
        return
    avail = [p for p in pts if p not in used]
    p0 = avail[0]
    for pair in itertools.combinations(avail[1:], 2):
        b = (p0,) + pair
        orbit_blocks = [tuple(sorted(b))]
        for _ in range(2):
            orbit_blocks.append(sig_block(orbit_blocks[-1]))
        flat = [p for bl in orbit_blocks for p in bl]
        if len(set(flat)) != 9:
            continue
        if any(p in used for p in flat):
            continue
        for oi, (i0, j0) in enumerate(free_orbits):
            slots_all = slot_orbit(i0, j0)
            for rot in range(3):
                slots = [slots_all[(rot + k) % 3] for k in range(3)]
                got_all = []
                r_all = []
                ok = True
                for bl, key in zip(orbit_blocks, slots):
                    got = take(diff_items(bl))
                    if got is None:
                        ok = False
                        break
                    got_all.append(got)
                    rr = r_try(key, bl)
                    if rr is None:
                        give(got)
                        got_all.pop()
                        ok = False
                        break
                    r_all.append((key, rr))
                if ok:
                    for bl, key in zip(orbit_blocks, slots):
                        assign[key] = bl
                    used.update(flat)
                    rec(free_orbits[:oi] + free_orbits[oi + 1:])
                    used.difference_update(flat)
                    for key, _ in r_all:
                        del assign[key]
                for key, rr in reversed(r_all):
                    r_undo(key, rr)
                for got in reversed(got_all):
                    give(got)
                if found:
                    return

rec(REPS)
print("nodes=%d %.2fs" % (nodes, time.time() - t0))
if found:
    print("FOUND multiplier-invariant starter:")
    for k in sorted(found):
        print(" ", k, found[k])
else:
    print("no U=4-invariant starter; trying U=16")
