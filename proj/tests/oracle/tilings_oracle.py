#!/usr/bin/env python3
"""Brute-force oracle for the N = 2, 3 weighted incidence matrices.

Tilings are found as exact covers of the skew shape by candidate Dyck tiles,
with every candidate tile listed up front (no leftmost-cell backtracking).
Entries are computed with sympy and written in the library's RatQ schema.

    python3 tests/oracle/tilings_oracle.py tests/golden
"""

import itertools
import json
import sys
from pathlib import Path

import sympy as sp

q = sp.symbols("q")


def dyck_paths(n):
    out = []
    for steps in itertools.product((1, -1), repeat=2 * n):
        h = [0]
        for s in steps:
            h.append(h[-1] + s)
        if min(h) >= 0 and h[-1] == 0:
            out.append(tuple(h))
    return sorted(out)


def leq(a, b):
    return all(x <= y for x, y in zip(a, b))


def cells(a, b):
    return {(j, m) for j in range(len(a)) for m in range(a[j] + 1, b[j]) if (m - a[j]) % 2 == 1}


def candidate_tiles(shape, width):
    """All Dyck tiles (x, xp, profile) whose cells lie in the shape."""
    tiles = []
    for x in range(1, width):
        for h in range(1, width):
            if (x, h) not in shape:
                continue
            stack = [[h]]
            while stack:
                prof = stack.pop()
                if prof[-1] == h:
                    tiles.append((x, x + len(prof) - 1, tuple(prof)))
                j = x + len(prof)
                for m in (prof[-1] - 1, prof[-1] + 1):
                    if m >= h and (j, m) in shape:
                        stack.append(prof + [m])
    return tiles


def tile_cells(t):
    x, _, prof = t
    return {(x + i, m) for i, m in enumerate(prof)}


def exact_covers(shape, tiles):
    shape = frozenset(shape)
    results = []

    def go(remaining, chosen, start):
        if not remaining:
            results.append(list(chosen))
            return
        for i in range(start, len(tiles)):
            c = tile_cells(tiles[i])
            if c <= remaining:
                chosen.append(tiles[i])
                go(remaining - c, chosen, i + 1)
                chosen.pop()

    go(shape, [], 0)
    # Each set is produced once because tiles are taken in index order.
    return results


def level(t, j):
    return t[2][j - t[0]]


def covers(t2, t1):
    lo, hi = max(t1[0], t2[0]), min(t1[1], t2[1])
    return any(level(t2, j) > level(t1, j) for j in range(lo, hi + 1))


def nested(tiling):
    for a, b in itertools.combinations(tiling, 2):
        sa, sb = (a[0] - 1, a[1] + 1), (b[0] - 1, b[1] + 1)
        if sa[1] <= sb[0] or sb[1] <= sa[0]:
            continue
        a_in_b = sb[0] <= sa[0] and sa[1] <= sb[1]
        b_in_a = sa[0] <= sb[0] and sb[1] <= sa[1]
        if a_in_b and b_in_a:
            if not (covers(a, b) or covers(b, a)):
                return False
        elif a_in_b:
            if not covers(b, a):
                return False
        elif b_in_a:
            if not covers(a, b):
                return False
        else:
            return False
    return True


def cover_inclusive(tiling):
    for a, b in itertools.combinations(tiling, 2):
        if a[1] < b[0] or b[1] < a[0]:
            continue
        if covers(a, b) and not (a[0] <= b[0] and b[1] <= a[1]):
            return False
        if covers(b, a) and not (b[0] <= a[0] and a[1] <= b[1]):
            return False
    return True


def qint(n):
    return sum(q ** (n - 1 - 2 * k) for k in range(n))


def weight(t):
    h = t[2][0]
    return qint(h) / qint(h + 1)


def laurent_json(expr):
    expr = sp.expand(expr)
    if expr == 0:
        return []
    low = min(sp.Poly(sp.expand(expr * q ** 64), q).monoms())[0] - 64
    poly = sp.Poly(sp.expand(expr * q ** (-low)), q)
    terms = []
    for (e,), c in sorted(poly.terms()):
        c = sp.Rational(c)
        terms.append([e + low, f"{c.p}/{c.q}"])
    return terms


def ratq_json(expr):
    num, den = sp.fraction(sp.cancel(sp.together(expr)))
    return {"num": laurent_json(num), "den": laurent_json(den)}


def matrices(n):
    paths = dyck_paths(n)
    size = len(paths)
    m = [[sp.Integer(0)] * size for _ in range(size)]
    minv = [[sp.Integer(0)] * size for _ in range(size)]
    for i, a in enumerate(paths):
        for j, b in enumerate(paths):
            if not leq(a, b):
                continue
            shape = cells(a, b)
            tilings = exact_covers(shape, candidate_tiles(shape, len(a) - 1))
            nest = [t for t in tilings if nested(t)]
            assert len(nest) <= 1
            if nest:
                m[i][j] = sp.prod([-weight(t) for t in nest[0]])
            minv[i][j] = sum((sp.prod([weight(t) for t in T]) for T in tilings if cover_inclusive(T)), sp.Integer(0))
    return paths, m, minv


def steps(h):
    return "".join("U" if h[k + 1] > h[k] else "D" for k in range(len(h) - 1))


def main():
    out_dir = Path(sys.argv[1] if len(sys.argv) > 1 else "tests/golden")
    out_dir.mkdir(parents=True, exist_ok=True)
    for n in (2, 3):
        paths, m, minv = matrices(n)
        prod = sp.Matrix(m) * sp.Matrix(minv)
        assert sp.simplify(prod - sp.eye(len(paths))) == sp.zeros(len(paths)), "oracle inverse check failed"
        doc = {
            "n": n,
            "order": [steps(p) for p in paths],
            "M": [[ratq_json(x) for x in row] for row in m],
            "Minv": [[ratq_json(x) for x in row] for row in minv],
        }
        (out_dir / f"matrices_n{n}.json").write_text(json.dumps(doc, indent=1) + "\n")


if __name__ == "__main__":
    main()
