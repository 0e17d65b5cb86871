#!/usr/bin/env python3
"""Regenerate the permutation-group fixtures in fixtures/.

Every group is built from explicit generators and its order is checked with
sympy's Schreier-Sims before it is written.  Searches use a fixed seed, so a
rerun reproduces the same files.
"""

import itertools
import json
import random
import sys
from pathlib import Path

from sympy.combinatorics import Permutation, PermutationGroup
from sympy.core.random import seed as sympy_seed

OUT = Path(__file__).resolve().parent.parent / "fixtures"
def cycles(p, degree):
    """1-based cycle notation, '()' for the identity."""
    seen, parts = set(), []
    for i in range(degree):
        if i in seen or p(i) == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = p(j)
        parts.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


def parse(text, degree):
    arr = list(range(degree))
    for cyc in text.strip(")").split(")"):
        pts = [int(x) - 1 for x in cyc.strip("(").split(",")]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            arr[a] = b
    return Permutation(arr)


def write(name, degree, gens, order, note, extra=None):
    G = PermutationGroup(gens)
    if G.order() != order:
        sys.exit(f"{name}: expected order {order}, got {G.order()}")
    doc = {
        "name": name,
        "degree": degree,
        "order": str(order),
        "generators": [cycles(g, degree) for g in gens],
        "note": note,
    }
    if extra:
        doc.update(extra)
    (OUT / f"{name}.json").write_text(json.dumps(doc, indent=2) + "\n")
    print(f"{name}: degree {degree}, order {order}")
    return G


def find_subgroup(G, order, accept, tries=200000):
    """Two random elements generating a subgroup of the given order."""
    for _ in range(tries):
        a, b = G.random(), G.random()
        H = PermutationGroup([a, b])
        if H.order() == order and accept(H):
            return [a, b]
    sys.exit(f"no subgroup of order {order} found")


def mathieu():
    n = 12
    m12_gens = [parse(t, n) for t in
                ["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)",
                 "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)"]]
    M12 = write("m12", n, m12_gens, 95040, "M12 on 12 points")
    # point stabilizer: the first two generators fix 12
    write("m11_point", n, m12_gens[:2], 7920, "M11 as the stabilizer of the point 12 in M12")
    trans = find_subgroup(M12, 7920, lambda H: H.is_transitive())
    write("m11_transitive", n, trans, 7920, "M11 acting transitively on the 12 points of M12")

    # M11 on 11 points with two subgroups whose product is M11
    d = 11
    m11 = [parse("(1,2,3,4,5,6,7,8,9,10,11)", d), parse("(3,7,11,8)(4,10,5,6)", d)]
    M11 = write("m11", d, m11, 7920, "M11 on 11 points")
    # 11:5 is the normalizer of the Sylow 11-subgroup generated by m11[0]
    c = m11[0]
    five = next(g for g in M11.generate() if g.order() == 5 and c ^ g in
                PermutationGroup([c]).elements)
    write("m11_11_5", d, [c, five], 55, "normalizer of a Sylow 11-subgroup of M11")
    # M9.2: set stabilizer of {10, 11}
    stab = [g for g in M11.generate() if {g(9), g(10)} == {9, 10}]
    gens = find_subgroup(PermutationGroup(stab), 144, lambda H: True)
    write("m11_m9_2", d, gens, 144, "set stabilizer of {10,11} in M11 (M9.2)")


def alternating():
    n = 6
    A6 = [parse("(1,2,3)", n), parse("(2,3,4,5,6)", n)]
    write("a6", n, A6, 360, "A6 on 6 points")
    write("a5_point", n, [parse("(1,2,3)", n), parse("(1,2,3,4,5)", n)], 60,
          "A5 fixing the point 6")
    # PSL(2,5) on the projective line {inf,0,...,4} -> points 6,1..5
    # x -> x+1 and x -> -1/x
    def pt(x):
        return 6 if x is None else x + 1
    t = [0] * n
    s = [0] * n
    for x in [None, 0, 1, 2, 3, 4]:
        t[pt(x) - 1] = pt(None if x is None else (x + 1) % 5)
        if x is None:
            y = 0
        elif x == 0:
            y = None
        else:
            y = (-pow(x, -1, 5)) % 5
        s[pt(x) - 1] = pt(y)
    gens = [Permutation([v - 1 for v in t]), Permutation([v - 1 for v in s])]
    write("a5_transitive", n, gens, 60, "PSL(2,5) acting on the 6 points of the projective line")


def digraphs():
    # F_7:3 acting on F_7 (points 1..7 for 0..6), vertex stabilizer x -> 2x
    write("f7_3", 7, [parse("(1,2,3,4,5,6,7)", 7), parse("(2,3,5)(4,7,6)", 7)], 21,
          "F_7:3 acting on F_7; with f7_3_stab and h = (1,2,3,4,5,6,7) the Paley tournament")
    write("f7_3_stab", 7, [parse("(2,3,5)(4,7,6)", 7)], 3, "multiplication by 2 on F_7")
    write("s5", 5, [parse("(1,2,3,4,5)", 5), parse("(1,2)", 5)], 120, "S5 on 5 points")
    write("s5_2x2", 5, [parse("(4,5)", 5), parse("(2,3)", 5)], 4,
          "<(4,5),(2,3)>; with h = (1,2,4)(3,5) a 2-arc-transitive digraph of valency 2")


def modules():
    """Weyl group of F4 on its coroot lattice: row j of s_i is the image of alpha_j^vee."""
    cartan = [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
    gens = []
    for i in range(4):
        m = [[int(r == c) for c in range(4)] for r in range(4)]
        for j in range(4):
            m[j][i] -= cartan[j][i]
        gens.append(m)
    for field in (0, 2):
        doc = {"name": f"f4_coroot_{field}", "field": field, "dimension": 4,
               "generators": [[[x % field if field else x for x in row] for row in g] for g in gens],
               "note": "W(F4) on the coroot lattice, simple reflections in Bourbaki order"}
        (OUT / f"{doc['name']}.json").write_text(json.dumps(doc, indent=2) + "\n")
        print(f"{doc['name']}: dimension 4 over field {field}")


# ---------------------------------------------------------------------------
# GU(3,2) acting on the 63 nonzero vectors of F_4^3

F4_MUL = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]]  # 2 = w, 3 = w^2


def fadd(a, b):
    return a ^ b


def fmul(a, b):
    return F4_MUL[a][b]


def conj(a):
    return fmul(a, a)  # Frobenius


def matvec(v, m):
    out = []
    for j in range(3):
        s = 0
        for i in range(3):
            s = fadd(s, fmul(v[i], m[i][j]))
        out.append(s)
    return tuple(out)


def is_unitary(m):
    # rows orthonormal for the form sum x_i conj(y_i)
    for i in range(3):
        for j in range(3):
            s = 0
            for k in range(3):
                s = fadd(s, fmul(m[i][k], conj(m[j][k])))
            if s != (1 if i == j else 0):
                return False
    return True


def det(m):
    a, b, c = m
    t1 = fmul(a[0], fadd(fmul(b[1], c[2]), fmul(b[2], c[1])))
    t2 = fmul(a[1], fadd(fmul(b[0], c[2]), fmul(b[2], c[0])))
    t3 = fmul(a[2], fadd(fmul(b[0], c[1]), fmul(b[1], c[0])))
    return fadd(fadd(t1, t2), t3)


def unitary():
    vecs = [v for v in itertools.product(range(4), repeat=3) if any(v)]
    index = {v: i for i, v in enumerate(vecs)}
    rows = [r for r in itertools.product(range(4), repeat=3)
            if fadd(fadd(fmul(r[0], conj(r[0])), fmul(r[1], conj(r[1]))), fmul(r[2], conj(r[2]))) == 1]
    mats = [m for m in itertools.product(rows, repeat=3) if is_unitary(m)]
    assert len(mats) == 648, len(mats)

    def perm(m):
        return Permutation([index[matvec(v, m)] for v in vecs])

    rng = random.Random(3)
    full = su = None
    while full is None:
        a, b = rng.sample(mats, 2)
        if PermutationGroup([perm(a), perm(b)]).order() == 648:
            full = [perm(a), perm(b)]
    special = [m for m in mats if det(m) == 1]
    assert len(special) == 216
    while su is None:
        a, b = rng.sample(special, 2)
        if PermutationGroup([perm(a), perm(b)]).order() == 216:
            su = [perm(a), perm(b)]
    write("gu32", 63, full, 648, "GU(3,2) acting on the nonzero vectors of F_4^3")
    write("su32", 63, su, 216, "SU(3,2) inside the same action")


if __name__ == "__main__":
    OUT.mkdir(exist_ok=True)
    sympy_seed(20240611)
    mathieu()
    alternating()
    digraphs()
    modules()
    unitary()
