import json
from itertools import product

import pytest

import weylkit


def test_orders():
    assert weylkit.root_count("F4") == 48
    assert weylkit.weyl_order("F4") == 1152
    assert weylkit.weyl_order("E6") == 51840
    data = json.loads(weylkit.rootsys_json("G2"))
    assert data is not None


def test_words():
    assert weylkit.element_order("F4", "1232") == 4
    # s1 s1 cancels
    assert weylkit.reduced_word("F4", "1123") == "23"


def test_torus():
    assert weylkit.torus_order_poly("F4", "longest") == "(q+1)^4"
    assert weylkit.torus_order_poly("E6", None, twisted=True) == "(q+1)^6"
    w = "123142314542314565423456"
    assert weylkit.torus_invariant_factors("E6", w, 2) == [7, 7, 7]


def _ppd_oracle(q, n):
    N = q**n - 1
    primes, x, p = [], N, 2
    while p * p <= x:
        if x % p == 0:
            primes.append(p)
            while x % p == 0:
                x //= p
        p += 1
    if x > 1:
        primes.append(x)
    return [p for p in primes if all((q**i - 1) % p for i in range(1, n))]


@pytest.mark.parametrize("q,n", [(2, 5), (3, 4), (4, 3), (5, 6), (7, 5), (2, 12)])
def test_ppd_matches_trial_division(q, n):
    primes, exc = weylkit.ppd(q, n)
    assert primes == _ppd_oracle(q, n)
    assert exc is None


def test_ppd_exceptions_and_big_ints():
    assert weylkit.ppd(2, 6) == ([], "zsigmondy_26")
    assert weylkit.ppd(7, 2)[1] == "mersenne_like_n2"
    primes, _ = weylkit.ppd(2, 89)
    assert primes == [2**89 - 1]


def _brute_irreducible_mod2(gens):
    """Every nonzero vector spins to the whole space."""
    n = len(gens[0])

    def apply(v, g):
        return tuple(sum(v[i] * g[i][j] for i in range(n)) % 2 for j in range(n))

    for v in product(range(2), repeat=n):
        if not any(v):
            continue
        frontier = [v]
        span = {tuple([0] * n), v}
        while frontier:
            u = frontier.pop()
            for g in gens:
                w = apply(u, g)
                if w not in span:
                    span |= {tuple((a + b) % 2 for a, b in zip(w, s)) for s in span}
                    frontier.append(w)
        if len(span) < 2**n:
            return False
    return True


def test_modules():
    cartan = [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
    gens = []
    for i in range(4):
        m = [[int(r == c) for c in range(4)] for r in range(4)]
        for j in range(4):
            m[j][i] -= cartan[j][i]
        gens.append(m)
    assert weylkit.irreducible(0, gens)["verdict"] == "irreducible"
    mod2 = [[[x % 2 for x in row] for row in g] for g in gens]
    res = weylkit.irreducible(2, mod2)
    assert (res["verdict"] == "irreducible") == _brute_irreducible_mod2(mod2)
    assert res["verdict"] == "reducible"
    assert sorted(weylkit.chop_dimensions("m12", 5)) == [1, 11]


def test_parabolic():
    rows = weylkit.parabolic_table("F4", [1, 2, 4])
    assert len(rows) == 17
    assert sum(r["cosets"] for r in rows) == 96
    assert sum(not r["self_paired"] for r in rows) == 4


def test_factorizations_and_digraphs():
    recs = weylkit.factorizations("gu32", 8, sylow2=True)
    assert len(recs) == 11
    for r in recs:
        assert 648 * r["intersection_order"] == r["A_order"] * r["B_order"]
    paley = weylkit.s_arc_transitive(7, ["(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"], ["(2,3,5)(4,7,6)"],
                                     "(1,2,3,4,5,6,7)", 2)
    assert paley["valency"] == 3
    assert not paley["transitive"]
    assert paley["orbit_count"] == 3
    assert weylkit.eliminate(21, 1, 3, 2) == ([7], 2)


def test_errors():
    with pytest.raises(ValueError):
        weylkit.ppd(2, 0)
    with pytest.raises(ValueError):
        weylkit.s_arc_transitive(3, ["(1,2,3)", "(1,2)"], [], "(1,2)", 1)


def test_criterion_one():
    c = weylkit.run_criterion(1)
    assert c["pass"], c["failures"]
    assert weylkit.criterion_count == 10
