#!/usr/bin/env python3
"""A-side reference tables: pairing, cup products, triple tensors, obstruction
bundles and the three-point function, frozen for the C++ unit tests."""
import sys
from fractions import Fraction
from itertools import product

sys.path.insert(0, __file__.rsplit("/", 1)[0])
from wps import (Spectrum, pairing, triple, cup, gw_three_point, gw_degree,
                 frac_part)


def classes(sp):
    out = []
    for g in sp.sectors:
        for d in range(sp.delta(sp.inv(g))):
            out.append((sp.inv(g), d))
    # order classes by sector of gamma ascending, then d
    return sorted(out)


def label(c):
    g, d = c
    return f"eta[{d},{g}]"


def check_frobenius_compat(sp):
    cls = classes(sp)
    for c0, c1, c2 in product(cls, repeat=3):
        t = triple(sp, c0, c1, c2)
        u = cup(sp, c0, c1)
        via = Fraction(0) if u is None else u[0] * pairing(sp, u[1], c2)
        assert t == via, (sp.w, c0, c1, c2, t, via)
        # symmetry
        assert t == triple(sp, c1, c2, c0) == triple(sp, c2, c0, c1)


def golden_122333():
    sp = Spectrum([1, 2, 2, 3, 3, 3])
    F = Fraction
    t, h = F(1, 3), F(1, 2)
    tt = F(2, 3)

    # pairing blocks
    for d in range(6):
        assert pairing(sp, (F(0), d), (F(0), 5 - d)) == F(1, 108)
    for d in range(3):
        assert pairing(sp, (t, d), (tt, 2 - d)) == F(1, 27)
    for d in range(2):
        assert pairing(sp, (h, d), (h, 1 - d)) == F(1, 4)
    assert pairing(sp, (F(0), 0), (F(0), 4)) == 0
    assert pairing(sp, (t, 0), (h, 1)) == 0

    # cup table rows (decoded golden cells)
    def C(c0, c1):
        return cup(sp, c0, c1)

    for g in (F(0), t, h, tt):
        for d in range(sp.delta(sp.inv(g))):
            assert C((F(0), 0), (g, d)) == (1, (g, d))          # unit row
            nxt = C((F(0), 1), (g, d))                           # degree shift
            assert nxt == ((1, (g, d + 1)) if d + 1 < sp.delta(sp.inv(g))
                           else None)
    assert C((F(0), 2), (F(0), 2)) == (1, (F(0), 4))
    assert C((F(0), 2), (F(0), 3)) == (1, (F(0), 5))
    assert C((F(0), 2), (F(0), 4)) is None
    assert C((F(0), 2), (t, 0)) == (1, (t, 2))
    assert C((F(0), 2), (tt, 0)) == (1, (tt, 2))
    assert C((F(0), 2), (h, 0)) is None
    assert C((F(0), 3), (F(0), 3)) is None
    assert C((t, 0), (t, 0)) == (4, (tt, 2))
    assert C((t, 0), (t, 1)) is None
    assert C((t, 0), (h, 0)) is None                              # 5/6 not a sector
    assert C((t, 0), (tt, 0)) == (4, (F(0), 3))
    assert C((t, 0), (tt, 1)) == (4, (F(0), 4))
    assert C((t, 0), (tt, 2)) == (4, (F(0), 5))
    assert C((t, 1), (tt, 0)) == (4, (F(0), 4))
    assert C((t, 1), (tt, 1)) == (4, (F(0), 5))
    assert C((t, 1), (tt, 2)) is None
    assert C((t, 2), (tt, 0)) == (4, (F(0), 5))
    assert C((h, 0), (h, 0)) == (27, (F(0), 4))
    assert C((h, 0), (h, 1)) == (27, (F(0), 5))
    assert C((h, 0), (tt, 0)) is None                             # 7/6 not a sector
    assert C((h, 1), (h, 1)) is None
    assert C((tt, 0), (tt, 0)) == (1, (t, 1))
    assert C((tt, 0), (tt, 1)) == (1, (t, 2))
    assert C((tt, 0), (tt, 2)) is None

    # triples
    assert triple(sp, (t, 0), (t, 0), (t, 0)) == F(4, 27)
    assert triple(sp, (F(0), 0), (h, 0), (h, 1)) == F(1, 4)
    assert triple(sp, (tt, 0), (tt, 0), (tt, 1)) == F(1, 27)
    assert triple(sp, (F(0), 0), (F(0), 0), (F(0), 5)) == F(1, 108)

    # obstruction data
    assert sp.J(t, t, t) == [1, 2]
    assert sp.J(tt, tt, tt) == [0]
    assert sp.J(t, t, tt) == []  # gamma-sum not integral for the J used in cup

    check_frobenius_compat(sp)
    print("122333 golden tables OK")


def golden_12():
    sp = Spectrum([1, 2])
    F = Fraction
    h = F(1, 2)
    assert pairing(sp, (F(0), 0), (F(0), 1)) == F(1, 2)
    assert pairing(sp, (h, 0), (h, 0)) == F(1, 2)
    assert cup(sp, (h, 0), (h, 0)) == (1, (F(0), 1))  # twisted square hits eta^1_0
    assert cup(sp, (F(0), 1), (h, 0)) is None
    assert triple(sp, (F(0), 0), (F(0), 0), (F(0), 1)) == F(1, 2)
    assert triple(sp, (F(0), 0), (h, 0), (h, 0)) == F(1, 2)
    check_frobenius_compat(sp)

    # three-point function table, flat indices
    rows = {}
    for j in range(3):
        for k in range(3):
            rows[(j, k)] = gw_three_point(sp, j, k)
    assert rows[(0, 0)] == (F(1, 2), "classical")
    assert rows[(1, 2)] == (F(1, 4), "quantum-conjecture")
    assert rows[(2, 2)] == (F(0), "zero")
    assert rows[(0, 0)] == (F(1, 2), "classical")
    assert rows[(2, 1)] == (F(1, 4), "quantum-conjecture")
    print("12 golden tables OK,", {k: (str(v[0]), v[1]) for k, v in rows.items()})


def gw_checks():
    F = Fraction
    sp = Spectrum([1, 1, 1])
    for j in range(3):
        for k in range(3):
            v, st = gw_three_point(sp, j, k)
            assert st in ("classical", "quantum-theorem", "zero")
    assert gw_three_point(sp, 2, 2) == (F(1), "quantum-theorem")
    assert gw_three_point(sp, 0, 1) == (F(1), "classical")
    assert gw_three_point(sp, 0, 0) == (F(0), "zero")

    sp = Spectrum([1, 2, 2, 3, 3, 3])
    v, st = gw_three_point(sp, 5, 13)
    assert (v, st) == (F(1, 108 * 27), "quantum-conjecture")
    d = gw_degree(sp, 5, 13)
    assert d == F(1, 3) and d * sp.lcm_w == 2
    v, st = gw_three_point(sp, 4, 0)
    assert (v, st) == (F(1, 108), "classical")
    # non-coprime: congruence failures cannot be certified as zero
    sp = Spectrum([2, 4])
    assert gw_three_point(sp, 0, 0) == (F(1, 8), "classical")
    assert gw_three_point(sp, 0, 1) == (None, "unsupported")
    print("gw checks OK")


def initial_a0_entries(w):
    sp = Spectrum(w)
    ents = []
    for j in range(sp.mu):
        k = (j + 1) % sp.mu
        m = (sp.n - j - 1) % sp.mu
        v, st = gw_three_point(sp, j, m)
        assert v is not None, (w, j)
        ents.append((v * sp.mu * sp.prod_I(sp.s[k]), st))
    return ents


if __name__ == "__main__":
    golden_122333()
    golden_12()
    gw_checks()
    for w in [[1, 1], [1, 2], [1, 3], [3, 4], [1, 1, 1], [1, 2, 3],
              [2, 2, 2], [1, 2, 2, 3, 3, 3]]:
        check_frobenius_compat(Spectrum(w))
    print("frobenius compat OK")
    for w in [[1, 2], [1, 1, 1], [1, 2, 2, 3, 3, 3]]:
        print(w, "A0 entries:",
              [(str(v), st) for v, st in initial_a0_entries(w)])
