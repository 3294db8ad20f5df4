#!/usr/bin/env python3
"""B-side reference values: star products, residue metric, connection
matrices, graded structures, and the transport checks against the A-side."""
import sys
from fractions import Fraction
from itertools import product

sys.path.insert(0, __file__.rsplit("/", 1)[0])
from wps import (Spectrum, star, rescale_expo, residue_pairing, a0_monomial,
                 a0_sector, b_triple_direct, b_triple_formula, graded_product,
                 graded_pairing, graded_triple, pairing, triple, cup,
                 gw_three_point)

F = Fraction


def star_tilde(sp, i, j):
    """coefficient of [w~_{(i+j) mod mu}] in [w~_i] * [w~_j]."""
    expo, idx = star(sp, i, j)
    return (sp.wpow(expo) * sp.wpow(rescale_expo(sp, i))
            * sp.wpow(rescale_expo(sp, j)) / sp.wpow(rescale_expo(sp, idx)), idx)


def graded_tilde(sp, i, j):
    p = graded_product(sp, i, j)
    if p is None:
        return None
    coeff, idx = p
    return (coeff * sp.wpow(rescale_expo(sp, i)) * sp.wpow(rescale_expo(sp, j))
            / sp.wpow(rescale_expo(sp, idx)), idx)


def ring_axioms(sp):
    mu = sp.mu
    for i in range(mu):
        c, idx = star_tilde(sp, 0, i)
        r0 = sp.wpow(rescale_expo(sp, 0))
        assert (c, idx) == (1, i) and r0 == 1, (sp.w, i)
    for i, j in product(range(mu), repeat=2):
        assert star_tilde(sp, i, j) == star_tilde(sp, j, i)
    for i, j, k in product(range(mu), repeat=3):
        c1, x = star_tilde(sp, i, j)
        c2, y = star_tilde(sp, x, k)
        c3, u = star_tilde(sp, j, k)
        c4, v = star_tilde(sp, i, u)
        assert (c1 * c2, y) == (c3 * c4, v), (sp.w, i, j, k)
    # Frobenius compatibility of the residue metric
    for i, j, k in product(range(mu), repeat=3):
        c1, x = star_tilde(sp, i, j)
        lhs = c1 * residue_pairing(sp, x, k)
        c2, y = star_tilde(sp, j, k)
        rhs = residue_pairing(sp, i, y) * c2
        assert lhs == rhs, (sp.w, i, j, k)


def triple_routes(sp):
    for j, k in product(range(sp.mu), repeat=2):
        assert b_triple_direct(sp, j, k) == b_triple_formula(sp, j, k), \
            (sp.w, j, k)


def graded_checks(sp):
    mu = sp.mu
    for j, k in product(range(mu), repeat=2):
        assert graded_pairing(sp, j, k) == residue_pairing(sp, j, k), \
            (sp.w, j, k)
    for i, j in product(range(mu), repeat=2):
        p = graded_product(sp, i, j)
        if p is not None:
            expo, idx = star(sp, i, j)
            assert p == (sp.wpow(expo), idx)


def a0_checks(sp):
    mono = a0_monomial(sp)
    sect = a0_sector(sp)
    assert mono == sect, (sp.w, mono, sect)
    prod_c = 1
    for e in mono:
        prod_c *= e
    c = F(sp.mu) ** sp.mu
    for wi in sp.w:
        c /= F(wi) ** wi
    assert prod_c == c, (sp.w, prod_c, c)
    # A-side route: mu * gw(j, (n-j-1) mod mu) * prodI(s((j+1) mod mu))
    if sp.n >= 1:
        for j in range(sp.mu):
            m = (sp.n - j - 1) % sp.mu
            v, st = gw_three_point(sp, j, m)
            assert v is not None
            assert v * sp.mu * sp.prod_I(sp.s[(j + 1) % sp.mu]) == mono[j], \
                (sp.w, j, st)
    # self-adjointness w.r.t. the residue metric; A_inf + A_inf* = n id
    g = [[residue_pairing(sp, j, k) for k in range(sp.mu)]
         for j in range(sp.mu)]
    A0 = [[F(0)] * sp.mu for _ in range(sp.mu)]
    for j in range(sp.mu):
        A0[(j + 1) % sp.mu][j] = mono[j]
    for x, y in product(range(sp.mu), repeat=2):
        lhs = sum(A0[r][x] * g[r][y] for r in range(sp.mu))
        rhs = sum(A0[r][y] * g[x][r] for r in range(sp.mu))
        assert lhs == rhs, (sp.w, x, y)
        ad = sum(sp.sigma[x] * g[x][y] + sp.sigma[y] * g[x][y] for _ in [0])
        assert ad == sp.n * g[x][y], (sp.w, x, y)
    # e0 cyclic: successive images hit each basis line once
    seen, vec = set(), (0, F(1))
    for _ in range(sp.mu):
        seen.add(vec[0])
        idx, val = vec
        nval = A0[(idx + 1) % sp.mu][idx] * val
        assert nval != 0
        vec = ((idx + 1) % sp.mu, nval)
    assert len(seen) == sp.mu


def correspondence_classical(sp):
    """A-side structures equal graded B-side structures through flat indices."""
    mu = sp.mu
    cls = [sp.flat_class(i) for i in range(mu)]
    for i in range(mu):
        g, d = cls[i]
        assert sp.flat_index(g, d) == i
        assert d + sp.age(g) == sp.sigma[i]          # degree preserved
    for i, j in product(range(mu), repeat=2):
        assert pairing(sp, cls[i], cls[j]) == graded_pairing(sp, i, j), \
            (sp.w, i, j)
    for i, j, k in product(range(mu), repeat=3):
        assert triple(sp, cls[i], cls[j], cls[k]) == graded_triple(sp, i, j, k), \
            (sp.w, i, j, k)
    for i, j in product(range(mu), repeat=2):
        u = cup(sp, cls[i], cls[j])
        p = graded_tilde(sp, i, j)
        if u is None:
            assert p is None or p[0] == 0, (sp.w, i, j, p)
        else:
            coeff, (g, d) = u
            assert p is not None and p == (coeff, sp.flat_index(g, d)), \
                (sp.w, i, j, u, p)


def frozen_values():
    sp = Spectrum([1, 2])
    assert star(sp, 1, 2) == ((1, -1), 0)
    assert star_tilde(sp, 1, 1) == (F(1, 2), 2)
    assert residue_pairing(sp, 2, 2) == F(1, 2)
    assert b_triple_direct(sp, 1, 2) == F(1, 4)
    assert a0_monomial(sp) == [3, F(3, 2), F(3, 2)]
    p = graded_product(sp, 1, 2)
    assert p is None  # sigma(0)=0 < 3/2

    sp = Spectrum([1, 2, 2, 3, 3, 3])
    assert sp.a[6] == (1, 1, 1, 1, 1, 1) and sp.sigma[6] == F(4, 3)
    e = a0_monomial(sp)
    assert e[5] == F(7, 54) and e[8] == F(14, 27) and e[10] == F(7, 2) \
        and e[13] == F(14, 27)
    assert all(e[j] == 14 for j in (0, 1, 2, 3, 4, 6, 7, 9, 11, 12))
    assert residue_pairing(sp, 0, 5) == F(1, 108)
    t = graded_tilde(sp, 11, 11)
    assert t == (4, 8), t
    assert graded_pairing(sp, 6, 13) == F(1, 27)
    assert graded_triple(sp, 11, 11, 11) == F(4, 27)

    sp = Spectrum([1, 1])
    assert a0_monomial(sp) == [2, 2]            # c = 4, eigenvalues +-2

    sp = Spectrum([2])
    assert a0_monomial(sp) == [1, 1]            # c = 1
    print("frozen B-side values OK")


if __name__ == "__main__":
    frozen_values()
    for w in [[1], [2], [3], [1, 1], [1, 2], [2, 4], [1, 3], [3, 4],
              [1, 1, 1], [1, 2, 3], [2, 2, 2], [1, 2, 2, 3, 3, 3],
              [5, 7], [2, 3, 5]]:
        sp = Spectrum(w)
        ring_axioms(sp)
        triple_routes(sp)
        graded_checks(sp)
        a0_checks(sp)
        correspondence_classical(sp)
        print(w, "bside suite OK")
