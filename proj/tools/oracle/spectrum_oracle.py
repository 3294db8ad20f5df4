#!/usr/bin/env python3
"""Prints frozen spectral tables for the C++ unit tests and verifies the
structural identities on a batch of random weight vectors."""
import random
import sys
from fractions import Fraction
from math import floor, gcd

sys.path.insert(0, __file__.rsplit("/", 1)[0])
from wps import Spectrum, frac_part


def check_identities(sp):
    w, mu, n = sp.w, sp.mu, sp.n
    assert sp.s[0] == 0 and sp.sigma[0] == 0
    for i in range(mu - 1):
        assert sp.s[i] <= sp.s[i + 1]
    for g in sp.sectors:
        gi = sp.inv(g)
        assert gi in sp.sectors
        assert sp.I(g) == sp.I(gi)
        assert sp.age(g) + sp.age(gi) == n + 1 - sp.delta(g)
        kmax_direct = n + sum(floor(g * wi) for wi in w)
        assert sp.kmax[g] == kmax_direct, (w, g)
        assert sp.kmax[g] - sp.kmin[g] + 1 == sp.delta(g)
        if g > 0:
            assert sp.kmax[g] + sp.kmax[gi] == n + mu + sp.delta(g) - 1
        assert sp.sigma[sp.kmax[g]] == n - sp.age(g)
        assert sp.sigma[sp.kmin[g]] == n + 1 - sp.age(g) - sp.delta(g)
    # duality on flat indices: j+k = n (mod mu) <=> dual sectors + complementary order
    for j in range(mu):
        for k in range(mu):
            lhs = (j + k - n) % mu == 0
            rhs = (sp.s[k] == sp.inv(sp.s[j])
                   and sp.sigma[j] + sp.sigma[k] == n)
            assert lhs == rhs, (w, j, k)
            if lhs:
                assert sp.prod_I(sp.s[j]) == sp.prod_I(sp.s[k])
    # gcd splitting
    d = sp.gcd_w
    if d > 1:
        for r in range(mu // d):
            for q in range(d):
                i = q * mu // d + r
                assert sp.s[i] == Fraction(q, d) + sp.s[r]
                assert sp.sigma[i] == sp.sigma[r]
    # multi-index sanity
    for k in range(2 * mu - 1):
        assert sum(sp.a[k]) == k
    assert sp.a[mu] == tuple(w)


def dump(wvec):
    sp = Spectrum(wvec)
    check_identities(sp)
    print(f"w = {wvec}  mu={sp.mu} n={sp.n} d={sp.gcd_w} p={sp.lcm_w}")
    print("  s     =", [str(x) for x in sp.s])
    print("  sigma =", [str(x) for x in sp.sigma])
    for g in sp.sectors:
        print(f"  sector {g}: I={sp.I(g)} delta={sp.delta(g)} age={sp.age(g)}"
              f" kmin={sp.kmin[g]} kmax={sp.kmax[g]} prodI={sp.prod_I(g)}")
    print("  a =", sp.a)
    print("  i =", sp.i)
    print()


if __name__ == "__main__":
    for wvec in [(1,), (2,), (1, 1), (1, 2), (2, 4), (1, 3), (3, 4),
                 (1, 1, 1), (1, 2, 3), (2, 2, 2), (1, 2, 2, 3, 3, 3)]:
        dump(list(wvec))

    rng = random.Random(20240817)
    count = 0
    while count < 400:
        n1 = rng.randint(1, 5)
        w = [rng.randint(1, 12) for _ in range(n1)]
        if sum(w) > 48:
            continue
        check_identities(Spectrum(w))
        count += 1
    print(f"identity batch OK on {count} random vectors")
