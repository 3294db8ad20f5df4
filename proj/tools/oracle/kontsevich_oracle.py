#!/usr/bin/env python3
"""Kontsevich's recursion for the number N_d of rational plane curves of
degree d through 3d-1 general points. Used as the independent check for the
reconstructed P^2 potential."""
from math import comb


def kontsevich(dmax):
    N = {1: 1}
    for d in range(2, dmax + 1):
        total = 0
        for d1 in range(1, d):
            d2 = d - d1
            total += (N[d1] * N[d2] * d1 * d1 * d2
                      * (d2 * comb(3 * d - 4, 3 * d1 - 2)
                         - d1 * comb(3 * d - 4, 3 * d1 - 1)))
        N[d] = total
    return N


if __name__ == "__main__":
    N = kontsevich(6)
    print(N)
    assert N[2] == 1 and N[3] == 12 and N[4] == 620 and N[5] == 87304
    assert N[6] == 26312976
    print("kontsevich OK")
