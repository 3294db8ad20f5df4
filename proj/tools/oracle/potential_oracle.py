#!/usr/bin/env python3
"""Reconstructs the Frobenius potential's Taylor coefficients by solving the
WDVV equations stage by stage as one global linear system per length (Gaussian
elimination over exact rationals). Used to freeze expected coefficients for
the C++ solver, which derives the same numbers by explicit chain peeling."""
import sys
from fractions import Fraction
from itertools import product

sys.path.insert(0, __file__.rsplit("/", 1)[0])
from wps import Spectrum, b_triple_formula
from kontsevich_oracle import kontsevich

F = Fraction


def compositions(total, slots):
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, slots - 1):
            yield (first,) + rest


class Solver:
    def __init__(self, w, max_length):
        self.sp = sp = Spectrum(w)
        self.mu = sp.mu
        self.slot = 1 % sp.mu
        self.abar = [(sp.n - a) % sp.mu for a in range(sp.mu)]
        self.K = [sp.prod_I(sp.s[a]) for a in range(sp.mu)]
        self.max_length = max_length
        self.store = {}
        self.initial = {}
        for j in range(sp.mu):
            for k in range(sp.mu):
                self.initial[(j, k)] = b_triple_formula(sp, j, k)
        for L in range(3, max_length + 1):
            self.solve_stage(L)

    def d_of(self, alpha):
        return (F(3 - self.sp.n)
                + sum(alpha[k] * (self.sp.sigma[k] - 1)
                      for k in range(self.mu)))

    def lin(self, alpha, stage):
        """A(alpha) as (linear-form dict over stage unknowns, constant)."""
        L = sum(alpha)
        if L <= 2:
            return {}, F(0)
        if alpha[self.slot] > 0:
            if L == 3:
                rest = list(alpha)
                rest[self.slot] -= 1
                pair = [i for i in range(self.mu) for _ in range(rest[i])]
                return {}, self.initial[(pair[0], pair[1])]
            prev = list(alpha)
            prev[self.slot] -= 1
            prev = tuple(prev)
            lin, const = self.lin(prev, stage)
            scale = self.d_of(prev) / self.mu
            return {k: v * scale for k, v in lin.items()}, const * scale
        if L < stage:
            return {}, self.store[alpha]
        assert L == stage, (alpha, stage)
        return {alpha: F(1)}, F(0)

    @staticmethod
    def binom_split(beta):
        """Yields (beta1, beta2, multinomial C(beta; beta1))."""
        ranges = [range(b + 1) for b in beta]
        for beta1 in product(*ranges):
            c = 1
            for b, b1 in zip(beta, beta1):
                # C(b, b1)
                num = den = 1
                for t in range(b1):
                    num *= b - t
                    den *= t + 1
                c *= num // den
            beta2 = tuple(b - b1 for b, b1 in zip(beta, beta1))
            yield beta1, beta2, c

    def term(self, beta1, beta2, i, j, k, l, stage):
        """sum_a K_a A(beta1+e_i+e_j+e_a) A(beta2+e_abar+e_k+e_l)."""
        lin, const = {}, F(0)
        for a in range(self.mu):
            a1 = list(beta1)
            for t in (i, j, a):
                a1[t] += 1
            l1, c1 = self.lin(tuple(a1), stage)
            a2 = list(beta2)
            for t in (self.abar[a], k, l):
                a2[t] += 1
            l2, c2 = self.lin(tuple(a2), stage)
            assert not (l1 and l2), "two unknown factors in one product"
            Ka = self.K[a]
            const += Ka * c1 * c2
            for key, v in l1.items():
                lin[key] = lin.get(key, F(0)) + Ka * v * c2
            for key, v in l2.items():
                lin[key] = lin.get(key, F(0)) + Ka * c1 * v
        return lin, const

    def equation(self, j, k, l, beta, stage):
        """Coefficient of t^beta in WDVV (slot1, j, k, l), as lin + const."""
        lin, const = {}, F(0)
        for beta1, beta2, c in self.binom_split(beta):
            for sgn, (jj, kk) in ((1, (j, k)), (-1, (k, j))):
                # sgn +: (1 j a)(abar k l); sgn -: (k j a)(abar 1 l)
                if sgn == 1:
                    tl, tc = self.term(beta1, beta2, self.slot, jj, kk, l,
                                       stage)
                else:
                    tl, tc = self.term(beta1, beta2, jj, kk, self.slot, l,
                                       stage)
                const += sgn * c * tc
                for key, v in tl.items():
                    lin[key] = lin.get(key, F(0)) + sgn * c * v
        return lin, const

    def solve_stage(self, L):
        unknowns = set()
        free = self.mu - (1 if self.mu > 1 else 0)
        if self.slot == 0 and self.mu == 1:
            return  # every alpha with a slot-1 part is Euler-derived
        for comp in compositions(L, self.mu - 1):
            alpha = list(comp[:self.slot]) + [0] + list(comp[self.slot:])
            unknowns.add(tuple(alpha))
        rows = []
        for j, k, l in product(range(self.mu), repeat=3):
            if k == self.slot or j == l:
                continue
            for comp in compositions(L - 3, self.mu - 1):
                beta = tuple(list(comp[:self.slot]) + [0]
                             + list(comp[self.slot:]))
                lin, const = self.equation(j, k, l, beta, L)
                lin = {key: v for key, v in lin.items() if v != 0}
                if not lin:
                    assert const == 0, ("inconsistent", self.sp.w, j, k, l,
                                        beta)
                    continue
                rows.append((lin, const))
        solution = gauss(rows, unknowns, self.sp.w, L)
        self.store.update(solution)

    # ---- numeric evaluation after all stages are solved -----------------
    def evaluate(self, alpha):
        alpha = tuple(alpha)
        L = sum(alpha)
        if L <= 2:
            return F(0)
        if alpha[self.slot] > 0:
            if L == 3:
                rest = list(alpha)
                rest[self.slot] -= 1
                pair = [i for i in range(self.mu) for _ in range(rest[i])]
                return self.initial[(pair[0], pair[1])]
            prev = list(alpha)
            prev[self.slot] -= 1
            prev = tuple(prev)
            return self.d_of(prev) / self.mu * self.evaluate(prev)
        return self.store.get(alpha, F(0)) if L <= self.max_length else None

    def residual(self, i, j, k, l, beta):
        total = F(0)
        for beta1, beta2, c in self.binom_split(beta):
            for a in range(self.mu):
                f = [None] * 4
                a1 = list(beta1)
                for t in (i, j, a):
                    a1[t] += 1
                a2 = list(beta2)
                for t in (self.abar[a], k, l):
                    a2[t] += 1
                t1 = self.evaluate(a1) * self.evaluate(a2)
                a3 = list(beta1)
                for t in (k, j, a):
                    a3[t] += 1
                a4 = list(beta2)
                for t in (self.abar[a], i, l):
                    a4[t] += 1
                t2 = self.evaluate(a3) * self.evaluate(a4)
                total += c * self.K[a] * (t1 - t2)
        return total


def gauss(rows, unknowns, w, L):
    pivots = {}          # unknown -> reduced row (lin, const) with coeff 1
    for lin, const in rows:
        lin = dict(lin)
        while lin:
            key = next(iter(sorted(lin)))
            if key in pivots:
                plin, pconst = pivots[key]
                f = lin.pop(key)
                for pk, pv in plin.items():
                    if pk != key:
                        lin[pk] = lin.get(pk, F(0)) - f * pv
                const -= f * pconst
                lin = {k2: v for k2, v in lin.items() if v != 0}
            else:
                f = lin[key]
                newlin = {k2: v / f for k2, v in lin.items()}
                pivots[key] = (newlin, const / f)
                break
        else:
            assert const == 0, ("inconsistent system", w, L)
    # back-substitute (each row reads lin.X + const = 0)
    solution = {}
    for key in sorted(pivots, reverse=True):
        plin, pconst = pivots[key]
        val = -pconst
        for k2, v in plin.items():
            if k2 != key:
                val -= v * solution[k2]
        solution[key] = val
    missing = set(unknowns) - set(solution)
    assert not missing, ("underdetermined", w, L, sorted(missing))
    return solution


def run(w, max_length, residual_quads=True):
    s = Solver(w, max_length)
    mu = s.mu
    nonzero = {a: v for a, v in sorted(s.store.items()) if v != 0}
    print(f"w={w} max_length={max_length} nonzero stored coefficients:")
    for a, v in nonzero.items():
        print("  ", a, "=", v)
    if residual_quads:
        checked = 0
        for i, k in product(range(mu), repeat=2):
            if i >= k:
                continue
            for j, l in product(range(mu), repeat=2):
                if j >= l:
                    continue
                for m in range(0, max_length - 3 + 1):
                    for beta in compositions(m, mu):
                        r = s.residual(i, j, k, l, beta)
                        assert r == 0, ("residual", w, i, j, k, l, beta, r)
                        checked += 1
        print(f"  all {checked} residuals vanish")
    return s


if __name__ == "__main__":
    # P^2: stored coefficients must reproduce the Kontsevich numbers
    s = run([1, 1, 1], 10)
    N = kontsevich(3)
    expect = {(2, 0, 1): F(1)}
    for d in (2, 3):                      # 3d-1 >= 3 (quadratics normalized)
        expect[(0, 0, 3 * d - 1)] = F(N[d])
    got = {a: v for a, v in s.store.items() if v != 0}
    assert got == expect, (got, expect)
    assert s.evaluate((0, 1, 2)) == 1 and s.evaluate((0, 2, 2)) == 1
    print("P^2 matches Kontsevich oracle")

    # P^1
    s = run([1, 1], 10)
    assert {a: v for a, v in s.store.items() if v != 0} == {}
    assert s.evaluate((0, 3)) == 1 and s.evaluate((0, 7)) == 1
    assert s.evaluate((2, 1)) == 1
    print("P^1 OK")

    # P(1,2): includes the degree-0 four-point coefficient of the twisted class
    s = run([1, 2], 8)
    got = {a: v for a, v in s.store.items() if v != 0}
    assert got == {(1, 0, 2): F(1, 2), (0, 0, 4): F(-1, 4)}, got
    assert s.evaluate((0, 2, 1)) == F(1, 4)
    assert s.evaluate((0, 3, 1)) == F(1, 8)
    assert s.evaluate((2, 1, 0)) == F(1, 2)
    print("P(1,2) OK")

    # P(1,2,3) smoke: solvable with consistent over-determination
    s = run([1, 2, 3], 6)
    print("P(1,2,3) OK")

    # w=(1): trivial store
    s = Solver([1], 6)
    assert s.evaluate((3,)) == 1 and s.evaluate((4,)) == 0
    print("point OK")
