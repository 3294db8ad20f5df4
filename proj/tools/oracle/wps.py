"""Independent reference implementations for the weighted-projective mirror
tables, used to freeze expected values into the C++ tests.

Everything here is built directly from the defining formulas with
fractions.Fraction; no code is shared with the C++ library.
"""
from fractions import Fraction
from math import gcd, floor
from functools import reduce


def lcm(a, b):
    return a * b // gcd(a, b)


def frac_part(x):
    return x - floor(x)


class Spectrum:
    def __init__(self, w):
        assert len(w) >= 1 and all(wi >= 1 for wi in w)
        self.w = list(w)
        self.n = len(w) - 1
        self.mu = sum(w)
        self.gcd_w = reduce(gcd, w)
        self.lcm_w = reduce(lcm, w)
        # non-decreasing enumeration of the multiset {l/w_i}
        self.s = sorted(Fraction(l, wi) for wi in w for l in range(wi))
        self.sectors = sorted(set(self.s))
        self.sigma = [i - self.mu * self.s[i] for i in range(self.mu)]
        self.kmin = {g: min(i for i in range(self.mu) if self.s[i] == g)
                     for g in self.sectors}
        self.kmax = {g: max(i for i in range(self.mu) if self.s[i] == g)
                     for g in self.sectors}
        # multi-index recursion, kept to 2*mu-2 so unreduced sums are available
        self.a, self.i = self._multi_index(max(2 * self.mu - 2, self.mu))
        for k in range(self.mu):
            rec = Fraction(self.a[k][self.i[k]], self.w[self.i[k]])
            assert rec == self.s[k], (w, k, rec, self.s[k])

    def _multi_index(self, length):
        a = [tuple(0 for _ in self.w)]
        idx = [0]
        for _ in range(length):
            nxt = list(a[-1])
            nxt[idx[-1]] += 1
            a.append(tuple(nxt))
            vals = [Fraction(nxt[j], self.w[j]) for j in range(len(self.w))]
            idx.append(vals.index(min(vals)))
        return a, idx

    # sector data ---------------------------------------------------------
    def I(self, g):
        return [i for i, wi in enumerate(self.w) if (g * wi).denominator == 1]

    def delta(self, g):
        return len(self.I(g))

    def age(self, g):
        return sum(frac_part(g * wi) for wi in self.w)

    def prod_I(self, g):
        p = 1
        for i in self.I(g):
            p *= self.w[i]
        return p

    def inv(self, g):
        return frac_part(1 - g)

    def J(self, g0, g1, ginf):
        return [i for i in range(len(self.w))
                if frac_part(g0 * self.w[i]) + frac_part(g1 * self.w[i])
                + frac_part(ginf * self.w[i]) == 2]

    # flat basis ----------------------------------------------------------
    def flat_class(self, i):
        """flat index -> (gamma, d) with eta_i = eta^d_gamma."""
        g = self.inv(self.s[i])
        return (g, i - self.kmin[self.s[i]])

    def flat_index(self, g, d):
        return self.kmin[self.inv(g)] + d

    def wpow(self, expo):
        v = Fraction(1)
        for wi, e in zip(self.w, expo):
            v *= Fraction(wi) ** e
        return v


# ---------------------------------------------------------------------------
# A-side closed forms
# ---------------------------------------------------------------------------

def pairing(sp, c0, c1):
    (g0, d0), (g1, d1) = c0, c1
    if g1 != sp.inv(g0) or d0 + d1 != sp.delta(g0) - 1:
        return Fraction(0)
    return Fraction(1, sp.prod_I(g0))


def triple(sp, c0, c1, cinf):
    (g0, d0), (g1, d1), (ginf, dinf) = c0, c1, cinf
    if frac_part(g0 + g1 + ginf) != 0:
        return Fraction(0)
    degsum = (d0 + sp.age(g0)) + (d1 + sp.age(g1)) + (dinf + sp.age(ginf))
    if degsum != sp.n:
        return Fraction(0)
    num = 1
    for i in sp.J(g0, g1, ginf):
        num *= sp.w[i]
    den = 1
    for i in set(sp.I(g0)) & set(sp.I(g1)) & set(sp.I(ginf)):
        den *= sp.w[i]
    return Fraction(num, den)


def cup(sp, c0, c1):
    """Returns (coeff, (gamma, d)) or None for the zero class."""
    (g0, d0), (g1, d1) = c0, c1
    g = frac_part(g0 + g1)
    if g not in sp.sectors:
        return None
    d = d0 + sp.age(g0) + d1 + sp.age(g1) - sp.age(g)
    assert d.denominator == 1
    d = int(d)
    if d < 0 or d >= sp.delta(g):
        return None
    K = set(sp.J(g0, g1, sp.inv(g))) | (set(sp.I(g)) - (set(sp.I(g0)) & set(sp.I(g1))))
    coeff = 1
    for i in K:
        coeff *= sp.w[i]
    return (Fraction(coeff), (g, d))


def gw_degree(sp, j, k):
    return Fraction(1 + j + k - sp.n, sp.mu) - sp.s[j] - sp.s[k]


def gw_three_point(sp, j, k):
    """((eta_1, eta_j, eta_k)) plus a status word."""
    if (1 + j + k - sp.n) % sp.mu != 0:
        if gcd(sp.mu, sp.lcm_w) == 1:
            return Fraction(0), "zero"
        return None, "unsupported"
    if sp.sigma[1 % sp.mu] + sp.sigma[j] + sp.sigma[k] == sp.n:
        return Fraction(1, sp.prod_I(sp.s[j])), "classical"
    status = "quantum-theorem" if all(wi == 1 for wi in sp.w) else "quantum-conjecture"
    return Fraction(1, sp.prod_I(sp.s[j]) * sp.prod_I(sp.s[k])), status


# ---------------------------------------------------------------------------
# B-side
# ---------------------------------------------------------------------------

def star(sp, i, j):
    """[w_i] * [w_j] = w^expo [w_{(i+j) mod mu}] with the unreduced multi-index."""
    expo = tuple(sp.a[i][t] + sp.a[j][t] - sp.a[i + j][t] for t in range(len(sp.w)))
    return expo, (i + j) % sp.mu


def rescale_expo(sp, i):
    km = sp.kmin[sp.s[i]]
    return tuple(sp.a[km][t] - sp.a[i][t] for t in range(len(sp.w)))


def residue_pairing(sp, j, k):
    if (j + k - sp.n) % sp.mu != 0:
        return Fraction(0)
    return Fraction(1, sp.prod_I(sp.s[j]))


def a0_monomial(sp):
    """Connection matrix A0 via the rescale monomials: entry ((j+1) mod mu, j).

    The block start for the unreduced index j+1 = mu is mu itself (the
    enumeration continues past one period with s(mu) = 1), so the wrap entry
    uses a(mu) = w.
    """
    ent = []
    for j in range(sp.mu):
        if j + 1 < sp.mu:
            nxt_start = sp.kmin[sp.s[j + 1]]
        else:
            nxt_start = sp.mu
        expo = tuple(sp.a[sp.kmin[sp.s[j]]][t] - sp.a[nxt_start][t]
                     for t in range(len(sp.w)))
        ent.append(sp.mu * sp.wpow(expo))
    return ent


def a0_sector(sp):
    """Same entries from the sector-change description."""
    ent = []
    for j in range(sp.mu):
        jn = (j + 1) % sp.mu
        if sp.s[j] == sp.s[jn]:
            ent.append(Fraction(sp.mu))
        else:
            ent.append(Fraction(sp.mu, sp.prod_I(sp.s[j])))
    return ent


def b_triple_direct(sp, j, k):
    """((w~_1, w~_j, w~_k)) via the star product and the residue metric."""
    one = 1 % sp.mu
    expo, idx = star(sp, one, j)
    coeff = sp.wpow(expo) * sp.wpow(rescale_expo(sp, one)) \
        * sp.wpow(rescale_expo(sp, j)) / sp.wpow(rescale_expo(sp, idx))
    return coeff * residue_pairing(sp, idx, k)


def b_triple_formula(sp, j, k):
    if (1 + j + k - sp.n) % sp.mu != 0:
        return Fraction(0)
    if sp.sigma[1 % sp.mu] + sp.sigma[j] + sp.sigma[k] == sp.n:
        return Fraction(1, sp.prod_I(sp.s[j]))
    return Fraction(1, sp.prod_I(sp.s[j]) * sp.prod_I(sp.s[k]))


def graded_product(sp, i, j):
    """[[w_i]] u [[w_j]] in the omega basis: (coeff, index) or None."""
    if sp.sigma[(i + j) % sp.mu] != sp.sigma[i] + sp.sigma[j]:
        assert sp.sigma[(i + j) % sp.mu] < sp.sigma[i] + sp.sigma[j]
        return None
    expo, idx = star(sp, i, j)
    return sp.wpow(expo), idx


def graded_pairing(sp, j, k):
    """[[g]] on the rescaled classes: needs dual sectors AND complementary order."""
    if sp.s[k] != sp.inv(sp.s[j]):
        return Fraction(0)
    if sp.sigma[j] + sp.sigma[k] != sp.n:
        return Fraction(0)
    return Fraction(1, sp.prod_I(sp.s[j]))


def graded_triple(sp, i, j, k):
    """Graded 3-tensor in the rescaled basis, via product + graded metric."""
    p = graded_product(sp, i, j)
    if p is None:
        return Fraction(0)
    coeff, idx = p
    coeff *= sp.wpow(rescale_expo(sp, i)) * sp.wpow(rescale_expo(sp, j)) \
        / sp.wpow(rescale_expo(sp, idx))
    return coeff * graded_pairing(sp, idx, k)
