#include "orbimirror/wdvv.hpp"

#include "orbimirror/bside.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace orbimirror {

namespace {

Int comb(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

std::string alpha_str(const std::vector<int>& a) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        os << a[i];
    }
    os << ")";
    return os.str();
}

long long total(const std::vector<int>& a) {
    long long s = 0;
    for (int v : a) s += v;
    return s;
}

// Linear form c + sum lin[alpha] * A(alpha) over still-unknown coefficients.
struct LinForm {
    std::map<std::vector<int>, Rational> lin;
    Rational c;
};

struct EquationKey {
    int j, k, l;
    std::vector<int> beta;
    bool operator==(const EquationKey& o) const {
        return j == o.j && k == o.k && l == o.l && beta == o.beta;
    }
};

struct Solver {
    const SpectrumTable& t;
    long long mu;
    int slot;
    int n;
    std::vector<int> abar;                     // pairing-dual index
    std::vector<Rational> K;                   // inverse metric diagonal
    std::vector<std::vector<Rational>> init3;  // 3-point values with one slot
    std::map<std::vector<int>, Rational> store;

    explicit Solver(const SpectrumTable& tt) : t(tt) {
        mu = t.mu();
        slot = static_cast<int>(1 % mu);
        n = t.n();
        abar.resize(mu);
        K.resize(mu);
        for (long long a = 0; a < mu; ++a) {
            abar[a] = static_cast<int>(((n - a) % mu + mu) % mu);
            K[a] = Rational(t.sector_data(t.sector_of(a)).prod_I);
        }
        init3.assign(mu, std::vector<Rational>(mu));
        for (long long j = 0; j < mu; ++j)
            for (long long k = 0; k < mu; ++k)
                init3[j][k] = b_triple_tensor(t, static_cast<int>(j),
                                              static_cast<int>(k));
        // the peeling pivots are the on-congruence 3-point values
        for (long long j = 0; j < mu; ++j) {
            long long js = ((n - 1 - j) % mu + mu) % mu;
            if (init3[j][js] == 0)
                throw std::logic_error("vanishing pivot in 3-point data");
        }
    }

    Rational euler_deg(const std::vector<int>& alpha) const {
        Rational d(3 - n);
        for (long long k = 0; k < mu; ++k)
            if (alpha[k]) d += Rational(alpha[k]) * (t.sigma(k) - 1);
        return d;
    }

    LinForm lin(const std::vector<int>& alpha, int stage,
                const std::vector<int>* exclude) const {
        LinForm out;
        long long L = total(alpha);
        if (L <= 2) return out;
        if (alpha[slot] > 0) {
            if (L == 3) {
                std::vector<int> rest;
                for (long long idx = 0; idx < mu; ++idx) {
                    int c = alpha[idx] - (idx == slot ? 1 : 0);
                    for (int r = 0; r < c; ++r) rest.push_back(static_cast<int>(idx));
                }
                out.c = init3[rest[0]][rest[1]];
                return out;
            }
            std::vector<int> prev = alpha;
            prev[slot] -= 1;
            Rational scale = euler_deg(prev) / mu;
            LinForm inner = lin(prev, stage, exclude);
            out.c = scale * inner.c;
            if (scale != 0)
                for (const auto& [key, v] : inner.lin) out.lin[key] = scale * v;
            return out;
        }
        if (exclude && alpha == *exclude) {
            out.lin[alpha] = 1;
            return out;
        }
        auto it = store.find(alpha);
        if (it != store.end()) {
            out.c = it->second;
            return out;
        }
        if (L == stage) {
            out.lin[alpha] = 1;
            return out;
        }
        throw std::logic_error("potential coefficient missing below stage " +
                               std::to_string(stage) + ": " + alpha_str(alpha));
    }

    void accumulate(LinForm& out, const Rational& mult,
                    const std::vector<int>& b1, const std::vector<int>& b2,
                    int i, int j, int k, int l, int stage,
                    const std::vector<int>* exclude, int sign) const {
        std::vector<int> a1 = b1, a2 = b2;
        a1[i]++;
        a1[j]++;
        a2[k]++;
        a2[l]++;
        for (long long a = 0; a < mu; ++a) {
            a1[a]++;
            LinForm f1 = lin(a1, stage, exclude);
            a1[a]--;
            a2[abar[a]]++;
            LinForm f2 = lin(a2, stage, exclude);
            a2[abar[a]]--;
            if (!f1.lin.empty() && !f2.lin.empty())
                throw std::logic_error("two unknown factors in one term");
            Rational w = mult * K[a] * sign;
            out.c += w * f1.c * f2.c;
            if (f2.c != 0)
                for (const auto& [key, v] : f1.lin) out.lin[key] += w * v * f2.c;
            if (f1.c != 0)
                for (const auto& [key, v] : f2.lin) out.lin[key] += w * f1.c * v;
        }
    }

    // Associativity equation (slot, j | k, l) expanded at beta.
    LinForm equation(const EquationKey& q, int stage,
                     const std::vector<int>* exclude) const {
        LinForm out;
        std::vector<int> b1(mu, 0);
        while (true) {
            std::vector<int> b2(mu);
            for (long long m = 0; m < mu; ++m) b2[m] = q.beta[m] - b1[m];
            Int m = 1;
            for (long long idx = 0; idx < mu; ++idx)
                m *= comb(q.beta[idx], b1[idx]);
            Rational mult{m};
            accumulate(out, mult, b1, b2, slot, q.j, q.k, q.l, stage, exclude, +1);
            accumulate(out, mult, b1, b2, q.k, q.j, slot, q.l, stage, exclude, -1);
            long long idx = 0;
            while (idx < mu) {
                if (b1[idx] < q.beta[idx]) {
                    b1[idx]++;
                    break;
                }
                b1[idx] = 0;
                ++idx;
            }
            if (idx == mu) break;
        }
        for (auto it = out.lin.begin(); it != out.lin.end();)
            it = (it->second == 0) ? out.lin.erase(it) : std::next(it);
        return out;
    }

    static int min_supp(const std::vector<int>& a) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i]) return static_cast<int>(i);
        return -1;
    }
    static int max_supp(const std::vector<int>& a) {
        for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
            if (a[i]) return i;
        return -1;
    }

    // Equation whose unique stage unknown is alpha, chosen so every other
    // index it touches is already derivable.
    EquationKey primary_key(const std::vector<int>& alpha) const {
        std::vector<int> work = alpha;
        if (alpha[0] > 0) {
            int tm = max_supp(alpha);
            work[0]--;
            work[tm]--;
            int k = min_supp(work);
            work[k]--;
            return {0, k, static_cast<int>((tm - 1 + mu) % mu), work};
        }
        int m = min_supp(alpha);
        work[m]--;
        int k = min_supp(work);
        work[k]--;
        int l = max_supp(work);
        work[l]--;
        return {m - 1, k, l, work};
    }

    // A second equation containing alpha, preferring one distinct from the
    // primary; used for the over-determination audit.
    EquationKey audit_key(const std::vector<int>& alpha,
                          const EquationKey& primary) const {
        std::vector<EquationKey> cand;
        std::vector<int> supp;
        for (long long i = 0; i < mu; ++i)
            if (alpha[i]) supp.push_back(static_cast<int>(i));
        // route A: alpha plays the role beta + e_{(1+j)} + e_k + e_l
        for (auto zi = supp.rbegin(); zi != supp.rend(); ++zi) {
            int z = *zi;
            int j = static_cast<int>((z - 1 + mu) % mu);
            std::vector<int> w1 = alpha;
            w1[z]--;
            for (long long l = mu - 1; l >= 0; --l) {
                if (!w1[l] || l == j) continue;
                std::vector<int> w2 = w1;
                w2[l]--;
                for (long long k = 0; k < mu; ++k) {
                    if (!w2[k]) continue;
                    std::vector<int> beta = w2;
                    beta[k]--;
                    cand.push_back({j, static_cast<int>(k),
                                    static_cast<int>(l), beta});
                }
            }
        }
        // route B: alpha plays the role beta + e_j + e_k + e_{(1+l)}
        for (auto ji = supp.rbegin(); ji != supp.rend(); ++ji) {
            int j = *ji;
            std::vector<int> w1 = alpha;
            w1[j]--;
            for (long long k = 0; k < mu; ++k) {
                if (!w1[k]) continue;
                std::vector<int> w2 = w1;
                w2[k]--;
                for (long long b = mu - 1; b >= 0; --b) {
                    if (!w2[b]) continue;
                    int l = static_cast<int>((b - 1 + mu) % mu);
                    if (l == j) continue;
                    std::vector<int> beta = w2;
                    beta[b]--;
                    cand.push_back({j, static_cast<int>(k), l, beta});
                }
            }
        }
        for (const auto& q : cand)
            if (!(q == primary)) return q;
        return primary;
    }

    Rational solve_single(const std::vector<int>& alpha, const EquationKey& q,
                          int stage, const std::vector<int>* exclude) const {
        LinForm f = equation(q, stage, exclude);
        if (f.lin.size() != 1 || f.lin.begin()->first != alpha)
            throw std::logic_error("peeling produced unexpected unknowns for " +
                                   alpha_str(alpha));
        return -f.c / f.lin.begin()->second;
    }

    void solve_stage(int L) {
        // compositions of L over the non-slot indices
        std::vector<std::vector<int>> unknowns;
        std::vector<int> free_idx;
        for (long long m = 0; m < mu; ++m)
            if (m != slot) free_idx.push_back(static_cast<int>(m));
        std::vector<int> cur(mu, 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t pos,
                                                        int rem) {
            if (pos + 1 == free_idx.size()) {
                cur[free_idx[pos]] = rem;
                unknowns.push_back(cur);
                cur[free_idx[pos]] = 0;
                return;
            }
            for (int v = 0; v <= rem; ++v) {
                cur[free_idx[pos]] = v;
                rec(pos + 1, rem - v);
                cur[free_idx[pos]] = 0;
            }
        };
        if (!free_idx.empty()) rec(0, L);

        std::stable_sort(unknowns.begin(), unknowns.end(),
                         [](const std::vector<int>& a, const std::vector<int>& b) {
                             bool pa = a[0] > 0, pb = b[0] > 0;
                             if (pa != pb) return pa; // alpha_0 > 0 first
                             if (!pa) {
                                 int ma = min_supp(a), mb = min_supp(b);
                                 if (ma != mb) return ma < mb;
                             }
                             return a < b;
                         });

        std::map<std::vector<int>, EquationKey> keys;
        for (const auto& alpha : unknowns) {
            EquationKey q = primary_key(alpha);
            store[alpha] = solve_single(alpha, q, L, nullptr);
            keys.emplace(alpha, std::move(q));
        }
        for (const auto& alpha : unknowns) {
            EquationKey q2 = audit_key(alpha, keys.at(alpha));
            Rational again = solve_single(alpha, q2, L, &alpha);
            if (again != store.at(alpha))
                throw std::runtime_error(
                    "inconsistent derivations for " + alpha_str(alpha) + ": " +
                    to_string(store.at(alpha)) + " vs " + to_string(again));
        }
    }
};

} // namespace

EulerField euler_field(const SpectrumTable& t) {
    EulerField e;
    e.slot = static_cast<int>(1 % t.mu());
    e.constant = Rational(t.mu());
    for (long long k = 0; k < t.mu(); ++k) e.linear.push_back(1 - t.sigma(k));
    return e;
}

Rational euler_degree(const SpectrumTable& t, const std::vector<int>& alpha) {
    if (static_cast<long long>(alpha.size()) != t.mu())
        throw std::invalid_argument("multi-index length must equal mu");
    Rational d(3 - t.n());
    for (long long k = 0; k < t.mu(); ++k)
        if (alpha[k]) d += Rational(alpha[k]) * (t.sigma(k) - 1);
    return d;
}

PotentialCoefficients reconstruct(const SpectrumTable& t, int max_length) {
    if (max_length < 3)
        throw std::invalid_argument("max_length must be at least 3");
    Solver s(t);
    for (int L = 3; L <= max_length; ++L) s.solve_stage(L);
    PotentialCoefficients pc;
    pc.max_length = max_length;
    pc.slot = s.slot;
    pc.store = std::move(s.store);
    return pc;
}

Rational evaluate(const SpectrumTable& t, const PotentialCoefficients& pc,
                  std::vector<int> alpha) {
    if (static_cast<long long>(alpha.size()) != t.mu())
        throw std::invalid_argument("multi-index length must equal mu");
    long long L = total(alpha);
    if (L <= 2) return 0;
    if (alpha[pc.slot] > 0) {
        if (L == 3) {
            std::vector<int> rest;
            for (long long idx = 0; idx < t.mu(); ++idx) {
                int c = alpha[idx] - (idx == pc.slot ? 1 : 0);
                for (int r = 0; r < c; ++r) rest.push_back(static_cast<int>(idx));
            }
            return b_triple_tensor(t, rest[0], rest[1]);
        }
        alpha[pc.slot] -= 1;
        Rational scale = euler_degree(t, alpha) / t.mu();
        if (scale == 0) return 0;
        return scale * evaluate(t, pc, std::move(alpha));
    }
    if (L > pc.max_length)
        throw std::out_of_range("coefficient of length " + std::to_string(L) +
                                " beyond computed range " +
                                std::to_string(pc.max_length));
    auto it = pc.store.find(alpha);
    if (it == pc.store.end())
        throw std::logic_error("coefficient missing from store: " +
                               alpha_str(alpha));
    return it->second;
}

Rational euler_extend(const SpectrumTable& t, const PotentialCoefficients& pc,
                      const std::vector<int>& alpha) {
    if (total(alpha) < 3)
        throw std::domain_error("homogeneity extension needs |alpha| >= 3");
    return euler_degree(t, alpha) / t.mu() * evaluate(t, pc, alpha);
}

Rational wdvv_residual(const SpectrumTable& t, const PotentialCoefficients& pc,
                       int i, int j, int k, int l,
                       const std::vector<int>& beta) {
    const long long mu = t.mu();
    if (static_cast<long long>(beta.size()) != mu)
        throw std::invalid_argument("multi-index length must equal mu");
    std::vector<int> abar(mu);
    std::vector<Rational> K(mu);
    for (long long a = 0; a < mu; ++a) {
        abar[a] = static_cast<int>(((t.n() - a) % mu + mu) % mu);
        K[a] = Rational(t.sector_data(t.sector_of(a)).prod_I);
    }
    Rational res = 0;
    std::vector<int> b1(mu, 0);
    while (true) {
        std::vector<int> b2(mu);
        for (long long m = 0; m < mu; ++m) b2[m] = beta[m] - b1[m];
        Int mult = 1;
        for (long long idx = 0; idx < mu; ++idx)
            mult *= comb(beta[idx], b1[idx]);
        for (long long a = 0; a < mu; ++a) {
            auto factor = [&](const std::vector<int>& base, int x, int y,
                              int z) {
                std::vector<int> v = base;
                v[x]++;
                v[y]++;
                v[z]++;
                return evaluate(t, pc, std::move(v));
            };
            Rational t1 = factor(b1, i, j, static_cast<int>(a)) *
                          factor(b2, abar[a], k, l);
            Rational t2 = factor(b1, k, j, static_cast<int>(a)) *
                          factor(b2, abar[a], i, l);
            res += Rational(mult) * K[a] * (t1 - t2);
        }
        long long idx = 0;
        while (idx < mu) {
            if (b1[idx] < beta[idx]) {
                b1[idx]++;
                break;
            }
            b1[idx] = 0;
            ++idx;
        }
        if (idx == mu) break;
    }
    return res;
}

} // namespace orbimirror
