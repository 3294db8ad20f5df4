#include "orbimirror/spectrum.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace orbimirror {

namespace {

long long to_ll_checked(const Int& v, const char* what) {
    static const Int bound = Int(1) << 62;
    if (v >= bound || v <= -bound)
        throw std::overflow_error(std::string(what) + " exceeds the fixed-point range");
    return static_cast<long long>(v);
}

std::string fmt_pair(long long a, long long b) {
    std::ostringstream os;
    os << "(" << a << "," << b << ")";
    return os.str();
}

} // namespace

Weights make_weights(std::vector<long long> w) {
    if (w.empty()) throw std::invalid_argument("weight vector must be non-empty");
    Weights out;
    out.w = std::move(w);
    out.n = static_cast<int>(out.w.size()) - 1;
    Int mu = 0, l = 1;
    long long g = 0;
    for (long long wi : out.w) {
        if (wi <= 0) throw std::invalid_argument("weights must be positive integers");
        mu += wi;
        g = std::gcd(g, wi);
        l = l / boost::multiprecision::gcd(l, Int(wi)) * wi;
    }
    out.mu = to_ll_checked(mu, "mu");
    out.gcd_w = g;
    out.lcm_w = to_ll_checked(l, "lcm of weights");
    // sigma * lcm must fit: |sigma| <= mu.
    to_ll_checked(Int(out.mu) * out.lcm_w, "mu * lcm");
    return out;
}

SpectrumTable build_spectrum(const Weights& weights) { return SpectrumTable(weights); }

SpectrumTable::SpectrumTable(Weights weights) : wt_(std::move(weights)) {
    const auto& w = wt_.w;
    const long long mu = wt_.mu, L = wt_.lcm_w;
    const int ncomp = wt_.n + 1;

    // non-decreasing enumeration of the multiset {l/w_i : 0 <= l < w_i}
    s_.reserve(static_cast<size_t>(mu));
    for (int i = 0; i < ncomp; ++i)
        for (long long l = 0; l < w[static_cast<size_t>(i)]; ++l)
            s_.emplace_back(l, w[static_cast<size_t>(i)]);
    std::sort(s_.begin(), s_.end());

    sigma_.reserve(s_.size());
    sigscaled_.reserve(s_.size());
    for (long long i = 0; i < mu; ++i) {
        sigma_.push_back(Rational(i) - mu * s_[static_cast<size_t>(i)]);
        sigscaled_.push_back(to_ll_checked(
            num(sigma_.back()) * (L / den(sigma_.back())), "sigma*lcm"));
    }

    // sector list + per-flat sector ids
    secof_.assign(s_.size(), 0);
    for (size_t i = 0; i < s_.size(); ++i) {
        if (i == 0 || s_[i] != s_[i - 1]) {
            SectorData sd;
            sd.gamma = s_[i];
            sd.kmin = sd.kmax = static_cast<int>(i);
            sec_.push_back(std::move(sd));
        } else {
            sec_.back().kmax = static_cast<int>(i);
        }
        secof_[i] = static_cast<int>(sec_.size()) - 1;
    }
    for (auto& sd : sec_) {
        const Int p = num(sd.gamma), q = den(sd.gamma);
        sd.fscaled.resize(static_cast<size_t>(ncomp));
        for (int i = 0; i < ncomp; ++i) {
            const Int r = (p * w[static_cast<size_t>(i)]) % q;
            sd.fscaled[static_cast<size_t>(i)] =
                to_ll_checked(r * (Int(L) / q), "fractional part * lcm");
            if (r == 0) {
                sd.I.push_back(i);
                sd.prod_I *= w[static_cast<size_t>(i)];
            }
            sd.age_scaled += sd.fscaled[static_cast<size_t>(i)];
            sd.age += Rational(r, q);
        }
        sd.delta = static_cast<int>(sd.I.size());
        sd.inv_id = sector_id(frac(Rational(1) - sd.gamma));
        if (sd.inv_id < 0)
            throw std::logic_error("sector list not closed under gamma -> {1-gamma}");
    }

    comp_.assign(sec_.size() * sec_.size(), -1);
    for (size_t a = 0; a < sec_.size(); ++a)
        for (size_t b = 0; b < sec_.size(); ++b)
            comp_[a * sec_.size() + b] = sector_id(frac(sec_[a].gamma + sec_[b].gamma));

    // multi-index recursion, long enough for a(i+j) with i,j < mu and for a(mu)
    const long long len = std::max(2 * mu - 2, mu);
    a_.reserve(static_cast<size_t>(len) + 1);
    idx_.reserve(static_cast<size_t>(len) + 1);
    a_.emplace_back(static_cast<size_t>(ncomp), 0);
    idx_.push_back(0);
    for (long long k = 0; k < len; ++k) {
        std::vector<long long> nxt = a_.back();
        nxt[static_cast<size_t>(idx_.back())] += 1;
        int best = 0;
        for (int j = 1; j < ncomp; ++j) {
            // nxt[j]/w[j] < nxt[best]/w[best], smallest index on ties
            if (nxt[static_cast<size_t>(j)] * w[static_cast<size_t>(best)] <
                nxt[static_cast<size_t>(best)] * w[static_cast<size_t>(j)])
                best = j;
        }
        a_.push_back(std::move(nxt));
        idx_.push_back(best);
    }

    // The recursion must reproduce the sorted multiset (periodically extended);
    // a silent disagreement would corrupt every module downstream.
    for (long long k = 0; k <= len; ++k) {
        const int i = idx_[static_cast<size_t>(k)];
        const Rational rec(a_[static_cast<size_t>(k)][static_cast<size_t>(i)],
                           w[static_cast<size_t>(i)]);
        const Rational expected = s_[static_cast<size_t>(k % mu)] + Rational(k / mu);
        if (rec != expected)
            throw std::logic_error("multi-index recursion disagrees with the sorted multiset at k=" +
                                   std::to_string(k));
    }
}

int SpectrumTable::sector_id(const Rational& gamma) const {
    // during construction sec_ grows sorted by gamma, so binary search is valid
    size_t lo = 0, hi = sec_.size();
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (sec_[mid].gamma < gamma)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < sec_.size() && sec_[lo].gamma == gamma) return static_cast<int>(lo);
    return -1;
}

std::vector<int> SpectrumTable::J(int id0, int id1, int idinf) const {
    const auto& f0 = sec_[static_cast<size_t>(id0)].fscaled;
    const auto& f1 = sec_[static_cast<size_t>(id1)].fscaled;
    const auto& f2 = sec_[static_cast<size_t>(idinf)].fscaled;
    std::vector<int> out;
    for (size_t i = 0; i < f0.size(); ++i)
        if (f0[i] + f1[i] + f2[i] == 2 * wt_.lcm_w) out.push_back(static_cast<int>(i));
    return out;
}

std::pair<Rational, int> SpectrumTable::flat_class(int i) const {
    const auto& sd = sec_[static_cast<size_t>(sector_of(i))];
    return {frac(Rational(1) - sd.gamma), i - sd.kmin};
}

int SpectrumTable::flat_index(const Rational& gamma, int d) const {
    const int id = sector_id(gamma);
    if (id < 0) throw std::domain_error("gamma is not a spectral value");
    return sec_[static_cast<size_t>(sec_[static_cast<size_t>(id)].inv_id)].kmin + d;
}

Rational SpectrumTable::wpow(const std::vector<long long>& expo) const {
    Rational v = 1;
    for (size_t i = 0; i < expo.size(); ++i)
        v *= rpow(Rational(wt_.w[i]), static_cast<long>(expo[i]));
    return v;
}

Sector sector(const Weights& weights, const Rational& gamma) {
    if (gamma < 0 || gamma >= 1) throw std::domain_error("gamma must lie in [0,1)");
    Sector out;
    out.gamma = gamma;
    for (int i = 0; i <= weights.n; ++i) {
        const Rational f = frac(gamma * weights.w[static_cast<size_t>(i)]);
        if (f == 0) out.I.push_back(i);
        out.age += f;
    }
    out.delta = static_cast<int>(out.I.size());
    return out;
}

std::vector<CheckResult> verify_spectral_identities(const Weights& weights) {
    std::vector<CheckResult> out;
    const SpectrumTable t(weights);
    const long long mu = t.mu();
    const int n = t.n();
    auto add = [&out](const char* name, bool ok, std::string witness = {}) {
        out.push_back({name, ok, ok ? std::string{} : std::move(witness)});
    };

    {
        bool ok = t.s(0) == 0 && t.sigma(0) == 0;
        for (long long i = 0; ok && i + 1 < mu; ++i)
            ok = t.s(static_cast<int>(i)) <= t.s(static_cast<int>(i + 1));
        add("s-nondecreasing-anchored", ok);
    }
    {
        long long total = 0;
        bool ok = true;
        for (int id = 0; id < t.sector_count(); ++id) {
            const auto& sd = t.sector_data(id);
            total += sd.delta;
            ok = ok && (sd.kmax - sd.kmin + 1 == sd.delta);
        }
        add("delta-partition", ok && total == mu);
    }
    {
        bool ok = true;
        std::string wit;
        for (int id = 0; ok && id < t.sector_count(); ++id) {
            const auto& sd = t.sector_data(id);
            const auto& dual = t.sector_data(sd.inv_id);
            ok = sd.age + dual.age == Rational(n + 1 - sd.delta) && sd.I == dual.I;
            if (!ok) wit = "sector " + to_string(sd.gamma);
        }
        add("age-duality", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (int id = 0; ok && id < t.sector_count(); ++id) {
            const auto& sd = t.sector_data(id);
            Int fl = n;
            for (int i = 0; i <= n; ++i)
                fl += rfloor(sd.gamma * weights.w[static_cast<size_t>(i)]);
            ok = fl == sd.kmax;
            if (ok && sd.gamma > 0)
                ok = sd.kmax + t.sector_data(sd.inv_id).kmax == n + mu + sd.delta - 1;
            if (!ok) wit = "sector " + to_string(sd.gamma);
        }
        add("kmax-position", ok, wit);
    }
    {
        bool ok = true;
        for (int id = 0; ok && id < t.sector_count(); ++id) {
            const auto& sd = t.sector_data(id);
            ok = t.sigma(sd.kmax) == Rational(n) - sd.age &&
                 t.sigma(sd.kmin) == Rational(n + 1 - sd.delta) - sd.age;
        }
        add("sigma-at-sector-ends", ok);
    }
    {
        // j+k = n (mod mu)  <=>  dual sectors AND sigma(j)+sigma(k) = n;
        // on the congruent pairs the I-products agree.
        bool ok = true;
        std::string wit;
        for (long long j = 0; ok && j < mu; ++j)
            for (long long k = 0; ok && k < mu; ++k) {
                const bool cong = (j + k - n) % mu == 0;
                const auto& sj = t.sector_data(t.sector_of(static_cast<int>(j)));
                const auto& sk = t.sector_data(t.sector_of(static_cast<int>(k)));
                const bool dual = sk.gamma == t.sector_data(sj.inv_id).gamma &&
                                  t.sigma(static_cast<int>(j)) + t.sigma(static_cast<int>(k)) == n;
                ok = cong == dual && (!cong || sj.prod_I == sk.prod_I);
                if (!ok) wit = fmt_pair(j, k);
            }
        add("flat-duality", ok, wit);
    }
    {
        const long long d = weights.gcd_w;
        bool ok = true;
        for (long long q = 0; ok && q < d; ++q)
            for (long long r = 0; ok && r < mu / d; ++r) {
                const long long i = q * (mu / d) + r;
                ok = t.s(static_cast<int>(i)) == Rational(q, d) + t.s(static_cast<int>(r)) &&
                     t.sigma(static_cast<int>(i)) == t.sigma(static_cast<int>(r));
                if (ok) {
                    // a(q*mu/d + r) = a(q*mu/d) + a(r), a(q*mu/d) = q*w/d
                    const auto& ai = t.a(i);
                    const auto& ar = t.a(r);
                    for (int c = 0; ok && c <= n; ++c)
                        ok = ai[static_cast<size_t>(c)] ==
                             q * weights.w[static_cast<size_t>(c)] / d + ar[static_cast<size_t>(c)];
                }
            }
        add("gcd-splitting", ok);
    }
    {
        bool ok = true;
        for (long long k = 0; ok && k <= t.sequence_length(); ++k) {
            long long total = 0;
            for (long long c : t.a(k)) total += c;
            ok = total == k;
        }
        for (int c = 0; ok && c <= n; ++c)
            ok = t.a(mu)[static_cast<size_t>(c)] == weights.w[static_cast<size_t>(c)];
        for (long long k = 0; ok && k < mu; ++k) {
            const int i = t.recursion_index(k);
            ok = Rational(t.a(k)[static_cast<size_t>(i)], weights.w[static_cast<size_t>(i)]) ==
                 t.s(static_cast<int>(k));
        }
        add("recursion-multiset", ok);
    }
    return out;
}

} // namespace orbimirror
