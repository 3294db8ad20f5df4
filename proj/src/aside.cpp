#include "orbimirror/aside.hpp"

#include <algorithm>
#include <sstream>

namespace orbimirror {

namespace {

int sid_of(const SpectrumTable& t, const CohClass& c) {
    const int id = t.sector_id(c.gamma);
    if (id < 0) throw std::domain_error("class sector is not spectral");
    return id;
}

// intersection of sorted index vectors
std::vector<int> meet(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string fmt_triple(int i, int j, int k) {
    std::ostringstream os;
    os << "(" << i << "," << j << "," << k << ")";
    return os.str();
}

} // namespace

const char* to_string(GwStatus s) {
    switch (s) {
    case GwStatus::zero: return "zero";
    case GwStatus::classical: return "classical";
    case GwStatus::quantum_theorem: return "quantum-theorem";
    case GwStatus::quantum_conjecture: return "quantum-conjecture";
    case GwStatus::unsupported: return "unsupported";
    }
    return "?";
}

CohClass basis_class(const SpectrumTable& t, const Rational& gamma, int d) {
    const int id = t.sector_id(gamma);
    if (id < 0) throw std::domain_error("gamma is not a spectral value");
    const auto& sd = t.sector_data(id);
    if (d < 0 || d >= sd.delta) throw std::domain_error("power d must satisfy 0 <= d < delta");
    CohClass c;
    c.gamma = gamma;
    c.d = d;
    c.flat = t.flat_index(gamma, d);
    c.half_degree = Rational(d) + sd.age;
    return c;
}

std::vector<CohClass> basis(const SpectrumTable& t) {
    std::vector<CohClass> out;
    out.reserve(static_cast<size_t>(t.mu()));
    for (long long i = 0; i < t.mu(); ++i) {
        auto [gamma, d] = t.flat_class(static_cast<int>(i));
        CohClass c;
        c.gamma = gamma;
        c.d = d;
        c.flat = static_cast<int>(i);
        c.half_degree = t.sigma(static_cast<int>(i));
        out.push_back(std::move(c));
    }
    return out;
}

Rational poincare_pairing(const SpectrumTable& t, const CohClass& c1, const CohClass& c2) {
    const auto& sd = t.sector_data(sid_of(t, c1));
    if (c2.gamma != t.sector_data(sd.inv_id).gamma) return 0;
    if (c1.d + c2.d != sd.delta - 1) return 0;
    return Rational(1) / Rational(sd.prod_I);
}

ObstructionBundle obstruction_bundle(const SpectrumTable& t, const Rational& g0,
                                     const Rational& g1, const Rational& ginf) {
    for (const Rational* g : {&g0, &g1, &ginf})
        if (*g < 0 || *g >= 1) throw std::domain_error("sector labels must lie in [0,1)");
    if (frac(g0 + g1 + ginf) != 0)
        throw std::domain_error("sector labels must sum to an integer");
    const auto& w = t.weights().w;
    ObstructionBundle out;
    Rational agesum = 0;
    int meetsize = 0;
    for (int i = 0; i <= t.n(); ++i) {
        const Rational f0 = frac(g0 * w[static_cast<size_t>(i)]);
        const Rational f1 = frac(g1 * w[static_cast<size_t>(i)]);
        const Rational f2 = frac(ginf * w[static_cast<size_t>(i)]);
        if (f0 + f1 + f2 == 2) {
            out.J.push_back(i);
            out.summand_weights.push_back(w[static_cast<size_t>(i)]);
        }
        if (f0 == 0 && f1 == 0 && f2 == 0) ++meetsize;
        agesum += f0 + f1 + f2;
    }
    out.rank = static_cast<int>(out.J.size());
    // rank = dim P(w_{I-triple}) - n + sum of ages; a failure here would mean
    // the fractional-part bookkeeping is broken.
    if (Rational(out.rank) != Rational(meetsize - 1 - t.n()) + agesum)
        throw std::logic_error("obstruction rank identity violated");
    return out;
}

Rational triple_tensor(const SpectrumTable& t, const CohClass& c0, const CohClass& c1,
                       const CohClass& cinf) {
    if (frac(c0.gamma + c1.gamma + cinf.gamma) != 0) return 0;
    if (c0.half_degree + c1.half_degree + cinf.half_degree != t.n()) return 0;
    const int i0 = sid_of(t, c0), i1 = sid_of(t, c1), i2 = sid_of(t, cinf);
    const auto& w = t.weights().w;
    Int numv = 1;
    for (int j : t.J(i0, i1, i2)) numv *= w[static_cast<size_t>(j)];
    Int denv = 1;
    for (int j : meet(meet(t.sector_data(i0).I, t.sector_data(i1).I), t.sector_data(i2).I))
        denv *= w[static_cast<size_t>(j)];
    return Rational(numv, denv);
}

ScaledClass cup(const SpectrumTable& t, const CohClass& c0, const CohClass& c1) {
    const int i0 = sid_of(t, c0), i1 = sid_of(t, c1);
    const int ig = t.compose_sector(i0, i1);
    if (ig < 0) return {};
    const auto& sg = t.sector_data(ig);
    const Rational dr = c0.half_degree + c1.half_degree - sg.age;
    if (!is_integer(dr)) throw std::logic_error("cup degree shift is not an integer");
    const long long d = static_cast<long long>(num(dr));
    if (d < 0 || d >= sg.delta) return {};
    // K = J(g0, g1, {1-g}) joined with I(g) minus I(g0) meet I(g1)
    const auto& w = t.weights().w;
    std::vector<int> K = t.J(i0, i1, sg.inv_id);
    const auto both = meet(t.sector_data(i0).I, t.sector_data(i1).I);
    std::vector<int> extra;
    std::set_difference(sg.I.begin(), sg.I.end(), both.begin(), both.end(),
                        std::back_inserter(extra));
    K.insert(K.end(), extra.begin(), extra.end());
    std::sort(K.begin(), K.end());
    K.erase(std::unique(K.begin(), K.end()), K.end());
    Int coeff = 1;
    for (int j : K) coeff *= w[static_cast<size_t>(j)];
    return {Rational(coeff), basis_class(t, sg.gamma, static_cast<int>(d))};
}

Rational top_integral(const SpectrumTable& t) {
    Int p = 1;
    for (long long wi : t.weights().w) p *= wi;
    return Rational(1, p);
}

Rational gw_degree(const SpectrumTable& t, int j, int k) {
    return Rational(1 + j + k - t.n(), t.mu()) - t.s(j) - t.s(k);
}

bool gw_degree_effective(const SpectrumTable& t, int j, int k) {
    const Rational v = gw_degree(t, j, k) * t.weights().lcm_w;
    return v >= 0 && is_integer(v);
}

GwValue gw_three_point(const SpectrumTable& t, int j, int k) {
    const long long mu = t.mu();
    if ((1 + j + k - t.n()) % mu != 0) {
        if (std::gcd(mu, t.weights().lcm_w) == 1) return {Rational(0), GwStatus::zero};
        return {std::nullopt, GwStatus::unsupported};
    }
    const auto& sj = t.sector_data(t.sector_of(j));
    if (t.sigma(static_cast<int>(1 % mu)) + t.sigma(j) + t.sigma(k) == t.n())
        return {Rational(1) / Rational(sj.prod_I), GwStatus::classical};
    const auto& sk = t.sector_data(t.sector_of(k));
    const bool all_ones =
        std::all_of(t.weights().w.begin(), t.weights().w.end(), [](long long x) { return x == 1; });
    return {Rational(1) / Rational(sj.prod_I * sk.prod_I),
            all_ones ? GwStatus::quantum_theorem : GwStatus::quantum_conjecture};
}

ASideMatrices a_matrices(const SpectrumTable& t) {
    const long long mu = t.mu();
    ASideMatrices out;
    out.a0.assign(static_cast<size_t>(mu), std::vector<Rational>(static_cast<size_t>(mu), 0));
    out.a_inf = out.a0;
    for (long long j = 0; j < mu; ++j)
        out.a_inf[static_cast<size_t>(j)][static_cast<size_t>(j)] = t.sigma(static_cast<int>(j));
    out.coprime = std::gcd(mu, t.weights().lcm_w) == 1;
    out.cycle_status.resize(static_cast<size_t>(mu));
    for (long long j = 0; j < mu; ++j) {
        const int m = static_cast<int>(((t.n() - j - 1) % mu + mu) % mu);
        const GwValue gv = gw_three_point(t, static_cast<int>(j), m);
        if (!gv.value)
            throw std::logic_error("cyclic entry unexpectedly unsupported");
        const long long r = (j + 1) % mu;
        out.a0[static_cast<size_t>(r)][static_cast<size_t>(j)] =
            *gv.value * mu * Rational(t.sector_data(t.sector_of(static_cast<int>(r))).prod_I);
        out.cycle_status[static_cast<size_t>(j)] = gv.status;
    }
    if (!out.coprime)
        for (long long r = 0; r < mu; ++r)
            for (long long j = 0; j < mu; ++j)
                if (r != (j + 1) % mu)
                    out.unsupported_offcycle.emplace_back(static_cast<int>(r), static_cast<int>(j));
    return out;
}

std::vector<CheckResult> verify_aside_axioms(const SpectrumTable& t) {
    std::vector<CheckResult> out;
    const long long mu = t.mu();
    const auto cls = basis(t);
    auto add = [&out](const char* name, bool ok, std::string wit = {}) {
        out.push_back({name, ok, ok ? std::string{} : std::move(wit)});
    };

    // memoized cup table over flat pairs: (coeff, flat index) with coeff 0 for zero
    std::vector<std::pair<Rational, int>> cupt(static_cast<size_t>(mu * mu), {Rational(0), -1});
    for (long long i = 0; i < mu; ++i)
        for (long long j = 0; j < mu; ++j) {
            const ScaledClass sc = cup(t, cls[static_cast<size_t>(i)], cls[static_cast<size_t>(j)]);
            if (!sc.is_zero())
                cupt[static_cast<size_t>(i * mu + j)] = {sc.coeff, sc.cls->flat};
        }
    auto ct = [&](long long i, long long j) -> const std::pair<Rational, int>& {
        return cupt[static_cast<size_t>(i * mu + j)];
    };

    {
        bool ok = true;
        std::string wit;
        for (long long j = 0; ok && j < mu; ++j) {
            ok = ct(0, j) == std::make_pair(Rational(1), static_cast<int>(j));
            if (!ok) wit = std::to_string(j);
        }
        add("unit", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (long long i = 0; ok && i < mu; ++i)
            for (long long j = i; ok && j < mu; ++j) {
                ok = ct(i, j) == ct(j, i);
                if (!ok) wit = fmt_triple(static_cast<int>(i), static_cast<int>(j), -1);
            }
        add("commutativity", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (long long i = 0; ok && i < mu; ++i)
            for (long long j = 0; ok && j < mu; ++j)
                for (long long k = 0; ok && k < mu; ++k) {
                    const auto& ab = ct(i, j);
                    Rational lc = 0;
                    int lf = -1;
                    if (ab.second >= 0) {
                        const auto& r = ct(ab.second, k);
                        if (r.second >= 0) { lc = ab.first * r.first; lf = r.second; }
                    }
                    const auto& bc = ct(j, k);
                    Rational rc = 0;
                    int rf = -1;
                    if (bc.second >= 0) {
                        const auto& r = ct(i, bc.second);
                        if (r.second >= 0) { rc = bc.first * r.first; rf = r.second; }
                    }
                    ok = lc == rc && (lc == 0 || lf == rf);
                    if (!ok) wit = fmt_triple(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k));
                }
        add("associativity", ok, wit);
    }
    {
        // grading: nonzero products preserve sigma
        bool ok = true;
        std::string wit;
        for (long long i = 0; ok && i < mu; ++i)
            for (long long j = 0; ok && j < mu; ++j) {
                const auto& ab = ct(i, j);
                if (ab.second >= 0) {
                    ok = t.sigma(ab.second) ==
                         t.sigma(static_cast<int>(i)) + t.sigma(static_cast<int>(j));
                    if (!ok) wit = fmt_triple(static_cast<int>(i), static_cast<int>(j), -1);
                }
            }
        add("grading", ok, wit);
    }
    {
        // Frobenius compatibility: <a u b, c> = (a,b,c), fully symmetric
        bool ok = true;
        std::string wit;
        for (long long i = 0; ok && i < mu; ++i)
            for (long long j = 0; ok && j < mu; ++j)
                for (long long k = 0; ok && k < mu; ++k) {
                    const auto& ab = ct(i, j);
                    Rational lhs = 0;
                    if (ab.second >= 0)
                        lhs = ab.first * poincare_pairing(t, cls[static_cast<size_t>(ab.second)],
                                                          cls[static_cast<size_t>(k)]);
                    const Rational tv = triple_tensor(t, cls[static_cast<size_t>(i)],
                                                      cls[static_cast<size_t>(j)],
                                                      cls[static_cast<size_t>(k)]);
                    ok = lhs == tv;
                    if (!ok) wit = fmt_triple(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k));
                }
        add("frobenius-compatibility", ok, wit);
    }
    {
        // pairing: symmetric, one nonzero per row at the dual index
        bool ok = true;
        std::string wit;
        for (long long i = 0; ok && i < mu; ++i)
            for (long long j = 0; ok && j < mu; ++j) {
                const Rational v =
                    poincare_pairing(t, cls[static_cast<size_t>(i)], cls[static_cast<size_t>(j)]);
                const Rational vt =
                    poincare_pairing(t, cls[static_cast<size_t>(j)], cls[static_cast<size_t>(i)]);
                const bool dual = (i + j - t.n()) % mu == 0;
                ok = v == vt && (v != 0) == dual;
                if (!ok) wit = fmt_triple(static_cast<int>(i), static_cast<int>(j), -1);
            }
        add("pairing-structure", ok, wit);
    }
    return out;
}

std::string class_label(const CohClass& c) {
    return "eta[" + std::to_string(c.d) + "," + to_string(c.gamma) + "]";
}

} // namespace orbimirror
