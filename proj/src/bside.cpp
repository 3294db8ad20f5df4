#include "orbimirror/bside.hpp"

#include <sstream>

namespace orbimirror {

namespace {

std::vector<long long> rescale_expo(const SpectrumTable& t, int i) {
    const auto& km = t.a(t.sector_data(t.sector_of(i)).kmin);
    const auto& ai = t.a(i);
    std::vector<long long> out(ai.size());
    for (size_t c = 0; c < ai.size(); ++c) out[c] = km[c] - ai[c];
    return out;
}

std::string fmt_pair(int a, int b) {
    std::ostringstream os;
    os << "(" << a << "," << b << ")";
    return os.str();
}

} // namespace

std::vector<OmegaClass> omega_basis(const SpectrumTable& t) {
    std::vector<OmegaClass> out;
    out.reserve(static_cast<size_t>(t.mu()));
    for (long long k = 0; k < t.mu(); ++k) {
        OmegaClass oc;
        oc.k = static_cast<int>(k);
        oc.multi_index = t.a(k);
        oc.newton_degree = t.sigma(static_cast<int>(k));
        oc.rescale_expo = rescale_expo(t, static_cast<int>(k));
        oc.rescale_factor = t.wpow(oc.rescale_expo);
        out.push_back(std::move(oc));
    }
    return out;
}

StarTerm star(const SpectrumTable& t, int i, int j) {
    const auto& ai = t.a(i);
    const auto& aj = t.a(j);
    const auto& as = t.a(static_cast<long long>(i) + j); // un-reduced multi-index
    StarTerm out;
    out.coeff.expo.resize(ai.size());
    for (size_t c = 0; c < ai.size(); ++c) out.coeff.expo[c] = ai[c] + aj[c] - as[c];
    out.coeff.value = t.wpow(out.coeff.expo);
    out.index = static_cast<int>((static_cast<long long>(i) + j) % t.mu());
    return out;
}

std::pair<Rational, int> star_rescaled(const SpectrumTable& t, int i, int j) {
    const StarTerm st = star(t, i, j);
    const Rational ri = t.wpow(rescale_expo(t, i));
    const Rational rj = t.wpow(rescale_expo(t, j));
    const Rational rx = t.wpow(rescale_expo(t, st.index));
    return {st.coeff.value * ri * rj / rx, st.index};
}

ConnectionMatrices connection_matrices(const SpectrumTable& t) {
    const long long mu = t.mu();
    ConnectionMatrices out;
    out.a0.assign(static_cast<size_t>(mu), std::vector<Rational>(static_cast<size_t>(mu), 0));
    out.a_inf = out.a0;
    for (long long k = 0; k < mu; ++k)
        out.a_inf[static_cast<size_t>(k)][static_cast<size_t>(k)] = t.sigma(static_cast<int>(k));
    for (long long j = 0; j < mu; ++j) {
        // block start for the un-reduced index j+1; past the last block it is
        // mu itself, with a(mu) = w closing the cycle.
        const long long nxt_start =
            j + 1 < mu ? t.sector_data(t.sector_of(static_cast<int>(j + 1))).kmin : mu;
        const auto& from = t.a(t.sector_data(t.sector_of(static_cast<int>(j))).kmin);
        const auto& to = t.a(nxt_start);
        std::vector<long long> expo(from.size());
        for (size_t c = 0; c < from.size(); ++c) expo[c] = from[c] - to[c];
        const Rational entry = Rational(mu) * t.wpow(expo);
        // sector-change route: mu when s(j)=s(j+1), else mu / prod_I(s(j))
        const long long jn = (j + 1) % mu;
        const Rational alt =
            t.sector_of(static_cast<int>(j)) == t.sector_of(static_cast<int>(jn)) && j + 1 < mu
                ? Rational(mu)
                : Rational(mu) / Rational(t.sector_data(t.sector_of(static_cast<int>(j))).prod_I);
        if (entry != alt)
            throw std::logic_error("connection entry: monomial and sector routes disagree");
        out.a0[static_cast<size_t>(jn)][static_cast<size_t>(j)] = entry;
    }
    return out;
}

Rational residue_pairing(const SpectrumTable& t, int j, int k) {
    if ((static_cast<long long>(j) + k - t.n()) % t.mu() != 0) return 0;
    return Rational(1) / Rational(t.sector_data(t.sector_of(j)).prod_I);
}

Rational b_triple_tensor(const SpectrumTable& t, int j, int k) {
    const int one = static_cast<int>(1 % t.mu());
    const auto [coeff, idx] = star_rescaled(t, one, j);
    const Rational direct = coeff * residue_pairing(t, idx, k);
    // closed form: zero off the congruence; 1/prod_I(s(j)) at the classical
    // degrees; 1/(prod_I(s(j)) prod_I(s(k))) otherwise
    Rational closed = 0;
    if ((1 + static_cast<long long>(j) + k - t.n()) % t.mu() == 0) {
        const auto& sj = t.sector_data(t.sector_of(j));
        if (t.sigma(one) + t.sigma(j) + t.sigma(k) == t.n())
            closed = Rational(1) / Rational(sj.prod_I);
        else
            closed = Rational(1) / Rational(sj.prod_I * t.sector_data(t.sector_of(k)).prod_I);
    }
    if (direct != closed)
        throw std::logic_error("b-side 3-tensor: star/metric route disagrees with the closed form at " +
                               fmt_pair(j, k));
    return direct;
}

std::optional<GradedTerm> graded_product(const SpectrumTable& t, int i, int j) {
    const int idx = static_cast<int>((static_cast<long long>(i) + j) % t.mu());
    const Rational ssum = t.sigma(i) + t.sigma(j);
    if (t.sigma(idx) != ssum) {
        if (t.sigma(idx) > ssum)
            throw std::logic_error("newton degree increased under the product");
        return std::nullopt;
    }
    const StarTerm st = star(t, i, j);
    return GradedTerm{st.coeff, st.index};
}

std::optional<std::pair<Rational, int>> graded_product_rescaled(const SpectrumTable& t, int i,
                                                                int j) {
    const auto p = graded_product(t, i, j);
    if (!p) return std::nullopt;
    const Rational ri = t.wpow(rescale_expo(t, i));
    const Rational rj = t.wpow(rescale_expo(t, j));
    const Rational rx = t.wpow(rescale_expo(t, p->index));
    return std::make_pair(p->coeff.value * ri * rj / rx, p->index);
}

Rational graded_pairing(const SpectrumTable& t, int j, int k) {
    const auto& sj = t.sector_data(t.sector_of(j));
    if (t.sector_of(k) != sj.inv_id) return 0;
    if (t.sigma(j) + t.sigma(k) != t.n()) return 0;
    return Rational(1) / Rational(sj.prod_I);
}

Rational graded_triple(const SpectrumTable& t, int i, int j, int k) {
    const auto p = graded_product_rescaled(t, i, j);
    if (!p) return 0;
    return p->first * graded_pairing(t, p->second, k);
}

Rational critical_constant(const SpectrumTable& t) {
    Rational c = rpow(Rational(t.mu()), static_cast<long>(t.mu()));
    for (long long wi : t.weights().w) c /= rpow(Rational(wi), static_cast<long>(wi));
    return c;
}

FrobeniusData initial_conditions_b(const SpectrumTable& t) {
    const long long mu = t.mu();
    FrobeniusData out;
    ConnectionMatrices cm = connection_matrices(t);
    out.a0 = std::move(cm.a0);
    out.a_inf = std::move(cm.a_inf);
    out.g.assign(static_cast<size_t>(mu), std::vector<Rational>(static_cast<size_t>(mu), 0));
    for (long long j = 0; j < mu; ++j)
        for (long long k = 0; k < mu; ++k)
            out.g[static_cast<size_t>(j)][static_cast<size_t>(k)] =
                residue_pairing(t, static_cast<int>(j), static_cast<int>(k));
    out.e0 = 0;
    out.critical_constant = critical_constant(t);
    return out;
}

std::vector<CheckResult> verify_bside_axioms(const SpectrumTable& t) {
    std::vector<CheckResult> out;
    const long long mu = t.mu();
    auto add = [&out](const char* name, bool ok, std::string wit = {}) {
        out.push_back({name, ok, ok ? std::string{} : std::move(wit)});
    };

    // memoized rescaled star table and metric
    std::vector<std::pair<Rational, int>> starT(static_cast<size_t>(mu * mu));
    for (long long i = 0; i < mu; ++i)
        for (long long j = 0; j < mu; ++j)
            starT[static_cast<size_t>(i * mu + j)] =
                star_rescaled(t, static_cast<int>(i), static_cast<int>(j));
    auto st = [&](long long i, long long j) -> const std::pair<Rational, int>& {
        return starT[static_cast<size_t>(i * mu + j)];
    };
    std::vector<Rational> gdiag(static_cast<size_t>(mu));
    for (long long j = 0; j < mu; ++j)
        gdiag[static_cast<size_t>(j)] =
            Rational(1) / Rational(t.sector_data(t.sector_of(static_cast<int>(j))).prod_I);
    auto metric = [&](long long j, long long k) -> Rational {
        if ((j + k - t.n()) % mu != 0) return 0;
        return gdiag[static_cast<size_t>(j)];
    };

    {
        bool ok = true;
        for (long long j = 0; ok && j < mu; ++j)
            ok = st(0, j) == std::make_pair(Rational(1), static_cast<int>(j));
        add("unit", ok);
    }
    {
        bool ok = true;
        std::string wit;
        for (long long i = 0; ok && i < mu; ++i)
            for (long long j = i; ok && j < mu; ++j) {
                ok = st(i, j) == st(j, i);
                if (!ok) wit = fmt_pair(static_cast<int>(i), static_cast<int>(j));
            }
        add("commutativity", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (long long i = 0; ok && i < mu; ++i)
            for (long long j = 0; ok && j < mu; ++j) {
                const auto& ij = st(i, j);
                for (long long k = 0; ok && k < mu; ++k) {
                    const auto& l = st(ij.second, k);
                    const auto& jk = st(j, k);
                    const auto& r = st(i, jk.second);
                    ok = ij.first * l.first == jk.first * r.first && l.second == r.second;
                    if (!ok)
                        wit = "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                              std::to_string(k) + ")";
                }
            }
        add("associativity", ok, wit);
    }
    {
        // [g]([a]*[b], [c]) fully symmetric
        bool ok = true;
        std::string wit;
        for (long long i = 0; ok && i < mu; ++i)
            for (long long j = 0; ok && j < mu; ++j)
                for (long long k = 0; ok && k < mu; ++k) {
                    const auto& ij = st(i, j);
                    const auto& jk = st(j, k);
                    ok = ij.first * metric(ij.second, k) == metric(i, jk.second) * jk.first;
                    if (!ok)
                        wit = "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                              std::to_string(k) + ")";
                }
        add("frobenius-compatibility", ok, wit);
    }
    {
        // graded product: coefficient equals the star coefficient when defined,
        // and the graded metric matches the residue metric entrywise
        bool ok = true;
        std::string wit;
        for (long long i = 0; ok && i < mu; ++i)
            for (long long j = 0; ok && j < mu; ++j) {
                const auto p = graded_product(t, static_cast<int>(i), static_cast<int>(j));
                if (p) {
                    const StarTerm s2 = star(t, static_cast<int>(i), static_cast<int>(j));
                    ok = p->coeff.value == s2.coeff.value && p->index == s2.index;
                }
                if (ok)
                    ok = graded_pairing(t, static_cast<int>(i), static_cast<int>(j)) ==
                         metric(i, j);
                if (!ok) wit = fmt_pair(static_cast<int>(i), static_cast<int>(j));
            }
        add("graded-structures", ok, wit);
    }
    {
        // the two 3-tensor routes agree (b_triple_tensor throws on mismatch)
        bool ok = true;
        std::string wit;
        try {
            for (long long j = 0; j < mu; ++j)
                for (long long k = 0; k < mu; ++k)
                    (void)b_triple_tensor(t, static_cast<int>(j), static_cast<int>(k));
        } catch (const std::logic_error& e) {
            ok = false;
            wit = e.what();
        }
        add("triple-routes", ok, wit);
    }
    return out;
}

} // namespace orbimirror
