#pragma once

// Weight combinatorics of P(w0..wn): the spectral multiset s, the numbers
// sigma(i) = i - mu*s(i), per-sector data (I, delta, age), and the
// multi-index recursion a(k)/i(k) that indexes the B-side basis.

#include "orbimirror/rational.hpp"
#include "orbimirror/report.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace orbimirror {

struct Weights {
    std::vector<long long> w;
    int n = 0;            // = w.size() - 1
    long long mu = 0;     // = sum of weights
    long long gcd_w = 1;
    long long lcm_w = 1;
};

// Validates and fills the derived scalars. Throws std::invalid_argument on an
// empty vector or a non-positive weight, std::overflow_error if the lcm does
// not fit the internal fixed-point caches.
Weights make_weights(std::vector<long long> w);

struct Sector {
    Rational gamma;
    std::vector<int> I;   // {i : gamma*w_i integral}
    int delta = 0;        // #I
    Rational age;         // sum of {gamma*w_i}
};

class SpectrumTable {
public:
    explicit SpectrumTable(Weights weights);

    const Weights& weights() const { return wt_; }
    int n() const { return wt_.n; }
    long long mu() const { return wt_.mu; }

    const Rational& s(int i) const { return s_.at(static_cast<size_t>(i)); }
    const Rational& sigma(int i) const { return sigma_.at(static_cast<size_t>(i)); }
    // sigma(i) * lcm_w, exact in a long long (guarded at construction).
    long long sigma_scaled(int i) const { return sigscaled_[static_cast<size_t>(i)]; }

    // --- sectors ---------------------------------------------------------
    struct SectorData {
        Rational gamma;
        std::vector<int> I;
        int delta = 0;
        Rational age;
        Int prod_I = 1;               // product of w_i over I
        int kmin = 0, kmax = 0;       // flat index range of this gamma in s
        int inv_id = 0;               // sector id of {1 - gamma}
        std::vector<long long> fscaled; // {gamma*w_i} * lcm_w per component
        long long age_scaled = 0;       // age * lcm_w
    };
    int sector_count() const { return static_cast<int>(sec_.size()); }
    const SectorData& sector_data(int id) const { return sec_.at(static_cast<size_t>(id)); }
    int sector_of(int flat) const { return secof_[static_cast<size_t>(flat)]; }
    // id of gamma in the sector list, or -1 when gamma is not spectral.
    int sector_id(const Rational& gamma) const;
    int inv_sector(int id) const { return sec_[static_cast<size_t>(id)].inv_id; }
    // sector id of {gamma_a + gamma_b}, or -1 when the sum leaves S_w.
    int compose_sector(int a, int b) const {
        return comp_[static_cast<size_t>(a) * sec_.size() + static_cast<size_t>(b)];
    }

    // J(g0,g1,ginf) = components where the three fractional parts sum to 2.
    std::vector<int> J(int id0, int id1, int idinf) const;

    // --- flat basis bookkeeping ------------------------------------------
    // flat index i carries the class with gamma = {1 - s(i)}, d = i - kmin(s(i)).
    std::pair<Rational, int> flat_class(int i) const;
    int flat_index(const Rational& gamma, int d) const;

    // --- multi-index recursion -------------------------------------------
    // a(k) for 0 <= k <= max(2*mu-2, mu); a(i+j) stays in range for i,j < mu.
    const std::vector<long long>& a(long long k) const { return a_.at(static_cast<size_t>(k)); }
    int recursion_index(long long k) const { return idx_.at(static_cast<size_t>(k)); }
    long long sequence_length() const { return static_cast<long long>(a_.size()) - 1; }

    // prod over i of w_i^{expo_i}, exponents of either sign.
    Rational wpow(const std::vector<long long>& expo) const;

private:
    Weights wt_;
    std::vector<Rational> s_, sigma_;
    std::vector<long long> sigscaled_;
    std::vector<SectorData> sec_;
    std::vector<int> secof_;
    std::vector<int> comp_;
    std::vector<std::vector<long long>> a_;
    std::vector<int> idx_;
};

SpectrumTable build_spectrum(const Weights& weights);
inline SpectrumTable build_spectrum(std::vector<long long> w) {
    return SpectrumTable(make_weights(std::move(w)));
}

// Sector data for any gamma in [0,1), spectral or not (delta = 0 outside S_w).
// Throws std::domain_error for gamma outside [0,1).
Sector sector(const Weights& weights, const Rational& gamma);

// Checks every identity the table promises (duality of ages, kmin/kmax
// relations, sigma duality, gcd splitting, recursion/multiset agreement).
std::vector<CheckResult> verify_spectral_identities(const Weights& weights);

} // namespace orbimirror
