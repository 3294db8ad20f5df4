#pragma once

// Chen-Ruan orbifold cohomology of P(w): basis eta^d_gamma, Poincare pairing,
// obstruction bundle, cup product, 3-tensors, and the closed-form three-point
// invariants with one divisor insertion.

#include "orbimirror/report.hpp"
#include "orbimirror/spectrum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbimirror {

struct CohClass {
    Rational gamma;
    int d = 0;              // 0 <= d < delta(gamma)
    int flat = 0;           // kmin({1-gamma}) + d
    Rational half_degree;   // d + age(gamma); orbifold degree is twice this
};

// Cup products are always scalar multiples of a single basis class (or zero).
struct ScaledClass {
    Rational coeff;                // 0 iff zero class
    std::optional<CohClass> cls;
    bool is_zero() const { return !cls.has_value(); }
};

struct ObstructionBundle {
    std::vector<int> J;
    int rank = 0;
    std::vector<long long> summand_weights; // {w_j : j in J}
};

enum class GwStatus { zero, classical, quantum_theorem, quantum_conjecture, unsupported };
const char* to_string(GwStatus s);

struct GwValue {
    std::optional<Rational> value; // absent iff unsupported
    GwStatus status = GwStatus::zero;
};

using Matrix = std::vector<std::vector<Rational>>;

std::vector<CohClass> basis(const SpectrumTable& t);
CohClass basis_class(const SpectrumTable& t, const Rational& gamma, int d);

Rational poincare_pairing(const SpectrumTable& t, const CohClass& c1, const CohClass& c2);

// Throws std::domain_error when g0+g1+ginf is not an integer.
ObstructionBundle obstruction_bundle(const SpectrumTable& t, const Rational& g0,
                                     const Rational& g1, const Rational& ginf);

Rational triple_tensor(const SpectrumTable& t, const CohClass& c0, const CohClass& c1,
                       const CohClass& cinf);

ScaledClass cup(const SpectrumTable& t, const CohClass& c0, const CohClass& c1);

Rational top_integral(const SpectrumTable& t); // 1 / prod w_i

// Degree of the curve class carrying ((eta_1, eta_j, eta_k)); the boolean says
// whether lcm(w) * degree is a non-negative integer (effectivity).
Rational gw_degree(const SpectrumTable& t, int j, int k);
bool gw_degree_effective(const SpectrumTable& t, int j, int k);

GwValue gw_three_point(const SpectrumTable& t, int j, int k);

// Euler multiplication at the origin assembled from the three-point values,
// plus A_inf = diag(sigma). cycle_status[j] tags the entry at ((j+1)%mu, j);
// when gcd(mu, lcm w) != 1 the off-cycle entries are not proven to vanish and
// are listed in unsupported_offcycle (row, col).
struct ASideMatrices {
    Matrix a0;
    Matrix a_inf;
    std::vector<GwStatus> cycle_status;
    bool coprime = true;
    std::vector<std::pair<int, int>> unsupported_offcycle;
};
ASideMatrices a_matrices(const SpectrumTable& t);

// Brute-force ring/Frobenius/grading axioms over all basis tuples.
std::vector<CheckResult> verify_aside_axioms(const SpectrumTable& t);

std::string class_label(const CohClass& c); // "eta[d,gamma]"

} // namespace orbimirror
