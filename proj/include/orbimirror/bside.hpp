#pragma once

// Landau-Ginzburg mirror data: the Brieskorn-lattice basis omega_k, the
// Jacobian star product, the rescaled basis omega~, the residue metric, the
// connection matrices, the B-side 3-tensor and the Newton-graded algebra.

#include "orbimirror/report.hpp"
#include "orbimirror/spectrum.hpp"

#include <optional>
#include <vector>

namespace orbimirror {

struct WeightMonomial {
    std::vector<long long> expo; // exponents, possibly negative
    Rational value;              // prod w_i^{expo_i}
};

struct OmegaClass {
    int k = 0;
    std::vector<long long> multi_index;   // a(k)
    Rational newton_degree;               // sigma(k)
    std::vector<long long> rescale_expo;  // a(kmin(s(k))) - a(k)
    Rational rescale_factor;
};

struct StarTerm {
    WeightMonomial coeff;
    int index = 0; // (i+j) mod mu
};

// Connection matrices in the omega~ basis; columns indexed by the flat basis,
// cyclic entries at row (k+1) mod mu, column k.
struct ConnectionMatrices {
    std::vector<std::vector<Rational>> a0;
    std::vector<std::vector<Rational>> a_inf;
};

// Initial conditions of the Frobenius structure: Euler multiplication at the
// origin, its grading partner, the flat metric and the unit vector index,
// plus the critical-value constant c with char(A0) = lambda^mu - c.
struct FrobeniusData {
    std::vector<std::vector<Rational>> a0;
    std::vector<std::vector<Rational>> a_inf;
    std::vector<std::vector<Rational>> g;
    int e0 = 0;
    Rational critical_constant;
};

std::vector<OmegaClass> omega_basis(const SpectrumTable& t);

StarTerm star(const SpectrumTable& t, int i, int j);

// coefficient of [omega~_{(i+j) mod mu}] in [omega~_i] * [omega~_j]
std::pair<Rational, int> star_rescaled(const SpectrumTable& t, int i, int j);

ConnectionMatrices connection_matrices(const SpectrumTable& t);

Rational residue_pairing(const SpectrumTable& t, int j, int k);

// ((omega~_1, omega~_j, omega~_k)) via star + metric; cross-checked against
// the closed form on every call (std::logic_error on disagreement).
Rational b_triple_tensor(const SpectrumTable& t, int j, int k);

// Associated-graded product: Zero unless sigma((i+j)%mu) = sigma(i)+sigma(j).
struct GradedTerm {
    WeightMonomial coeff;
    int index = 0;
};
std::optional<GradedTerm> graded_product(const SpectrumTable& t, int i, int j);

// graded product transported to the omega~ basis
std::optional<std::pair<Rational, int>> graded_product_rescaled(const SpectrumTable& t, int i, int j);

Rational graded_pairing(const SpectrumTable& t, int j, int k);
Rational graded_triple(const SpectrumTable& t, int i, int j, int k);

FrobeniusData initial_conditions_b(const SpectrumTable& t);

Rational critical_constant(const SpectrumTable& t); // mu^mu / prod w_i^{w_i}

// Brute-force algebra axioms (unit, commutativity, associativity, Frobenius
// compatibility, grading) over all index tuples.
std::vector<CheckResult> verify_bside_axioms(const SpectrumTable& t);

} // namespace orbimirror
