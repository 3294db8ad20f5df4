#pragma once

// Potential reconstruction: the associativity equations plus Euler
// homogeneity pin down every coefficient of the genus-zero potential from the
// 3-point initial data, one total length at a time.

#include "orbimirror/spectrum.hpp"

#include <map>
#include <vector>

namespace orbimirror {

struct EulerField {
    std::vector<Rational> linear; // coefficient of t_k d/dt_k
    Rational constant;            // scalar shift
    int slot;                     // index of the distinguished direction
};
EulerField euler_field(const SpectrumTable& t);

// Scaling weight d(alpha) = 3 - n + sum alpha_k (sigma(k) - 1).
Rational euler_degree(const SpectrumTable& t, const std::vector<int>& alpha);

struct PotentialCoefficients {
    int max_length = 0;
    int slot = 0;
    // every coefficient with alpha[slot] == 0 and 3 <= |alpha| <= max_length,
    // zeros included
    std::map<std::vector<int>, Rational> store;
};

// Solves stages |alpha| = 4..max_length in order; each coefficient is then
// re-derived from a second equation and a mismatch is a hard error.
PotentialCoefficients reconstruct(const SpectrumTable& t, int max_length);

// A(alpha) for arbitrary alpha: slot entries are removed via Euler
// homogeneity, the remainder is looked up. Throws std::out_of_range past
// max_length.
Rational evaluate(const SpectrumTable& t, const PotentialCoefficients& pc,
                  std::vector<int> alpha);

// d(alpha) A(alpha) / mu = A(alpha + e_slot); requires |alpha| >= 3.
Rational euler_extend(const SpectrumTable& t, const PotentialCoefficients& pc,
                      const std::vector<int>& alpha);

// Associativity residual of the equation indexed by (i, j, k, l) at the
// expansion multi-index beta; zero when the stored potential is consistent.
Rational wdvv_residual(const SpectrumTable& t, const PotentialCoefficients& pc,
                       int i, int j, int k, int l,
                       const std::vector<int>& beta);

} // namespace orbimirror
