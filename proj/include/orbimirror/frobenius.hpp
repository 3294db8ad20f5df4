#pragma once

// Initial conditions on both sides, the correspondence map Xi, and the
// classical/quantum verification suites.

#include "orbimirror/aside.hpp"
#include "orbimirror/bside.hpp"
#include "orbimirror/report.hpp"

#include <utility>
#include <vector>

namespace orbimirror {

// eta^d_gamma -> index of omega~_{kmin({1-gamma})+d}; bijective and degree
// preserving (half_degree = newton_degree of the image).
int xi(const SpectrumTable& t, const CohClass& c);

struct ASideInitial {
    FrobeniusData data;
    std::vector<GwStatus> cycle_status;   // status of entry ((j+1)%mu, j)
    bool coprime = true;
    std::vector<std::pair<int, int>> skipped; // off-cycle slots not proven zero
};
ASideInitial initial_conditions_a(const SpectrumTable& t);

struct CorrespondenceReport {
    std::vector<CheckResult> checks;
    bool conjecture_used = false;
    bool coprime = true;
    std::vector<std::pair<int, int>> skipped;
    bool pass() const { return all_pass(checks); }
};

// Classical correspondence: degree, pairing, 3-tensor and cup transport under
// Xi, exhaustively over the basis. No coprimality hypothesis.
CorrespondenceReport verify_classical(const SpectrumTable& t);

// Quantum correspondence: A-side initial conditions against B-side ones,
// entrywise. With gcd(mu, lcm w) != 1 only the entries both sides define are
// compared and the skipped slots are listed.
CorrespondenceReport verify_quantum(const SpectrumTable& t);

// Semisimplicity-regularity preconditions: char(A0) = lambda^mu - c with
// c != 0, A0 self-adjoint, A_inf + A_inf* = n id, e0 a 0-eigenvector of A_inf
// and cyclic for A0.
std::vector<CheckResult> check_dubrovin_preconditions(const SpectrumTable& t,
                                                      const FrobeniusData& fd);

} // namespace orbimirror
