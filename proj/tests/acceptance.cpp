// Acceptance gate: every shipped claim is re-checked here at exact (zero)
// tolerance. One [PASS]/[FAIL] line per criterion; nonzero exit on any miss.

#include "orbimirror/aside.hpp"
#include "orbimirror/bside.hpp"
#include "orbimirror/frobenius.hpp"
#include "orbimirror/spectrum.hpp"
#include "orbimirror/wdvv.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <vector>

using namespace orbimirror;

namespace {

struct Abort {};

#define REQUIRE(cond)                                                          \
    do {                                                                       \
        if (!(cond)) {                                                         \
            std::cout << "  [FAIL] " << __FILE__ << ":" << __LINE__ << "  "    \
                      << #cond << "\n";                                        \
            throw Abort{};                                                     \
        }                                                                      \
    } while (0)

int g_failed = 0;

void criterion(const std::string& name, double limit_s,
               const std::function<void()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    try {
        body();
    } catch (const Abort&) {
        ok = false;
    } catch (const std::exception& e) {
        std::cout << "  [FAIL] exception: " << e.what() << "\n";
        ok = false;
    }
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (ok && limit_s > 0 && dt > limit_s) {
        std::cout << "  [FAIL] time limit " << limit_s << "s exceeded\n";
        ok = false;
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "  ("
              << std::fixed << std::setprecision(2) << dt << "s)\n";
    if (!ok) ++g_failed;
}

void fail_on(bool bad, const std::vector<long long>& w, const char* what) {
    if (!bad) return;
    std::cout << "  [FAIL] " << what << " on weights";
    for (long long x : w) std::cout << " " << x;
    std::cout << "\n";
    throw Abort{};
}

Rational R(long long p, long long q = 1) { return Rational(p, q); }

// non-decreasing weight vectors with sum <= maxsum
void partitions_up_to(long long maxsum,
                      const std::function<void(const std::vector<long long>&)>& fn) {
    std::vector<long long> cur;
    std::function<void(long long, long long)> rec = [&](long long mn,
                                                        long long rem) {
        for (long long v = mn; v <= rem; ++v) {
            cur.push_back(v);
            fn(cur);
            rec(v, rem - v);
            cur.pop_back();
        }
    };
    rec(1, maxsum);
}

Int comb(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

// rational-degree-d counts of plane curves through 3d-1 points
std::vector<Rational> kontsevich(int dmax) {
    std::vector<Rational> N(static_cast<size_t>(dmax) + 1, 0);
    N[1] = 1;
    for (int d = 2; d <= dmax; ++d) {
        Rational acc = 0;
        for (int d1 = 1; d1 < d; ++d1) {
            const int d2 = d - d1;
            acc += N[static_cast<size_t>(d1)] * N[static_cast<size_t>(d2)] *
                   d1 * d1 * d2 *
                   (Rational(d2) * Rational(comb(3 * d - 4, 3 * d1 - 2)) -
                    Rational(d1) * Rational(comb(3 * d - 4, 3 * d1 - 1)));
        }
        N[static_cast<size_t>(d)] = acc;
    }
    return N;
}

void golden_suite() {
    const auto t = build_spectrum({1, 2, 2, 3, 3, 3});
    REQUIRE(t.mu() == 14);
    REQUIRE(t.sector_count() == 4);
    REQUIRE(t.sigma(6) == R(4, 3));
    REQUIRE(t.sigma(13) == R(11, 3));
    REQUIRE(t.a(6) == std::vector<long long>({1, 1, 1, 1, 1, 1}));
    const auto& s13 = t.sector_data(t.sector_of(6)); // the 1/3 block
    REQUIRE(s13.gamma == R(1, 3));
    REQUIRE(s13.delta == 3);
    REQUIRE(s13.age == R(5, 3));
    REQUIRE(s13.kmin == 6);
    REQUIRE(s13.kmax == 8);
    REQUIRE(s13.prod_I == 27);

    // pairing blocks
    REQUIRE(poincare_pairing(t, basis_class(t, R(0), 2), basis_class(t, R(0), 3)) == R(1, 108));
    REQUIRE(poincare_pairing(t, basis_class(t, R(1, 3), 1), basis_class(t, R(2, 3), 1)) == R(1, 27));
    REQUIRE(poincare_pairing(t, basis_class(t, R(1, 2), 0), basis_class(t, R(1, 2), 1)) == R(1, 4));

    // cup samples
    {
        const auto u = cup(t, basis_class(t, R(1, 3), 0), basis_class(t, R(1, 3), 0));
        REQUIRE(!u.is_zero());
        REQUIRE(u.coeff == 4);
        REQUIRE(u.cls->gamma == R(2, 3));
        REQUIRE(u.cls->d == 2);
    }
    {
        const auto u = cup(t, basis_class(t, R(1, 2), 0), basis_class(t, R(1, 2), 0));
        REQUIRE(!u.is_zero());
        REQUIRE(u.coeff == 27);
        REQUIRE(u.cls->d == 4);
    }
    REQUIRE(cup(t, basis_class(t, R(1, 3), 0), basis_class(t, R(1, 2), 0)).is_zero());

    // triples and the obstruction bundle
    {
        const auto c = basis_class(t, R(1, 3), 0);
        REQUIRE(triple_tensor(t, c, c, c) == R(4, 27));
    }
    const auto ob = obstruction_bundle(t, R(1, 3), R(1, 3), R(1, 3));
    REQUIRE(ob.rank == 2);
    REQUIRE(ob.summand_weights == std::vector<long long>({2, 2}));

    // three-point values with one divisor insertion
    REQUIRE(gw_degree(t, 5, 13) == R(1, 3));
    REQUIRE(*gw_three_point(t, 5, 13).value == R(1, 2916));
    REQUIRE(gw_three_point(t, 5, 13).status == GwStatus::quantum_conjecture);
    REQUIRE(*gw_three_point(t, 4, 0).value == R(1, 108));

    // singularity side
    const auto cm = connection_matrices(t);
    REQUIRE(cm.a0[6][5] == R(7, 54));
    REQUIRE(cm.a0[9][8] == R(14, 27));
    REQUIRE(cm.a0[11][10] == R(7, 2));
    REQUIRE(cm.a0[0][13] == R(14, 27));
    REQUIRE(cm.a0[1][0] == 14);
    REQUIRE(residue_pairing(t, 0, 5) == R(1, 108));
    {
        const auto p = graded_product_rescaled(t, 11, 11);
        REQUIRE(p.has_value());
        REQUIRE(p->first == 4);
        REQUIRE(p->second == 8);
    }
    REQUIRE(graded_pairing(t, 6, 13) == R(1, 27));
    REQUIRE(graded_triple(t, 11, 11, 11) == R(4, 27));
    REQUIRE(critical_constant(t) == Rational(ipow(14, 14), 314928));

    // correspondence
    REQUIRE(xi(t, basis_class(t, R(1, 3), 0)) == 11);
    const auto rep = verify_classical(t);
    REQUIRE(rep.pass());
    const auto am = a_matrices(t);
    for (long long j = 0; j < 14; ++j)
        REQUIRE(am.a0[(j + 1) % 14][j] == cm.a0[(j + 1) % 14][j]);
    REQUIRE(all_pass(check_dubrovin_preconditions(t, initial_conditions_b(t))));
}

void classical_exhaustive() {
    long long count = 0;
    std::vector<long long> w;
    // every ordered tuple, lengths 1..5, entries 1..6
    std::function<void(int)> rec = [&](int remaining) {
        if (!w.empty()) {
            const auto t = build_spectrum(w);
            fail_on(!verify_classical(t).pass(), w, "classical correspondence");
            ++count;
        }
        if (remaining == 0) return;
        for (long long v = 1; v <= 6; ++v) {
            w.push_back(v);
            rec(remaining - 1);
            w.pop_back();
        }
    };
    w.clear();
    for (long long v = 1; v <= 6; ++v) {
        w.push_back(v);
        rec(4);
        w.pop_back();
    }
    REQUIRE(count == 9330);

    // 50 draws from a fixed seed, mu capped at 40
    std::mt19937 rng(20240817);
    for (int it = 0; it < 50; ++it) {
        std::vector<long long> v;
        long long mu;
        do {
            v.clear();
            const int len = 1 + static_cast<int>(rng() % 5);
            mu = 0;
            for (int i = 0; i < len; ++i) {
                v.push_back(1 + static_cast<long long>(rng() % 12));
                mu += v.back();
            }
        } while (mu > 40);
        const auto t = build_spectrum(v);
        fail_on(!verify_classical(t).pass(), v, "classical correspondence");
    }
    std::cout << "  " << count << " exhaustive + 50 seeded weight vectors\n";
}

void quantum_coprime() {
    long long count = 0;
    partitions_up_to(30, [&](const std::vector<long long>& w) {
        long long mu = 0, l = 1;
        for (long long x : w) {
            mu += x;
            l = std::lcm(l, x);
        }
        if (std::gcd(mu, l) != 1) return;
        const auto t = build_spectrum(w);
        const auto rep = verify_quantum(t);
        fail_on(!rep.coprime, w, "coprimality detection");
        fail_on(!rep.skipped.empty(), w, "unexpected skipped entries");
        fail_on(!rep.pass(), w, "quantum correspondence");
        ++count;
    });
    std::cout << "  " << count
              << " coprime weight partitions, entrywise at zero tolerance\n";
    REQUIRE(count > 0);
}

void spectral_random() {
    std::mt19937 rng(20240817);
    for (int it = 0; it < 256; ++it) {
        std::vector<long long> v;
        long long mu;
        do {
            v.clear();
            const int len = 1 + static_cast<int>(rng() % 6);
            mu = 0;
            for (int i = 0; i < len; ++i) {
                v.push_back(1 + static_cast<long long>(rng() % 12));
                mu += v.back();
            }
        } while (mu > 48);
        fail_on(!all_pass(verify_spectral_identities(make_weights(v))), v,
                "spectral identities");
    }
    std::cout << "  256 seeded weight vectors\n";
}

void frobenius_axioms() {
    long long count = 0;
    partitions_up_to(20, [&](const std::vector<long long>& w) {
        const auto t = build_spectrum(w);
        fail_on(!all_pass(verify_aside_axioms(t)), w, "cohomology ring axioms");
        fail_on(!all_pass(verify_bside_axioms(t)), w, "jacobian algebra axioms");
        ++count;
    });
    std::cout << "  " << count << " weight partitions, both sides\n";
}

void regularity() {
    long long count = 0;
    partitions_up_to(20, [&](const std::vector<long long>& w) {
        const auto t = build_spectrum(w);
        fail_on(!all_pass(check_dubrovin_preconditions(t, initial_conditions_b(t))),
                w, "regularity preconditions (B data)");
        ++count;
    });
    partitions_up_to(30, [&](const std::vector<long long>& w) {
        long long mu = 0, l = 1;
        for (long long x : w) {
            mu += x;
            l = std::lcm(l, x);
        }
        if (std::gcd(mu, l) != 1) return;
        const auto t = build_spectrum(w);
        fail_on(!all_pass(check_dubrovin_preconditions(t, initial_conditions_a(t).data)),
                w, "regularity preconditions (A data)");
        ++count;
    });
    std::cout << "  " << count << " initial-condition packages\n";
}

void potential_reconstruction() {
    // the projective plane against the classical curve counts
    const auto t = build_spectrum({1, 1, 1});
    const auto pc = reconstruct(t, 10);
    REQUIRE(evaluate(t, pc, {0, 1, 2}) == 1);
    REQUIRE(evaluate(t, pc, {0, 0, 5}) == 1);
    REQUIRE(evaluate(t, pc, {0, 0, 8}) == 12);
    const auto N = kontsevich(6);
    REQUIRE(N[2] == 1);
    REQUIRE(N[3] == 12);
    REQUIRE(N[4] == 620);
    REQUIRE(N[5] == 87304);
    REQUIRE(N[6] == 26312976);
    for (int d = 2; 3 * d - 1 <= 10; ++d) {
        std::vector<int> a{0, 0, 0};
        a[2] = 3 * d - 1;
        REQUIRE(evaluate(t, pc, a) == N[static_cast<size_t>(d)]);
    }
    long long checked = 0, bad = 0;
    std::vector<int> beta(3, 0);
    std::function<void(int, int)> betas = [&](int pos, int rem) {
        if (pos == 3) {
            for (int i = 0; i < 3; ++i)
                for (int k = i + 1; k < 3; ++k)
                    for (int j = 0; j < 3; ++j)
                        for (int l = j + 1; l < 3; ++l) {
                            ++checked;
                            if (wdvv_residual(t, pc, i, j, k, l, beta) != 0)
                                ++bad;
                        }
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            beta[static_cast<size_t>(pos)] = v;
            betas(pos + 1, rem - v);
        }
        beta[static_cast<size_t>(pos)] = 0;
    };
    betas(0, 7);
    REQUIRE(checked == 1080);
    REQUIRE(bad == 0);

    // the weighted line: residuals plus Euler homogeneity
    const auto t2 = build_spectrum({1, 2});
    const auto pc2 = reconstruct(t2, 8);
    REQUIRE(pc2.store.at({1, 0, 2}) == R(1, 2));
    REQUIRE(pc2.store.at({0, 0, 4}) == R(-1, 4));
    long long checked2 = 0, bad2 = 0;
    std::vector<int> beta2(3, 0);
    std::function<void(int, int)> betas2 = [&](int pos, int rem) {
        if (pos == 3) {
            for (int i = 0; i < 3; ++i)
                for (int k = i + 1; k < 3; ++k)
                    for (int j = 0; j < 3; ++j)
                        for (int l = j + 1; l < 3; ++l) {
                            ++checked2;
                            if (wdvv_residual(t2, pc2, i, j, k, l, beta2) != 0)
                                ++bad2;
                        }
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            beta2[static_cast<size_t>(pos)] = v;
            betas2(pos + 1, rem - v);
        }
        beta2[static_cast<size_t>(pos)] = 0;
    };
    betas2(0, 5);
    REQUIRE(checked2 == 504);
    REQUIRE(bad2 == 0);
    for (const auto& [a, v] : pc2.store) {
        std::vector<int> up = a;
        up[static_cast<size_t>(pc2.slot)] += 1;
        REQUIRE(evaluate(t2, pc2, up) == euler_degree(t2, a) * v / t2.mu());
    }
    std::cout << "  1080 + 504 associativity residuals, all zero\n";
}

} // namespace

int main() {
    criterion("golden-values-1-2-2-3-3-3", 1.0, golden_suite);
    criterion("classical-correspondence-exhaustive", 60.0, classical_exhaustive);
    criterion("quantum-correspondence-coprime", 30.0, quantum_coprime);
    criterion("spectral-identity-property-tests", 0, spectral_random);
    criterion("frobenius-axioms-both-sides", 0, frobenius_axioms);
    criterion("regularity-preconditions", 0, regularity);
    criterion("potential-reconstruction", 120.0, potential_reconstruction);
    criterion("dependency-substitutions", 0, [] {
        std::cout << "  exact arithmetic: boost::multiprecision cpp_int/cpp_rational"
                     " (header-only) in place of a computer-algebra system\n"
                  << "  plumbing: CLI11 (flags), nlohmann/json (serialization),"
                     " doctest (unit harness)\n";
    });
    std::cout << (g_failed ? "FAILED" : "OK") << " (" << g_failed
              << " criteria failed)\n";
    return g_failed ? 1 : 0;
}
