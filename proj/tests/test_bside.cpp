#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbimirror/bside.hpp"

using namespace orbimirror;

namespace {
Rational R(long long p, long long q = 1) { return Rational(p, q); }
}

TEST_CASE("omega basis of (1,2)") {
    const auto t = build_spectrum({1, 2});
    const auto ob = omega_basis(t);
    REQUIRE(ob.size() == 3);
    CHECK(ob[0].multi_index == std::vector<long long>{0, 0});
    CHECK(ob[1].multi_index == std::vector<long long>{1, 0});
    CHECK(ob[2].multi_index == std::vector<long long>{1, 1});
    CHECK(ob[2].newton_degree == R(1, 2));
    // omega~_2 rescales by w^{a(2)-a(2)} = 1 (block start is 2 itself)
    CHECK(ob[2].rescale_factor == 1);
    CHECK(ob[1].rescale_factor == 1);
}

TEST_CASE("star product of (1,2)") {
    const auto t = build_spectrum({1, 2});
    const auto st = star(t, 1, 2);
    CHECK(st.index == 0);
    CHECK(st.coeff.expo == std::vector<long long>{1, -1});
    CHECK(st.coeff.value == R(1, 2));
    const auto sr = star_rescaled(t, 1, 1);
    CHECK(sr.first == R(1, 2));
    CHECK(sr.second == 2);
}

TEST_CASE("residue pairing and 3-tensor of (1,2)") {
    const auto t = build_spectrum({1, 2});
    CHECK(residue_pairing(t, 2, 2) == R(1, 2));
    CHECK(residue_pairing(t, 0, 1) == R(1, 2));
    CHECK(residue_pairing(t, 0, 0) == 0);
    CHECK(b_triple_tensor(t, 1, 2) == R(1, 4));
    CHECK(b_triple_tensor(t, 0, 0) == R(1, 2));
    CHECK(!graded_product(t, 1, 2).has_value());
    CHECK(critical_constant(t) == R(27, 4));
}

TEST_CASE("connection matrices") {
    {
        const auto t = build_spectrum({1, 2});
        const auto cm = connection_matrices(t);
        CHECK(cm.a0[1][0] == 3);
        CHECK(cm.a0[2][1] == R(3, 2));
        CHECK(cm.a0[0][2] == R(3, 2));
        CHECK(cm.a_inf[2][2] == R(1, 2));
    }
    {
        const auto t = build_spectrum({1, 1});
        const auto cm = connection_matrices(t);
        CHECK(cm.a0[1][0] == 2);
        CHECK(cm.a0[0][1] == 2);
        CHECK(critical_constant(t) == 4);
    }
    {
        // a pure-weight point: the cycle closes with weight powers, c = 1
        const auto t = build_spectrum({2});
        const auto cm = connection_matrices(t);
        CHECK(cm.a0[1][0] == 1);
        CHECK(cm.a0[0][1] == 1);
        CHECK(critical_constant(t) == 1);
    }
    {
        const auto t = build_spectrum({1, 2, 2, 3, 3, 3});
        const auto cm = connection_matrices(t);
        CHECK(cm.a0[6][5] == R(7, 54));
        CHECK(cm.a0[9][8] == R(14, 27));
        CHECK(cm.a0[11][10] == R(7, 2));
        CHECK(cm.a0[0][13] == R(14, 27));
        CHECK(cm.a0[1][0] == 14);
        CHECK(cm.a0[4][3] == 14);
        CHECK(cm.a0[3][3] == 0);
    }
}

TEST_CASE("graded structures of (1,2,2,3,3,3)") {
    const auto t = build_spectrum({1, 2, 2, 3, 3, 3});
    {
        const auto p = graded_product_rescaled(t, 11, 11);
        REQUIRE(p.has_value());
        CHECK(p->first == 4);
        CHECK(p->second == 8);
    }
    CHECK(graded_pairing(t, 6, 13) == R(1, 27));
    CHECK(graded_pairing(t, 6, 12) == 0);
    CHECK(graded_triple(t, 11, 11, 11) == R(4, 27));
    CHECK(residue_pairing(t, 0, 5) == R(1, 108));
}

TEST_CASE("initial conditions pack the connection data") {
    const auto t = build_spectrum({1, 2});
    const auto fd = initial_conditions_b(t);
    CHECK(fd.e0 == 0);
    CHECK(fd.critical_constant == R(27, 4));
    CHECK(fd.a0[1][0] == 3);
    CHECK(fd.g[0][1] == R(1, 2));
    CHECK(fd.g[1][0] == R(1, 2));
    CHECK(fd.g[2][2] == R(1, 2));
    CHECK(fd.g[0][0] == 0);
    CHECK(fd.a_inf[1][1] == 1);
}

TEST_CASE("algebra axioms hold on sample spaces") {
    for (const auto& w : std::vector<std::vector<long long>>{
             {1}, {2}, {1, 1}, {1, 2}, {2, 4}, {1, 1, 1}, {1, 2, 3}, {3, 3, 3},
             {1, 2, 2, 3, 3, 3}}) {
        const auto t = build_spectrum(w);
        for (const auto& c : verify_bside_axioms(t)) {
            INFO(c.name << " with mu=" << t.mu() << " witness " << c.witness);
            CHECK(c.pass);
        }
    }
}
