#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbimirror/aside.hpp"

using namespace orbimirror;

namespace {
Rational R(long long p, long long q = 1) { return Rational(p, q); }
}

TEST_CASE("basis classes and labels") {
    const auto t = build_spectrum({1, 2, 2, 3, 3, 3});
    const auto cls = basis(t);
    CHECK(cls.size() == 14);
    CHECK(cls[0].gamma == 0);
    CHECK(cls[0].d == 0);
    CHECK(cls[0].half_degree == 0);
    CHECK(class_label(cls[0]) == "eta[0,0]");
    // flat 6 starts the 1/3-block of s, carrying gamma = {1 - 1/3} = 2/3
    CHECK(cls[6].gamma == R(2, 3));
    CHECK(cls[6].d == 0);
    CHECK(cls[6].half_degree == R(4, 3));
    CHECK(class_label(cls[6]) == "eta[0,2/3]");
    CHECK(cls[11].gamma == R(1, 3));
    CHECK(cls[11].half_degree == R(5, 3));

    const auto c = basis_class(t, R(1, 3), 2);
    CHECK(c.flat == 13);
    CHECK(c.half_degree == R(5, 3) + 2);
    CHECK_THROWS_AS(basis_class(t, R(1, 3), 3), std::domain_error);
    CHECK_THROWS_AS(basis_class(t, R(1, 5), 0), std::domain_error);
}

TEST_CASE("pairing blocks of (1,2,2,3,3,3)") {
    const auto t = build_spectrum({1, 2, 2, 3, 3, 3});
    auto pair = [&](const Rational& g1, int d1, const Rational& g2, int d2) {
        return poincare_pairing(t, basis_class(t, g1, d1), basis_class(t, g2, d2));
    };
    for (int d = 0; d < 6; ++d) CHECK(pair(R(0), d, R(0), 5 - d) == R(1, 108));
    for (int d = 0; d < 3; ++d) CHECK(pair(R(1, 3), d, R(2, 3), 2 - d) == R(1, 27));
    for (int d = 0; d < 2; ++d) CHECK(pair(R(1, 2), d, R(1, 2), 1 - d) == R(1, 4));
    CHECK(pair(R(0), 0, R(0), 0) == 0);          // wrong complementary power
    CHECK(pair(R(1, 3), 0, R(1, 3), 2) == 0);    // not inverse sectors
    CHECK(top_integral(t) == R(1, 108));
}

TEST_CASE("obstruction bundle of (1,2,2,3,3,3)") {
    const auto t = build_spectrum({1, 2, 2, 3, 3, 3});
    const auto b1 = obstruction_bundle(t, R(1, 3), R(1, 3), R(1, 3));
    CHECK(b1.J == std::vector<int>{1, 2});
    CHECK(b1.rank == 2);
    CHECK(b1.summand_weights == std::vector<long long>{2, 2});
    const auto b2 = obstruction_bundle(t, R(2, 3), R(2, 3), R(2, 3));
    CHECK(b2.J == std::vector<int>{0});
    CHECK(b2.rank == 1);
    CHECK(b2.summand_weights == std::vector<long long>{1});
    const auto b3 = obstruction_bundle(t, R(0), R(0), R(0));
    CHECK(b3.rank == 0);
    CHECK_THROWS_AS(obstruction_bundle(t, R(1, 3), R(1, 3), R(1, 2)),
                    std::domain_error);
    CHECK_THROWS_AS(obstruction_bundle(t, R(3, 2), R(1, 4), R(1, 4)),
                    std::domain_error);
}

TEST_CASE("triple tensor of (1,2,2,3,3,3)") {
    const auto t = build_spectrum({1, 2, 2, 3, 3, 3});
    auto trip = [&](Rational g0, int d0, Rational g1, int d1, Rational g2, int d2) {
        return triple_tensor(t, basis_class(t, g0, d0), basis_class(t, g1, d1),
                             basis_class(t, g2, d2));
    };
    CHECK(trip(R(1, 3), 0, R(1, 3), 0, R(1, 3), 0) == R(4, 27));
    CHECK(trip(R(1, 3), 1, R(1, 3), 1, R(1, 3), 1) == 0); // degree sum too high
    CHECK(trip(R(1, 3), 0, R(1, 3), 1, R(1, 3), 1) == 0); // 5/3+8/3+8/3 != 5
    // the balanced 1/3-triple: 5/3 * 3 + (0+0+0) needs powers summing via ages
    CHECK(trip(R(1, 3), 0, R(1, 3), 0, R(1, 3), 2) == 0); // 5/3+5/3+11/3 = 7
    CHECK(trip(R(0), 0, R(1, 2), 0, R(1, 2), 1) == R(1, 4));
    CHECK(trip(R(2, 3), 0, R(2, 3), 0, R(2, 3), 1) == R(1, 27));
    CHECK(trip(R(0), 0, R(0), 0, R(0), 5) == R(1, 108));
    CHECK(trip(R(0), 0, R(1, 3), 0, R(1, 2), 0) == 0); // gamma sum not integral
}

TEST_CASE("the balanced age-5 triple in the 1/3 sector") {
    // half-degrees 5/3 each sum to 5 = n with gamma sum 1
    const auto t = build_spectrum({1, 2, 2, 3, 3, 3});
    const auto c = basis_class(t, R(1, 3), 0);
    CHECK(c.half_degree == R(5, 3));
    CHECK(triple_tensor(t, c, c, c) == R(4, 27));
}

TEST_CASE("cup products of (1,2,2,3,3,3)") {
    const auto t = build_spectrum({1, 2, 2, 3, 3, 3});
    auto C = [&](Rational g0, int d0, Rational g1, int d1) {
        return cup(t, basis_class(t, g0, d0), basis_class(t, g1, d1));
    };
    // unit row
    for (int d = 0; d < 3; ++d) {
        const auto u = C(R(0), 0, R(1, 3), d);
        REQUIRE(!u.is_zero());
        CHECK(u.coeff == 1);
        CHECK(u.cls->gamma == R(1, 3));
        CHECK(u.cls->d == d);
    }
    // eta^1_0 shifts the power inside every sector
    for (int d = 0; d + 1 < 3; ++d) {
        const auto u = C(R(0), 1, R(2, 3), d);
        REQUIRE(!u.is_zero());
        CHECK(u.coeff == 1);
        CHECK(u.cls->d == d + 1);
    }
    {
        const auto u = C(R(0), 2, R(0), 2);
        REQUIRE(!u.is_zero());
        CHECK(u.coeff == 1);
        CHECK(u.cls->gamma == 0);
        CHECK(u.cls->d == 4);
    }
    {
        const auto u = C(R(1, 3), 0, R(1, 3), 0);
        REQUIRE(!u.is_zero());
        CHECK(u.coeff == 4);
        CHECK(u.cls->gamma == R(2, 3));
        CHECK(u.cls->d == 2);
    }
    for (int d = 0; d < 3; ++d) {
        const auto u = C(R(1, 3), 0, R(2, 3), d);
        REQUIRE(!u.is_zero());
        CHECK(u.coeff == 4);
        CHECK(u.cls->gamma == 0);
        CHECK(u.cls->d == 3 + d);
    }
    {
        const auto u = C(R(1, 2), 0, R(1, 2), 0);
        REQUIRE(!u.is_zero());
        CHECK(u.coeff == 27);
        CHECK(u.cls->gamma == 0);
        CHECK(u.cls->d == 4);
    }
    {
        const auto u = C(R(1, 2), 0, R(1, 2), 1);
        REQUIRE(!u.is_zero());
        CHECK(u.coeff == 27);
        CHECK(u.cls->d == 5);
    }
    {
        const auto u = C(R(2, 3), 0, R(2, 3), 0);
        REQUIRE(!u.is_zero());
        CHECK(u.coeff == 1);
        CHECK(u.cls->gamma == R(1, 3));
        CHECK(u.cls->d == 1);
    }
    CHECK(C(R(1, 3), 0, R(1, 2), 0).is_zero()); // 5/6 is not spectral
    CHECK(C(R(0), 2, R(1, 2), 0).is_zero());    // power overflows the sector
}

TEST_CASE("cup products of (1,2)") {
    const auto t = build_spectrum({1, 2});
    const auto u = cup(t, basis_class(t, R(1, 2), 0), basis_class(t, R(1, 2), 0));
    REQUIRE(!u.is_zero());
    CHECK(u.coeff == 1);
    CHECK(u.cls->gamma == 0);
    CHECK(u.cls->d == 1);
    CHECK(cup(t, basis_class(t, R(0), 1), basis_class(t, R(1, 2), 0)).is_zero());
}

TEST_CASE("degree-constrained three-point values") {
    const auto t = build_spectrum({1, 2, 2, 3, 3, 3});
    CHECK(gw_degree(t, 5, 13) == R(1, 3));
    CHECK(gw_degree_effective(t, 5, 13));
    {
        const auto gv = gw_three_point(t, 5, 13);
        REQUIRE(gv.value.has_value());
        CHECK(*gv.value == R(1, 2916));
        CHECK(gv.status == GwStatus::quantum_conjecture);
    }
    {
        const auto gv = gw_three_point(t, 4, 0);
        REQUIRE(gv.value.has_value());
        CHECK(*gv.value == R(1, 108));
        CHECK(gv.status == GwStatus::classical);
    }

    const auto p2 = build_spectrum({1, 1, 1});
    CHECK(gw_three_point(p2, 2, 2).status == GwStatus::quantum_theorem);
    CHECK(*gw_three_point(p2, 2, 2).value == 1);
    CHECK(gw_three_point(p2, 0, 1).status == GwStatus::classical);
    CHECK(*gw_three_point(p2, 0, 1).value == 1);
    CHECK(gw_three_point(p2, 0, 0).status == GwStatus::zero);
    CHECK(*gw_three_point(p2, 0, 0).value == 0);

    const auto t12 = build_spectrum({1, 2});
    CHECK(*gw_three_point(t12, 0, 0).value == R(1, 2));
    CHECK(gw_three_point(t12, 0, 0).status == GwStatus::classical);
    CHECK(*gw_three_point(t12, 1, 2).value == R(1, 4));
    CHECK(*gw_three_point(t12, 2, 1).value == R(1, 4));
    CHECK(gw_three_point(t12, 1, 2).status == GwStatus::quantum_conjecture);

    const auto t24 = build_spectrum({2, 4});
    CHECK(*gw_three_point(t24, 0, 0).value == R(1, 8));
    CHECK(gw_three_point(t24, 0, 0).status == GwStatus::classical);
    CHECK(gw_three_point(t24, 0, 1).status == GwStatus::unsupported);
    CHECK(!gw_three_point(t24, 0, 1).value.has_value());
}

TEST_CASE("Euler multiplication matrices") {
    {
        const auto t = build_spectrum({1, 2});
        const auto am = a_matrices(t);
        CHECK(am.coprime);
        CHECK(am.a0[1][0] == 3);
        CHECK(am.a0[2][1] == R(3, 2));
        CHECK(am.a0[0][2] == R(3, 2));
        CHECK(am.a0[0][0] == 0);
        CHECK(am.cycle_status[0] == GwStatus::classical);
        CHECK(am.cycle_status[1] == GwStatus::quantum_conjecture);
        CHECK(am.cycle_status[2] == GwStatus::quantum_conjecture);
        CHECK(am.unsupported_offcycle.empty());
        CHECK(am.a_inf[2][2] == R(1, 2));
    }
    {
        const auto t = build_spectrum({1, 1, 1});
        const auto am = a_matrices(t);
        for (int j = 0; j < 3; ++j) CHECK(am.a0[(j + 1) % 3][j] == 3);
        CHECK(am.cycle_status[2] == GwStatus::quantum_theorem);
    }
    {
        const auto t = build_spectrum({1, 2, 2, 3, 3, 3});
        const auto am = a_matrices(t);
        CHECK_FALSE(am.coprime);
        CHECK(am.unsupported_offcycle.size() == 14 * 13);
        CHECK(am.a0[6][5] == R(7, 54));
        CHECK(am.a0[9][8] == R(14, 27));
        CHECK(am.a0[11][10] == R(7, 2));
        CHECK(am.a0[0][13] == R(14, 27));
        CHECK(am.a0[1][0] == 14);
        CHECK(am.a0[5][4] == 14);
        CHECK(am.cycle_status[4] == GwStatus::classical);
        CHECK(am.cycle_status[5] == GwStatus::quantum_conjecture);
        CHECK(am.cycle_status[10] == GwStatus::quantum_conjecture);
    }
}

TEST_CASE("ring axioms hold on sample spaces") {
    for (const auto& w : std::vector<std::vector<long long>>{
             {1}, {2}, {1, 1}, {1, 2}, {2, 4}, {1, 1, 1}, {1, 2, 3}, {2, 2, 2},
             {1, 2, 2, 3, 3, 3}}) {
        const auto t = build_spectrum(w);
        const auto checks = verify_aside_axioms(t);
        for (const auto& c : checks) {
            INFO(c.name << " on weight vector with mu=" << t.mu() << " witness "
                        << c.witness);
            CHECK(c.pass);
        }
    }
}
