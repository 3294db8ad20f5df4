#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbimirror/spectrum.hpp"

using namespace orbimirror;

namespace {
Rational R(long long p, long long q = 1) { return Rational(p, q); }
}

TEST_CASE("weights validation") {
    CHECK_THROWS_AS(make_weights({}), std::invalid_argument);
    CHECK_THROWS_AS(make_weights({1, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(make_weights({-3}), std::invalid_argument);
    const Weights w = make_weights({1, 2, 2, 3, 3, 3});
    CHECK(w.n == 5);
    CHECK(w.mu == 14);
    CHECK(w.gcd_w == 1);
    CHECK(w.lcm_w == 6);
}

TEST_CASE("spectrum of (1,2)") {
    const auto t = build_spectrum({1, 2});
    CHECK(t.mu() == 3);
    CHECK(t.s(0) == 0);
    CHECK(t.s(1) == 0);
    CHECK(t.s(2) == R(1, 2));
    CHECK(t.sigma(0) == 0);
    CHECK(t.sigma(1) == 1);
    CHECK(t.sigma(2) == R(1, 2));
    // a-sequence (0,0),(1,0),(1,1),(1,2),(2,2); recursion picks (0,1,1,0,...)
    CHECK(t.a(0) == std::vector<long long>{0, 0});
    CHECK(t.a(1) == std::vector<long long>{1, 0});
    CHECK(t.a(2) == std::vector<long long>{1, 1});
    CHECK(t.a(3) == std::vector<long long>{1, 2});
    CHECK(t.a(4) == std::vector<long long>{2, 2});
    CHECK(t.recursion_index(0) == 0);
    CHECK(t.recursion_index(1) == 1);
    CHECK(t.recursion_index(2) == 1);
}

TEST_CASE("spectrum of (1,2,2,3,3,3)") {
    const auto t = build_spectrum({1, 2, 2, 3, 3, 3});
    CHECK(t.mu() == 14);
    CHECK(t.sector_count() == 4);
    const Rational expected_sigma[] = {R(0), R(1), R(2), R(3), R(4),  R(5),    R(4, 3),
                                       R(7, 3), R(10, 3), R(2), R(3), R(5, 3), R(8, 3), R(11, 3)};
    for (int i = 0; i < 14; ++i) CHECK(t.sigma(i) == expected_sigma[i]);

    const auto& s0 = t.sector_data(0);
    CHECK(s0.gamma == 0);
    CHECK(s0.delta == 6);
    CHECK(s0.age == 0);
    CHECK(s0.kmin == 0);
    CHECK(s0.kmax == 5);
    CHECK(s0.prod_I == 108);

    const int third = t.sector_id(R(1, 3));
    REQUIRE(third >= 0);
    const auto& s13 = t.sector_data(third);
    CHECK(s13.I == std::vector<int>{3, 4, 5});
    CHECK(s13.delta == 3);
    CHECK(s13.age == R(5, 3));
    CHECK(s13.kmin == 6);
    CHECK(s13.kmax == 8);
    CHECK(s13.prod_I == 27);

    const int half = t.sector_id(R(1, 2));
    const auto& s12 = t.sector_data(half);
    CHECK(s12.I == std::vector<int>{1, 2});
    CHECK(s12.delta == 2);
    CHECK(s12.age == 2);
    CHECK(s12.kmin == 9);
    CHECK(s12.kmax == 10);

    const int tt = t.sector_id(R(2, 3));
    const auto& s23 = t.sector_data(tt);
    CHECK(s23.delta == 3);
    CHECK(s23.age == R(4, 3));
    CHECK(s23.kmin == 11);
    CHECK(s23.kmax == 13);

    CHECK(t.a(6) == std::vector<long long>(6, 1));
    CHECK(t.sigma(6) == R(4, 3));
    CHECK(t.inv_sector(third) == tt);
    CHECK(t.compose_sector(third, half) == -1); // 1/3 + 1/2 = 5/6 not spectral

    CHECK(t.flat_class(6) == std::pair<Rational, int>{R(2, 3), 0});
    CHECK(t.flat_index(R(1, 3), 0) == 11);
    CHECK(t.flat_index(R(2, 3), 2) == 8);
    CHECK(t.J(third, third, third) == std::vector<int>{1, 2});
    CHECK(t.J(tt, tt, tt) == std::vector<int>{0});
}

TEST_CASE("point and pure-weight cases") {
    const auto p = build_spectrum({1});
    CHECK(p.mu() == 1);
    CHECK(p.sigma(0) == 0);
    CHECK(p.sequence_length() == 1);

    const auto t2 = build_spectrum({2});
    CHECK(t2.s(1) == R(1, 2));
    CHECK(t2.sigma(1) == 0);
    CHECK(t2.a(2) == std::vector<long long>{2});
}

TEST_CASE("sector() on arbitrary gamma") {
    const Weights w = make_weights({1, 2, 2, 3, 3, 3});
    const Sector s = sector(w, R(1, 3));
    CHECK(s.I == std::vector<int>{3, 4, 5});
    CHECK(s.delta == 3);
    CHECK(s.age == R(5, 3));
    const Sector off = sector(w, R(1, 5)); // not spectral
    CHECK(off.delta == 0);
    CHECK(off.I.empty());
    const Sector zero = sector(w, 0);
    CHECK(zero.delta == 6);
    CHECK(zero.age == 0);
    CHECK_THROWS_AS(sector(w, R(3, 2)), std::domain_error);
    CHECK_THROWS_AS(sector(w, R(-1, 2)), std::domain_error);
}

TEST_CASE("identity suite on assorted vectors") {
    for (auto w : {std::vector<long long>{1}, {2}, {3}, {1, 1}, {1, 2}, {2, 4},
                   {1, 2, 3}, {2, 2, 2}, {1, 2, 2, 3, 3, 3}, {5, 7}, {2, 3, 5},
                   {6, 6, 6, 6}}) {
        const auto rep = verify_spectral_identities(make_weights(w));
        for (const auto& c : rep) {
            INFO(c.name << " " << c.witness);
            CHECK(c.pass);
        }
    }
}
