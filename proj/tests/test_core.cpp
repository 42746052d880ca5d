// Tests for exact arithmetic, counting helpers, and part-size profiles.
#include <catch2/catch_amalgamated.hpp>

#include <inducibility/inducibility.hpp>

#include <map>
#include <random>
#include <string>
#include <vector>

using namespace ind;

TEST_CASE("rationals canonicalize and print as fractions", "[core][rational]") {
    BigRational q(6, 8);
    CHECK(num(q) == 3);
    CHECK(den(q) == 4);
    CHECK(to_fraction_string(q) == "3/4");
    CHECK(to_fraction_string(BigRational(5)) == "5/1");
    CHECK(to_fraction_string(BigRational(0)) == "0/1");
    CHECK(to_fraction_string(BigRational(-6, 4)) == "-3/2");
    CHECK(to_double(BigRational(1, 4)) == 0.25);
}

TEST_CASE("parse_rational reads a/b and plain integers", "[core][rational]") {
    CHECK(parse_rational("3/4") == BigRational(3, 4));
    CHECK(parse_rational("10/27") == BigRational(10, 27));
    CHECK(parse_rational("7") == BigRational(7));
    CHECK(parse_rational("-2/6") == BigRational(-1, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), domain_error);
    CHECK_THROWS_AS(parse_rational("abc"), domain_error);
    CHECK_THROWS_AS(parse_rational(""), domain_error);
}

TEST_CASE("rational_from_double is exact on binary representables", "[core][rational]") {
    CHECK(rational_from_double(0.25) == BigRational(1, 4));
    CHECK(rational_from_double(0.5625) == BigRational(9, 16));
    CHECK(rational_from_double(-1.5) == BigRational(-3, 2));
    CHECK(rational_from_double(0.0) == BigRational(0));
    // 0.1 is not 1/10 in binary; conversion must reproduce the true bits.
    BigRational tenth = rational_from_double(0.1);
    CHECK(to_double(tenth) == 0.1);
    CHECK(tenth != BigRational(1, 10));
}

TEST_CASE("powers of rationals and integers", "[core][rational]") {
    CHECK(rational_pow(BigRational(2, 3), 3) == BigRational(8, 27));
    CHECK(rational_pow(BigRational(5, 7), 0) == BigRational(1));
    CHECK(rational_pow(BigRational(1, 2), 10) == BigRational(1, 1024));
    CHECK(int_pow(BigInt(3), 5) == 243);
    CHECK(int_pow(BigInt(10), 12) == BigInt("1000000000000"));
}

TEST_CASE("factorial, binomial, falling factorial", "[core][combinatorics]") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(12) == 479001600);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(10, 10) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(64, 32) == BigInt("1832624140942590534"));
    CHECK(falling_factorial(10, 3) == 720);
    CHECK(falling_factorial(5, 5) == 120);
    CHECK(falling_factorial(3, 5) == 0);  // runs through zero
    CHECK(falling_factorial(1000, 2) == 999000);
}

TEST_CASE("binomial satisfies Pascal's rule", "[core][combinatorics]") {
    for (int n = 1; n <= 20; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("profile multinomial and symmetry factor", "[core][combinatorics]") {
    CHECK(multinomial(PartiteProfile({2, 1, 1})) == 12);   // 4!/(2!1!1!)
    CHECK(multinomial(PartiteProfile({3, 1, 1})) == 20);   // 5!/(3!1!1!)
    CHECK(multinomial(PartiteProfile({2, 2, 1})) == 30);   // 5!/(2!2!1!)
    CHECK(multinomial(PartiteProfile({1, 1, 1})) == 6);
    CHECK(multinomial(PartiteProfile({4})) == 1);

    // pi_factor multiplies c! over the multiplicity c of each distinct size.
    CHECK(pi_factor(PartiteProfile({2, 1, 1})) == 2);   // 1! * 2!
    CHECK(pi_factor(PartiteProfile({2, 2, 2})) == 6);   // 3!
    CHECK(pi_factor(PartiteProfile({3, 2, 1})) == 1);
    CHECK(pi_factor(PartiteProfile({2, 2, 1, 1, 1})) == 12);  // 2! * 3!
}

TEST_CASE("generic limiting density r!/(r^r - r)", "[core][combinatorics]") {
    CHECK(generic_lower_bound(2) == BigRational(1));        // 2/(4-2)
    CHECK(generic_lower_bound(3) == BigRational(1, 4));     // 6/24
    CHECK(generic_lower_bound(4) == BigRational(2, 21));    // 24/252
    CHECK(generic_lower_bound(5) == BigRational(120, 3120));
    CHECK_THROWS_AS(generic_lower_bound(1), domain_error);
}

TEST_CASE("profiles sort part sizes descending", "[core][profile]") {
    PartiteProfile p({1, 3, 2});
    CHECK(p.sizes() == std::vector<int>{3, 2, 1});
    CHECK(p.r() == 3);
    CHECK(p.s() == 6);
    CHECK(p.size(0) == 3);
    CHECK(p.size(2) == 1);
    CHECK(p.to_string() == "3,2,1");
    CHECK(p == PartiteProfile({3, 2, 1}));
    CHECK(p != PartiteProfile({3, 3}));
}

TEST_CASE("profile parse accepts comma lists and rejects junk", "[core][profile]") {
    CHECK(PartiteProfile::parse("3,1,1") == PartiteProfile({3, 1, 1}));
    CHECK(PartiteProfile::parse("1,2") == PartiteProfile({2, 1}));
    CHECK(PartiteProfile::parse("7") == PartiteProfile({7}));
    CHECK_THROWS_AS(PartiteProfile::parse(""), domain_error);
    CHECK_THROWS_AS(PartiteProfile::parse("2,a"), domain_error);
    CHECK_THROWS_AS(PartiteProfile::parse("1.5"), domain_error);
    CHECK_THROWS_AS(PartiteProfile::parse("2,0"), domain_error);
    CHECK_THROWS_AS(PartiteProfile::parse("-1,2"), domain_error);
    CHECK_THROWS_AS(PartiteProfile::parse("2,,1"), domain_error);
}

TEST_CASE("profile multiplicities group equal sizes", "[core][profile]") {
    PartiteProfile p({2, 1, 1});
    std::map<int, int> m = p.multiplicities();
    REQUIRE(m.size() == 2);
    CHECK(m.at(2) == 1);
    CHECK(m.at(1) == 2);

    PartiteProfile q({3, 3, 3});
    std::map<int, int> mq = q.multiplicities();
    REQUIRE(mq.size() == 1);
    CHECK(mq.at(3) == 3);
}

TEST_CASE("profile rejects empty and non-positive parts", "[core][profile]") {
    CHECK_THROWS_AS(PartiteProfile(std::vector<int>{}), domain_error);
    CHECK_THROWS_AS(PartiteProfile({2, 0}), domain_error);
    CHECK_THROWS_AS(PartiteProfile({-3}), domain_error);
}

TEST_CASE("multinomial is divisible by the symmetry factor", "[core][property]") {
    // The quotient counts distinct ordered placements, so it must be integral.
    std::vector<std::vector<int>> profiles = {
        {2, 1, 1}, {2, 2, 1}, {3, 1, 1}, {2, 2, 2}, {3, 2, 2}, {4, 2, 1, 1}, {3, 3, 2}};
    for (const auto& sizes : profiles) {
        PartiteProfile p(sizes);
        CHECK(multinomial(p) % pi_factor(p) == 0);
    }
}
