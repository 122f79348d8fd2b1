#include "exactmath.hpp"

#include <doctest.h>

using namespace csurg;

namespace {
std::vector<BigInt> big(std::initializer_list<long long> xs) {
    std::vector<BigInt> v;
    for (auto x : xs) v.emplace_back(x);
    return v;
}
}  // namespace

TEST_CASE("rational normal form and parsing") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(4).str() == "4/1");
    CHECK(Rational(4).pretty() == "4");
    CHECK(Rational::parse("-7/4") == Rational(-7, 4));
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational(0, 5).str() == "0/1");
    CHECK(Rational(-7, 4).floor() == -2);
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational::parse("1/x"));
}

TEST_CASE("floor division and modulus") {
    CHECK(floor_div(BigInt(-7), BigInt(2)) == -4);
    CHECK(mod_floor(BigInt(-1), BigInt(7)) == 6);
    CHECK(big_gcd(BigInt(-12), BigInt(18)) == 6);
}

TEST_CASE("negative continued fractions") {
    CHECK(negcf(Rational(-11, 9)) == big({-3, -2, -2, -2, -3}));
    CHECK(negcf_display(Rational(-11, 9)) == big({-2, -2, -2, -2, -3}));
    CHECK(negcf(Rational(-1)) == big({-2}));
    CHECK(negcf(Rational(-1, 2)) == big({-2, -2}));
    for (long long p = -40; p <= -1; ++p)
        for (long long q = 1; q <= 12; ++q) CHECK(negcf_value(negcf(Rational(p, q))) == Rational(p, q));
}

TEST_CASE("smith normal form") {
    CHECK(snf(make_int_matrix({{-7}})).factors() == big({7}));
    auto a = make_int_matrix({{2, 4}, {6, 8}});
    auto r = snf(a);
    CHECK(r.factors() == big({2, 4}));
    CHECK(multiply(multiply(r.U, a), r.V) == r.S);
    CHECK(snf(make_int_matrix({{1, 2}, {2, 4}})).factors() == big({1, 0}));
}

TEST_CASE("determinant") {
    CHECK(determinant(make_int_matrix({{-3, -4}, {-4, -5}})) == -1);
    CHECK(determinant(make_int_matrix({{2, 0, 0}, {0, 3, 0}, {1, 1, 5}})) == 30);
}

TEST_CASE("rational and integer solves") {
    auto x = solve_rational(make_int_matrix({{2, 1}, {1, 3}}), big({3, 5}));
    REQUIRE(x);
    CHECK((*x)[0] == Rational(4, 5));
    CHECK((*x)[1] == Rational(7, 5));
    CHECK_FALSE(solve_rational(make_int_matrix({{1, 1}, {1, 1}}), big({1, 2})));
    CHECK_FALSE(solve_integer(make_int_matrix({{2, 1}, {1, 3}}), big({3, 5})));
    auto y = solve_integer(make_int_matrix({{2, 0}, {0, 3}}), big({4, -9}));
    REQUIRE(y);
    CHECK(*y == big({2, -3}));
}

TEST_CASE("signatures") {
    RatMatrix d{{Rational(2), Rational(0)}, {Rational(0), Rational(-3)}};
    CHECK(signature_congruence(d) == SignatureTriple{1, 1, 0});
    RatMatrix h{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    CHECK(signature_congruence(h) == SignatureTriple{1, 1, 0});
    RatMatrix s{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}};
    CHECK(signature_congruence(s) == SignatureTriple{1, 0, 1});
}
