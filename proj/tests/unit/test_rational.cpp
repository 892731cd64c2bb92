#include "doctest.h"

#include "purelocus/eps_rational.hpp"
#include "purelocus/rational.hpp"

#include <numeric>
#include <random>

using namespace purelocus;

namespace {

std::mt19937 rng(20240811);

Rational random_rational() {
    std::uniform_int_distribution<int> num(-60, 60);
    std::uniform_int_distribution<int> den(1, 60);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

EpsRational random_eps() { return EpsRational(random_rational(), random_rational()); }

}  // namespace

TEST_CASE("rat_ceil on the stated examples") {
    CHECK(rat_ceil(Rational(7, 3)) == 3);
    CHECK(rat_ceil(Rational(-1, 2)) == 0);
    CHECK(rat_ceil(Rational(2, 1)) == 2);
}

TEST_CASE("rat_ceil bounds the value: ceil - 1 < x <= ceil") {
    for (int i = 0; i < 500; ++i) {
        const Rational x = random_rational();
        const Rational c(rat_ceil(x));
        CHECK(c - Rational(1) < x);
        CHECK(x <= c);
    }
}

TEST_CASE("floor pairs with ceil") {
    for (int i = 0; i < 200; ++i) {
        const Rational x = random_rational();
        if (x.is_integer())
            CHECK(x.floor() == x.ceil());
        else
            CHECK(x.floor() + 1 == x.ceil());
    }
}

TEST_CASE("rat_is_integer") {
    CHECK(rat_is_integer(Rational(4, 2)));  // stored reduced as 2/1
    CHECK_FALSE(rat_is_integer(Rational(1, 2)));
    CHECK(rat_is_integer(Rational(0, 1)));
}

TEST_CASE("values are always stored reduced with positive denominator") {
    CHECK(Rational(4, 2).numerator() == 2);
    CHECK(Rational(4, 2).denominator() == 1);
    CHECK(Rational(3, -6).numerator() == -1);
    CHECK(Rational(3, -6).denominator() == 2);
    CHECK(Rational(-2, -4).numerator() == 1);

    for (int i = 0; i < 500; ++i) {
        const Rational a = random_rational(), b = random_rational();
        for (const Rational& x : {a + b, a - b, a * b}) {
            CHECK(x.denominator() >= 1);
            Integer g = boost::multiprecision::gcd(boost::multiprecision::abs(x.numerator()),
                                                   x.denominator());
            if (x.numerator() == 0)
                CHECK(x.denominator() == 1);
            else
                CHECK(g == 1);
        }
    }
}

TEST_CASE("rational arithmetic identities") {
    for (int i = 0; i < 300; ++i) {
        const Rational a = random_rational(), b = random_rational(), c = random_rational();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
    }
}

TEST_CASE("rational construction and division errors") {
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
}

TEST_CASE("rational parse and print round-trip") {
    CHECK(Rational::parse("7/3") == Rational(7, 3));
    CHECK(Rational::parse("-1/2") == Rational(-1, 2));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse(" 4/2 ") == Rational(2));
    CHECK(Rational(7, 3).str() == "7/3");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational(2).str() == "2");

    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);

    for (int i = 0; i < 200; ++i) {
        const Rational x = random_rational();
        CHECK(Rational::parse(x.str()) == x);
    }
}

TEST_CASE("eps_compare on the stated examples") {
    CHECK(eps_compare(EpsRational(1, 1), EpsRational(1, 0)) > 0);
    CHECK(eps_compare(EpsRational(1, -7), EpsRational(1, 1)) < 0);
    CHECK(eps_compare(EpsRational(Rational(1, 2), 3), EpsRational(1, 0)) < 0);
}

TEST_CASE("eps ordering is total: trichotomy, antisymmetry, transitivity") {
    for (int i = 0; i < 300; ++i) {
        const EpsRational a = random_eps(), b = random_eps(), c = random_eps();
        const int lt = a < b, eq = a == b, gt = b < a;
        CHECK(lt + eq + gt == 1);
        if (a < b) CHECK_FALSE(b < a);
        if (a < b && b < c) CHECK(a < c);
    }
}

TEST_CASE("eps arithmetic acts componentwise") {
    const EpsRational a(Rational(1, 2), Rational(3)), b(Rational(1, 3), Rational(-1));
    CHECK((a + b).base == Rational(5, 6));
    CHECK((a + b).eps == Rational(2));
    CHECK((a - b).base == Rational(1, 6));
    CHECK((a - b).eps == Rational(4));
}

TEST_CASE("eps parse and print") {
    CHECK(EpsRational::parse("1/7+e") == EpsRational(Rational(1, 7), 1));
    CHECK(EpsRational::parse("1-7e") == EpsRational(Rational(1), -7));
    CHECK(EpsRational::parse("1/2") == EpsRational(Rational(1, 2)));
    CHECK(EpsRational::parse("2/3+1/5e") == EpsRational(Rational(2, 3), Rational(1, 5)));
    CHECK(EpsRational::parse("-1/2-3e") == EpsRational(Rational(-1, 2), -3));
    CHECK(EpsRational::parse("1 - (7)e") == EpsRational(Rational(1), -7));

    CHECK(EpsRational(Rational(1, 7), 1).str() == "1/7 + (1)e");
    CHECK(EpsRational(Rational(1), -7).str() == "1 - (7)e");
    CHECK(EpsRational(Rational(2, 5)).str() == "2/5");

    CHECK_THROWS_AS(EpsRational::parse("e"), std::invalid_argument);
    CHECK_THROWS_AS(EpsRational::parse("1/2+"), std::invalid_argument);

    for (int i = 0; i < 200; ++i) {
        const EpsRational x = random_eps();
        CHECK(EpsRational::parse(x.str()) == x);
    }
}
