#include <doctest.h>

#include <cmath>

#include "rotinv/sqrt_rational.hpp"

using rotinv::SqrtRational;

TEST_CASE("construction and basic queries") {
    CHECK(SqrtRational::zero().is_zero());
    CHECK(SqrtRational::zero().sign() == 0);
    CHECK(SqrtRational::zero().radicand() == 0);

    const auto half = SqrtRational::of_rational(mpq_class(1, 2));
    CHECK(half.sign() == 1);
    CHECK(half.radicand() == mpq_class(1, 4));

    const auto minus_two_thirds = SqrtRational::of_rational(mpq_class(-2, 3));
    CHECK(minus_two_thirds.sign() == -1);
    CHECK(minus_two_thirds.radicand() == mpq_class(4, 9));

    // radicand is stored in lowest terms
    const auto reducible = SqrtRational::sqrt_of(mpq_class(6, 8));
    CHECK(reducible.radicand() == mpq_class(3, 4));

    CHECK_THROWS_AS(SqrtRational::sqrt_of(mpq_class(-1, 2)), std::domain_error);
    CHECK(SqrtRational::signed_sqrt(0, mpq_class(5)).is_zero());
    CHECK(SqrtRational::signed_sqrt(-3, mpq_class(5)).sign() == -1);
    CHECK(SqrtRational::signed_sqrt(1, mpq_class(0)).is_zero());
}

TEST_CASE("multiplication and division are exact") {
    const auto a = SqrtRational::sqrt_of(mpq_class(1, 2));
    const auto b = SqrtRational::sqrt_of(mpq_class(2));
    CHECK(a * b == SqrtRational::one());

    const auto c = SqrtRational::signed_sqrt(-1, mpq_class(3, 5));
    CHECK((c * c).as_rational() == mpq_class(3, 5));
    CHECK((c / c) == SqrtRational::one());
    CHECK((-c).sign() == 1);

    CHECK((a * SqrtRational::zero()).is_zero());
    CHECK_THROWS_AS(a / SqrtRational::zero(), std::domain_error);
}

TEST_CASE("product of rationals stays rational") {
    for (int an = -4; an <= 4; ++an)
        for (int ad = 1; ad <= 3; ++ad)
            for (int bn = -3; bn <= 3; ++bn)
                for (int bd = 1; bd <= 3; ++bd) {
                    mpq_class qa(an, ad), qb(bn, bd);
                    qa.canonicalize();
                    qb.canonicalize();
                    const auto prod =
                        SqrtRational::of_rational(qa) * SqrtRational::of_rational(qb);
                    CHECK(prod == SqrtRational::of_rational(qa * qb));
                    REQUIRE(prod.as_rational().has_value());
                    CHECK(*prod.as_rational() == qa * qb);
                }
}

TEST_CASE("ratio detects commensurable surds") {
    const auto a = SqrtRational::sqrt_of(mpq_class(9, 2));
    const auto b = SqrtRational::sqrt_of(mpq_class(1, 2));
    REQUIRE(a.ratio(b).has_value());
    CHECK(*a.ratio(b) == 3);

    const auto c = SqrtRational::signed_sqrt(-1, mpq_class(2));
    REQUIRE(c.ratio(b).has_value());
    CHECK(*c.ratio(b) == -2);

    CHECK_FALSE(SqrtRational::sqrt_of(mpq_class(3)).ratio(b).has_value());
    CHECK_FALSE(a.ratio(SqrtRational::zero()).has_value());
    CHECK(SqrtRational::zero().ratio(b) == mpq_class(0));
}

TEST_CASE("string and double rendering") {
    CHECK(SqrtRational::zero().str() == "0");
    CHECK(SqrtRational::one().str() == "1");
    CHECK(SqrtRational::of_rational(mpq_class(-1, 2)).str() == "-1/2");
    CHECK(SqrtRational::sqrt_of(mpq_class(1, 2)).str() == "sqrt(1/2)");
    CHECK(SqrtRational::signed_sqrt(-1, mpq_class(2)).str() == "-sqrt(2)");

    CHECK(SqrtRational::sqrt_of(mpq_class(1, 2)).to_double() ==
          doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(SqrtRational::of_rational(mpq_class(-3, 4)).to_double() ==
          doctest::Approx(-0.75).epsilon(1e-15));
}
