#include <doctest.h>

#include "cohiggs/errors.hpp"
#include "cohiggs/field.hpp"

#include <random>

using namespace cohiggs;

TEST_CASE("rational parse and format") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4/2") == Rational(-2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(format_rational(Rational(3, 6)) == "1/2");
    CHECK(format_rational(Rational(-5)) == "-5");
    CHECK_THROWS_AS(parse_rational("1/0"), SchemaError);
    CHECK_THROWS_AS(parse_rational("x"), SchemaError);
    CHECK_THROWS_AS(parse_rational(""), SchemaError);
}

TEST_CASE("rational floor and sqrt") {
    CHECK(rational_floor(Rational(-3, 2)) == -2);
    CHECK(rational_floor(Rational(3, 2)) == 1);
    CHECK(rational_floor(Rational(-2)) == -2);
    CHECK(*rational_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK(!rational_sqrt(Rational(2)));
    CHECK(!rational_sqrt(Rational(-1)));
}

TEST_CASE("Gaussian rational arithmetic") {
    GaussQ i(Rational(0), Rational(1));
    CHECK(i * i == GaussQ(Rational(-1)));
    GaussQ z(Rational(3), Rational(-2));
    CHECK(z * z.inverse() == GaussQ(Rational(1)));
    CHECK((z + z.conj()).im == 0);
}

TEST_CASE("Gaussian square roots") {
    // (1+i)^2 = 2i
    auto s = GaussQ::sqrt(GaussQ(Rational(0), Rational(2)));
    REQUIRE(s);
    CHECK(*s * *s == GaussQ(Rational(0), Rational(2)));
    CHECK(GaussQ::sqrt(GaussQ(Rational(4))));
    CHECK(GaussQ::sqrt(GaussQ(Rational(-9))));  // = 3i
    CHECK(!GaussQ::sqrt(GaussQ(Rational(2))));
    CHECK(!GaussQ::sqrt(GaussQ(Rational(1), Rational(1))));

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int n = 0; n < 300; ++n) {
        GaussQ w(Rational(d(rng), 1 + std::abs(d(rng))), Rational(d(rng), 1 + std::abs(d(rng))));
        GaussQ sq = w * w;
        auto r = GaussQ::sqrt(sq);
        REQUIRE(r);
        CHECK(*r * *r == sq);
    }
}

TEST_CASE("tower arithmetic with t^2 = theta") {
    GaussQ theta(Rational(2));  // sqrt(2) is not in Q(i)
    TowerElem t = TowerElem::root(theta);
    CHECK((t * t) == TowerElem(theta));
    TowerElem x = TowerElem(GaussQ(Rational(1))) + t;  // 1 + t
    TowerElem y = x * x;                               // 3 + 2t
    CHECK(y == TowerElem::make(GaussQ(Rational(3)), GaussQ(Rational(2)), theta));
    CHECK(x * x.inverse() == TowerElem(GaussQ(Rational(1))));
    // t - t collapses back into the base field
    CHECK((t - t).in_base());

    TowerElem other = TowerElem::root(GaussQ(Rational(3)));
    CHECK_THROWS_AS((void)(t + other), DomainError);
    CHECK_NOTHROW((void)(t + TowerElem(GaussQ(Rational(5)))));
}

TEST_CASE("matrix inverse and conjugation") {
    Mat2 p = Mat2::from_gauss(GaussQ(Rational(1)), GaussQ(Rational(2)),
                              GaussQ(Rational(0), Rational(1)), GaussQ(Rational(1)));
    CHECK(p * p.inverse() == Mat2::identity());
    Mat2 a = Mat2::from_gauss(GaussQ(Rational(1)), GaussQ(Rational(0)), GaussQ(Rational(0)),
                              GaussQ(Rational(-1)));
    Mat2 c = conjugate(p, a);
    CHECK(c.trace().is_zero());
    CHECK(c.det() == a.det());
}

TEST_CASE("homogeneous polynomial products") {
    // x * y = xy
    HomPoly x = HomPoly::of(1, {GaussQ(Rational(1)), GaussQ()});
    HomPoly y = HomPoly::of(1, {GaussQ(), GaussQ(Rational(1))});
    HomPoly xy = x * y;
    CHECK(xy.deg == 2);
    CHECK(xy.coeffs[1] == GaussQ(Rational(1)));
    CHECK((x * y - y * x).is_zero());
    CHECK_THROWS_AS((void)(x + xy), DomainError);
    CHECK((x - x).is_zero());
}
