#include <doctest.h>

#include "subcf/unimodular.hpp"

#include "test_support.hpp"

using namespace subcf;
using testsupport::make_rng;
using testsupport::random_int;
using testsupport::random_long;
using testsupport::random_prefix;
using testsupport::random_rational;

namespace {

// Entrywise 2x2 product, written out independently of Unimodular::operator*.
Unimodular mul_oracle(const Unimodular& x, const Unimodular& y) {
    Unimodular r;
    r.a = x.a * y.a + x.b * y.c;
    r.b = x.a * y.b + x.b * y.d;
    r.c = x.c * y.a + x.d * y.c;
    r.d = x.c * y.b + x.d * y.d;
    return r;
}

// Random determinant +-1 matrix as a product of generator steps.
Unimodular random_unimodular(std::mt19937_64& rng) {
    Unimodular g = Unimodular::identity();
    int factors = static_cast<int>(random_long(rng, 1, 6));
    for (int i = 0; i < factors; ++i) {
        switch (random_long(rng, 0, 2)) {
        case 0: g = g * sub_step(random_int(rng, -9, 9)); break;
        case 1: g = g * add_step(random_int(rng, -9, 9)); break;
        default: g = g * bridge(); break;
        }
    }
    return g;
}

}  // namespace

TEST_CASE("sub_step basics") {
    CHECK(sub_step(2) == Unimodular{2, -1, 1, 0});
    CHECK(sub_step(0) == Unimodular{0, -1, 1, 0});
    CHECK(sub_step(0).det() == 1);
    Unimodular prod = sub_step(4) * sub_step(2);
    CHECK(prod == Unimodular{7, -4, 2, -1});
    CHECK(prod == mul_oracle(sub_step(4), sub_step(2)));
    CHECK(sub_step(1) * sub_step(3) == Unimodular{2, -1, 3, -1});
}

TEST_CASE("add_step basics") {
    CHECK(add_step(3) == Unimodular{3, 1, 1, 0});
    CHECK(add_step(0) == Unimodular{0, 1, 1, 0});
    CHECK(add_step(3).det() == -1);
    CHECK(add_step(1) * add_step(1) == Unimodular{2, 1, 1, 1});
    CHECK(add_step(3) * add_step(7) == Unimodular{22, 3, 7, 1});
    CHECK(add_step(3) * add_step(7) == mul_oracle(add_step(3), add_step(7)));
}

TEST_CASE("bridge relations") {
    CHECK(bridge() * bridge() == Unimodular::identity());
    CHECK(add_step(5) * bridge() == sub_step(6));
    CHECK(bridge() * sub_step(2) == add_step(1) * sub_step(1));
    CHECK(bridge().det() == -1);
}

TEST_CASE("two_run closed form") {
    CHECK(two_run(0) == Unimodular::identity());
    CHECK(two_run(6) == Unimodular{7, -6, 6, -5});
    CHECK(two_run(-1) == Unimodular{0, 1, -1, 2});
    CHECK(two_run(-1) * sub_step(2) == Unimodular::identity());
    CHECK(two_run(-1) == sub_step(2).inverse());

    Unimodular by_products = Unimodular::identity();
    for (int k = 1; k <= 12; ++k) {
        by_products = by_products * sub_step(2);
        CHECK(two_run(k) == by_products);
    }
}

TEST_CASE("two_run additivity") {
    for (long j = -20; j <= 20; ++j)
        for (long k = -20; k <= 20; ++k)
            CHECK(two_run(j) * two_run(k) == two_run(j + k));
}

TEST_CASE("mobius action examples") {
    CHECK(Unimodular::identity()(Rational(5, 3)) == ExtendedRational(Rational(5, 3)));
    CHECK(sub_step(1)(Rational(2)) == ExtendedRational(Rational(1, 2)));
    Unimodular g{2, -1, 3, -1};
    CHECK(g(ExtendedRational::infinity()) == ExtendedRational(Rational(2, 3)));
    // pole of g: x = d/(-c)... the denominator 3x - 1 vanishes at 1/3
    CHECK(g(Rational(1, 3)).is_infinity());
    // c == 0 keeps infinity at infinity
    Unimodular upper{1, 5, 0, 1};
    CHECK(upper(ExtendedRational::infinity()).is_infinity());
}

TEST_CASE("matrix inverse") {
    CHECK(Unimodular::identity().inverse() == Unimodular::identity());
    CHECK(sub_step(2).inverse() == two_run(-1));
    CHECK(bridge().inverse() == bridge());
    CHECK_THROWS_AS((Unimodular{2, 0, 0, 2}.inverse()), DomainError);

    auto rng = make_rng(0xc0a1);
    for (int i = 0; i < 200; ++i) {
        Unimodular g = random_unimodular(rng);
        CHECK(g * g.inverse() == Unimodular::identity());
        CHECK(g.inverse() * g == Unimodular::identity());
    }
}

TEST_CASE("determinant signs") {
    for (long m = -30; m <= 30; ++m) {
        CHECK(sub_step(m).det() == 1);
        CHECK(add_step(m).det() == -1);
    }
}

TEST_CASE("step identities on sampled arguments") {
    auto rng = make_rng(0x1de7);
    for (int i = 0; i < 300; ++i) {
        Integer x = random_int(rng, -40, 40);
        Integer y = random_int(rng, -40, 40);
        CHECK(add_step(x) * add_step(0) * add_step(y) == add_step(x + y));
        CHECK(add_step(x) * add_step(y) == sub_step(x + 1) * add_step(1) * add_step(y - 1));
        CHECK(sub_step(x) * sub_step(y) == add_step(x - 1) * add_step(1) * sub_step(y - 1));
        CHECK(add_step(x) * bridge() == sub_step(x + 1));
        CHECK(bridge() * add_step(x) == add_step(1) * add_step(x - 1));
        CHECK(bridge() * sub_step(x) == add_step(1) * sub_step(x - 1));
    }
}

TEST_CASE("monotone bounds of the Mobius action") {
    // For det +1 matrices with c > 0, c+d > 0 (every convergent matrix is
    // one), g is strictly increasing on t >= 1 and squeezed between its
    // two boundary values with gap exactly 1/((c+d)c).
    auto rng = make_rng(0x9b0b);
    for (int i = 0; i < 300; ++i) {
        Unimodular g = Unimodular::identity();
        for (const Integer& q : random_prefix(rng, 8)) g = g * sub_step(q);
        REQUIRE(g.det() == 1);
        REQUIRE(g.c > 0);
        REQUIRE(g.c + g.d > 0);

        Rational t1 = Rational(1) + Rational(random_int(rng, 0, 50), random_int(rng, 1, 20));
        Rational t2 = t1 + Rational(random_int(rng, 1, 60), random_int(rng, 1, 60));
        Rational top = Rational::from_coprime(g.a, g.c);
        Rational bottom = Rational(g.a + g.b, g.c + g.d);
        Rational gap = Rational(1, (g.c + g.d) * g.c);

        Rational g1 = g(t1).value();
        Rational g2 = g(t2).value();
        CHECK(g1 < g2);
        for (const Rational& t : {t1, t2}) {
            Rational gt = g(t).value();
            CHECK(top - gt > Rational(0));
            CHECK(top - gt <= gap);
            CHECK(gt - bottom >= Rational(0));
            CHECK(gt - bottom < gap);
        }
    }
}

TEST_CASE("mobius action composes through products") {
    auto rng = make_rng(0x90e5);
    for (int i = 0; i < 400; ++i) {
        Unimodular g = random_unimodular(rng);
        Unimodular h = random_unimodular(rng);
        ExtendedRational x = random_long(rng, 0, 7) == 0
                                 ? ExtendedRational::infinity()
                                 : ExtendedRational(random_rational(rng, 30, 30));
        CHECK((g * h)(x) == g(h(x)));
    }
    // and straight through a pole: sub_step(0) sends 0 to infinity
    Unimodular g{5, -1, 1, 0};
    Unimodular h = sub_step(0);
    CHECK(h(Rational(0)).is_infinity());
    CHECK((g * h)(Rational(0)) == g(h(Rational(0))));
}
