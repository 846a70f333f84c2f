#include "iesat/dyadic.hpp"

#include <doctest.h>

using namespace iesat;

TEST_CASE("factories and basic accessors") {
    const Dyadic z = Dyadic::zero(5);
    CHECK(z.is_zero());
    CHECK(z.numerator() == 0);
    CHECK(z.exponent() == 5);

    const Dyadic one = Dyadic::one(3);
    CHECK(one.numerator() == 8);
    CHECK(one.compare_to_one() == 0);

    const Dyadic eighth = Dyadic::pow2_inverse(3, 4); // 1/8 as 2/16
    CHECK(eighth.numerator() == 2);
    CHECK(eighth.exponent() == 4);

    CHECK(Dyadic().is_zero());
    CHECK_FALSE(Dyadic(BigInt(-1), 2).is_zero());
    CHECK(Dyadic(BigInt(-1), 2).is_negative());
}

TEST_CASE("compare_to_one is the sign of value minus one") {
    CHECK(Dyadic(BigInt(3), 2).compare_to_one() < 0);  // 3/4
    CHECK(Dyadic(BigInt(4), 2).compare_to_one() == 0); // 1
    CHECK(Dyadic(BigInt(5), 2).compare_to_one() > 0);  // 5/4
    CHECK(Dyadic::zero(10).compare_to_one() < 0);
    CHECK(Dyadic(BigInt(-7), 3).compare_to_one() < 0);
}

TEST_CASE("addition and subtraction align exponents to the larger") {
    Dyadic a = Dyadic::pow2_inverse(1, 1); // 1/2 at exp 1
    a += Dyadic::pow2_inverse(2, 4);       // + 1/4 at exp 4
    CHECK(a.exponent() == 4);
    CHECK(a.numerator() == 12); // 3/4

    a -= Dyadic::pow2_inverse(1, 2); // - 1/2
    CHECK(a.numerator() == 4);       // 1/4

    a -= Dyadic::one(0);
    CHECK(a.is_negative());
    CHECK(a == Dyadic(BigInt(-3), 2)); // -3/4
}

TEST_CASE("value comparisons ignore representation") {
    const Dyadic half_lo = Dyadic::pow2_inverse(1, 1);
    const Dyadic half_hi = Dyadic(BigInt(32), 6);
    CHECK(half_lo == half_hi);
    CHECK_FALSE(half_lo < half_hi);

    CHECK(Dyadic(BigInt(1), 2) < Dyadic(BigInt(1), 1));
    CHECK(Dyadic(BigInt(3), 2) > Dyadic::pow2_inverse(1, 8));
    CHECK(Dyadic(BigInt(-1), 0) < Dyadic::zero(9));
}

TEST_CASE("normalized reaches lowest terms") {
    const Dyadic r = Dyadic(BigInt(12), 4).normalized(); // 12/16 -> 3/4
    CHECK(r.numerator() == 3);
    CHECK(r.exponent() == 2);

    const Dyadic whole = Dyadic(BigInt(8), 3).normalized();
    CHECK(whole.numerator() == 1);
    CHECK(whole.exponent() == 0);

    const Dyadic z = Dyadic::zero(7).normalized();
    CHECK(z.numerator() == 0);
    CHECK(z.exponent() == 0);
}

TEST_CASE("str prints lowest terms, integers bare") {
    CHECK(Dyadic(BigInt(12), 4).str() == "3/2^2");
    CHECK(Dyadic(BigInt(4), 2).str() == "1");
    CHECK(Dyadic::zero(13).str() == "0");
    CHECK(Dyadic(BigInt(-2), 3).str() == "-1/2^2");
}

TEST_CASE("to_double on representable values") {
    CHECK(Dyadic(BigInt(3), 2).to_double() == doctest::Approx(0.75));
    CHECK(Dyadic::one(30).to_double() == doctest::Approx(1.0));
}

TEST_CASE("wide exponents stay exact") {
    // 1/2^200 + 1/2^200 == 1/2^199 with no drift.
    Dyadic tiny = Dyadic::pow2_inverse(200, 200);
    tiny += Dyadic::pow2_inverse(200, 200);
    CHECK(tiny == Dyadic::pow2_inverse(199, 200));

    Dyadic sum = Dyadic::zero(200);
    for (int i = 0; i < 1 << 10; ++i) sum += Dyadic::pow2_inverse(10, 200);
    CHECK(sum.compare_to_one() == 0);
}
