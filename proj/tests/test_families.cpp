#include <cmath>

#include <doctest.h>

#include "innerfn/families.hpp"

using namespace innerfn;

TEST_CASE("power family skips the origin and decays like n^-alpha") {
    ZeroFamily f = ZeroFamily::power(2.0, 5);
    CHECK(f.count() == 5);
    CHECK(f.first_index() == 2);
    CHECK(f.zeros()[0].deficit == 0.25);           // n = 2
    CHECK(f.zeros()[4].deficit == doctest::Approx(1.0 / 36).epsilon(1e-15));
    CHECK(f.accumulation_angle().value() == 0.0);
    CHECK_THROWS_AS(ZeroFamily::power(1.0, 5), std::invalid_argument);
}

TEST_CASE("logpower family starts at the first index inside the disc") {
    // n (log n)^2: 2 * 0.4805 = 0.961 <= 1, 3 * 1.2069 > 1, so generation starts at 3
    ZeroFamily f = ZeroFamily::logpower(2.0, 4);
    CHECK(f.first_index() == 3);
    double d0 = 1.0 / (3.0 * std::pow(std::log(3.0), 2.0));
    CHECK(f.zeros()[0].deficit == doctest::Approx(d0).epsilon(1e-15));
    for (const Zero& z : f.zeros()) {
        CHECK(z.deficit > 0.0);
        CHECK(z.deficit < 1.0);
    }
}

TEST_CASE("geometric family is exact in binary for alpha 2") {
    ZeroFamily f = ZeroFamily::geometric(2.0, 10);
    CHECK(f.first_index() == 1);
    for (int n = 1; n <= 10; ++n) CHECK(f.zeros()[n - 1].deficit == std::exp2(-n));
    BlaschkeSum s = f.blaschke_sum();
    CHECK(s.partial == 1.0 - std::exp2(-10)); // geometric series, exact
    CHECK(s.tail_bound == doctest::Approx(std::exp2(-10)).epsilon(1e-15));
}

TEST_CASE("doubleexp family underflows past ten zeros") {
    ZeroFamily f = ZeroFamily::double_exp(6);
    for (int n = 1; n <= 6; ++n)
        CHECK(f.zeros()[n - 1].deficit == std::exp2(-std::exp2(n)));
    CHECK_THROWS_AS(ZeroFamily::double_exp(11), std::invalid_argument);
    CHECK(ZeroFamily::double_exp(10).zeros().back().deficit == std::exp2(-1024.0 + 0.0));
}

TEST_CASE("doubleexp tail bound") {
    // remaining deficits: sum over n > count of 2^-2^n <= 2 * 2^-2^(count+1)
    ZeroFamily f = ZeroFamily::double_exp(3);
    CHECK(f.blaschke_sum().tail_bound == doctest::Approx(2.0 * std::exp2(-16.0)).epsilon(1e-15));
}

TEST_CASE("power tail bound is the integral estimate") {
    ZeroFamily f = ZeroFamily::power(2.0, 100);
    // generation covered n = 2..101, tail bounded by integral from 101 of x^-2
    CHECK(f.blaschke_sum().tail_bound == doctest::Approx(1.0 / 101).epsilon(1e-15));
}

TEST_CASE("tangential family respects rotation and keeps its constraints") {
    ZeroFamily f = ZeroFamily::tangential(3.0, 2.0, 50, 1.0);
    CHECK(f.first_index() == 2);
    CHECK(f.count() == 50);
    CHECK(f.accumulation_angle().value() == 1.0);
    for (int i = 0; i < 50; ++i) {
        int n = i + 2;
        CHECK(f.zeros()[i].deficit == doctest::Approx(std::pow(n, -3.0)).epsilon(1e-12));
        CHECK(circle_distance_sq(1.0, f.zeros()[i]) ==
              doctest::Approx(std::pow(n, -3.0)).epsilon(1e-9));
    }
    CHECK_THROWS_AS(ZeroFamily::tangential(1.5, 2.0, 5), std::invalid_argument);
}

TEST_CASE("explicit lists sort by modulus and keep ties in input order") {
    ZeroFamily f = ZeroFamily::explicit_list({{0.0, 0.8}, {0.5, 0.0}, {0.8, 0.0}});
    CHECK(f.zeros()[0].point == Complex{0.5, 0.0});
    // |0.8i| == |0.8| tie: the input order (0.8i before 0.8) survives
    CHECK(f.zeros()[1].point == Complex{0.0, 0.8});
    CHECK(f.zeros()[2].point == Complex{0.8, 0.0});
    CHECK(!f.accumulation_angle().has_value());
    CHECK(f.blaschke_sum().tail_bound == 0.0);

    CHECK_THROWS_AS(ZeroFamily::explicit_list({{0.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(ZeroFamily::explicit_list({{1.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(ZeroFamily::explicit_list({}), std::invalid_argument);
}

TEST_CASE("explicit list applies its rotation before storing") {
    ZeroFamily f = ZeroFamily::explicit_list({{0.5, 0.0}}, 3.14159265358979323846 / 2);
    CHECK(f.zeros()[0].point.real() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(f.zeros()[0].point.imag() == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("doubling the refinement") {
    CHECK(ZeroFamily::geometric(2.0, 10).doubled().count() == 20);
    CHECK(ZeroFamily::double_exp(6).doubled().count() == 10); // capped
    ZeroFamily e = ZeroFamily::explicit_list({{0.5, 0.0}});
    CHECK(e.doubled().count() == 1); // cannot extend a literal list
}

TEST_CASE("dyadic atom family") {
    AtomFamily f = AtomFamily::dyadic_square(30, 1.0);
    CHECK(f.count() == 30);
    CHECK(f.atoms()[0].theta == 0.0);
    CHECK(f.atoms()[0].gamma == 1.0);
    CHECK(f.atoms()[1].theta == 0.5);
    CHECK(f.atoms()[1].gamma == 1.0);
    CHECK(f.atoms()[29].theta == std::exp2(-29.0));
    CHECK(f.atoms()[29].gamma == doctest::Approx(1.0 / (29.0 * 29.0)).epsilon(1e-15));

    double mass = 1.0;
    for (int n = 1; n <= 29; ++n) mass += 1.0 / (double(n) * n);
    CHECK(f.mass() == doctest::Approx(mass).epsilon(1e-14));
    CHECK(f.tail_bound() == doctest::Approx(1.0 / 29).epsilon(1e-15));
    CHECK(f.doubled().count() == 60);
}

TEST_CASE("explicit atoms validate masses and distinct angles") {
    CHECK_NOTHROW(AtomFamily::explicit_list({{0.0, 1.0}, {1.0, 0.5}}));
    CHECK_THROWS_AS(AtomFamily::explicit_list({{0.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(AtomFamily::explicit_list({{0.0, 1.0}, {0.0, 2.0}}), std::invalid_argument);
    CHECK(AtomFamily::explicit_list({{0.5, 1.0}}).tail_bound() == 0.0);
}
