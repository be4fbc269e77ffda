#include <cmath>
#include <complex>

#include <doctest.h>

#include "innerfn/geometry.hpp"

using namespace innerfn;

TEST_CASE("zero representation keeps the boundary gap exactly") {
    Zero z = Zero::from_polar(std::exp2(-64), 0.0);
    CHECK(z.deficit == std::exp2(-64));
    CHECK(z.point == Complex{1.0, 0.0}); // the materialized point saturates
    CHECK(z.modulus() == 1.0 - std::exp2(-64));

    Zero w = Zero::from_point({0.3, 0.4});
    CHECK(w.deficit == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(w.arg == doctest::Approx(std::atan2(0.4, 0.3)).epsilon(1e-15));
}

TEST_CASE("pseudohyperbolic distance matches the direct quotient away from the boundary") {
    Complex a{0.3, -0.2}, b{-0.5, 0.1};
    double direct = std::abs(a - b) / std::abs(1.0 - std::conj(b) * a);
    CHECK(pseudohyperbolic(a, b) == doctest::Approx(direct).epsilon(1e-14));
    CHECK(pseudohyperbolic(Zero::from_point(a), Zero::from_point(b)) ==
          doctest::Approx(direct).epsilon(1e-12));
    CHECK(pseudohyperbolic(a, a) == 0.0);
    CHECK_THROWS_AS(pseudohyperbolic(Complex{1.0, 0.0}, a), std::domain_error);
}

TEST_CASE("pseudohyperbolic distance survives deficits below machine resolution") {
    // radial pair: rho = (u - v) / (u + v - u v) for deficits u > v
    double u = std::exp2(-16), v = std::exp2(-64);
    Zero a = Zero::from_polar(u, 0.0), b = Zero::from_polar(v, 0.0);
    double expected = (u - v) / (u + v - u * v);
    CHECK(pseudohyperbolic(a, b) == doctest::Approx(expected).epsilon(1e-12));
    // the materialized points are useless here: both collapse toward |z| = 1
    CHECK(pseudohyperbolic(a, a) == 0.0);

    // same deficit, tiny angular split: num ~ 4(1-u)^2 sin^2(psi/2), den adds the gap term
    double psi = 1e-12;
    Zero c = Zero::from_polar(u, psi);
    double cross = 4.0 * (1.0 - u) * (1.0 - u) * std::sin(psi / 2) * std::sin(psi / 2);
    double gap = u + u - u * u;
    double expected2 = std::sqrt(cross / (gap * gap + cross));
    CHECK(pseudohyperbolic(a, c) == doctest::Approx(expected2).epsilon(1e-12));
}

TEST_CASE("circle distance squared is stable near the boundary") {
    // |zeta - z|^2 = deficit^2 + 4 (1 - deficit) sin^2((theta - arg)/2)
    Zero z = Zero::from_polar(std::exp2(-40), 0.25);
    double d = std::exp2(-40);
    double s = std::sin((0.25 - 0.25) / 2);
    CHECK(circle_distance_sq(0.25, z) == doctest::Approx(d * d).epsilon(1e-14));
    s = std::sin((1.0 - 0.25) / 2);
    CHECK(circle_distance_sq(1.0, z) ==
          doctest::Approx(d * d + 4.0 * (1.0 - d) * s * s).epsilon(1e-14));

    Zero far = Zero::from_point({0.5, 0.0});
    CHECK(circle_distance_sq(3.14159265358979323846, far) ==
          doctest::Approx(2.25).epsilon(1e-14)); // |-1 - 0.5|^2
}

TEST_CASE("chord squared") {
    CHECK(chord_sq(0.0, 0.0) == 0.0);
    CHECK(chord_sq(0.0, 3.14159265358979323846) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(chord_sq(1.0, 1.0 + 2.0 * 3.14159265358979323846) == doctest::Approx(0.0));
}

TEST_CASE("region validation") {
    CHECK_THROWS_AS(Region(0.5, {1.0, 0.0}, 1.0), std::invalid_argument);  // gamma < 1
    CHECK_THROWS_AS(Region(2.0, {0.5, 0.0}, 1.0), std::invalid_argument);  // vertex inside
    CHECK_THROWS_AS(Region(2.0, {1.0, 0.0}, -1.0), std::invalid_argument); // c <= 0
    CHECK_THROWS_AS(Region(1.0, {1.0, 0.0}, 1.0), std::invalid_argument);  // sector needs c > 1
    CHECK_NOTHROW(Region(1.0, {1.0, 0.0}, 2.0));
    CHECK_NOTHROW(Region(2.0, {0.0, 1.0}, 0.5));
}

TEST_CASE("region membership") {
    Region sector(1.0, {1.0, 0.0}, 2.0);
    CHECK(in_region(Complex{0.5, 0.0}, sector));   // |1-z| = 0.5 <= 2 * 0.5
    CHECK(!in_region(Complex{-0.5, 0.0}, sector)); // |1-z| = 1.5 > 2 * 0.5

    Region tang(2.0, {1.0, 0.0}, 1.0);
    CHECK(in_region(Complex{0.9, 0.0}, tang));    // 0.01 <= 0.1
    CHECK(!in_region(Complex{0.0, 0.5}, tang));   // |1-z|^2 = 1.25 > 1 - |z|
}

TEST_CASE("membership tolerates points constructed on the defining curve") {
    // deficit n^-3 with |1 - z| = n^-1.5 satisfies |1-z|^2 = 1 - |z| with equality;
    // the slack keeps rounding from flipping these.
    Region r(2.0, {1.0, 0.0}, 1.0);
    for (int n = 2; n <= 2000000; n *= 10) {
        Zero z = tangential_zero_polar(n, 3.0, 2.0);
        CAPTURE(n);
        CHECK(in_region(z, r));
    }
}

TEST_CASE("tangential zeros satisfy both defining constraints") {
    for (int n : {2, 5, 17, 1000, 250000}) {
        Zero z = tangential_zero_polar(n, 3.0, 2.0);
        CAPTURE(n);
        CHECK(z.deficit == doctest::Approx(std::pow(n, -3.0)).epsilon(1e-12));
        double chord2 = circle_distance_sq(0.0, z);
        CHECK(chord2 == doctest::Approx(std::pow(n, -3.0)).epsilon(1e-9)); // (n^-1.5)^2
    }
    CHECK(tangential_zero(1, 3.0, 2.0) == Complex{0.0, 0.0});
    // alpha <= gamma/(gamma-1) leaves the chord constraint infeasible
    CHECK_THROWS_AS(tangential_zero_polar(2, 1.5, 2.0), std::invalid_argument);
}
