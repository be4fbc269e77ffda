#pragma once

#include <complex>

#include "innerfn/jet.hpp"

namespace innerfn {

/* Points of the open unit disc that sit very close to the boundary lose all
 * precision when stored as plain complex doubles: 1 - 2^-64 rounds to 1.0.
 * A Zero keeps the boundary gap (deficit = 1 - |z|) and the argument exactly
 * and carries a materialized complex point for plain arithmetic.  Quantities
 * that would cancel catastrophically (1 - |z|, |zeta - z|^2 near the circle,
 * pseudohyperbolic distances between near-boundary points) are computed from
 * deficit and argument instead of from the point. */
struct Zero {
    Complex point{0.0, 0.0}; // (1 - deficit) * exp(i*arg), authoritative for evaluation
    double deficit = 1.0;    // 1 - |z|, exact
    double arg = 0.0;        // radians

    double modulus() const { return 1.0 - deficit; }

    // For explicit user-supplied zeros the input value stays authoritative.
    static Zero from_point(Complex z);
    // For generated families the polar data stays authoritative.
    static Zero from_polar(double deficit, double arg);
};

// |z - w| / |1 - conj(w) z| for z, w in the open disc.
// Throws std::domain_error if either point lies outside.
double pseudohyperbolic(Complex z, Complex w);

// Cancellation-free variant on the deficit representation.
double pseudohyperbolic(const Zero& z, const Zero& w);

// |zeta - z|^2 for zeta = exp(i*theta) on the circle, stable near the boundary.
double circle_distance_sq(double theta, const Zero& z);

// |exp(i*a) - exp(i*b)|^2.
double chord_sq(double a, double b);

/* Tangential approach region with vertex on the circle:
 *   R = { z in D : |1 - conj(vertex) z|^gamma <= c (1 - |z|) }.
 * gamma = 1 gives a Stolz-type sector and requires c > 1; for gamma > 1 any
 * c > 0 is admissible. */
struct Region {
    double gamma;
    Complex vertex;
    double c;

    Region(double gamma, Complex vertex, double c);
};

// Membership test. The non-strict inequality is evaluated with a relative
// slack of 1e-9 so that sequences constructed to satisfy the defining
// equation with equality test as members instead of flipping on rounding.
bool in_region(Complex z, const Region& r);
bool in_region(const Zero& z, const Region& r);

/* n-th point of the tangential family with |z_n| = 1 - n^-alpha and
 * |1 - z_n| = n^-(alpha/gamma).  Requires alpha > gamma / (gamma - 1) so the
 * chord constraint is geometrically feasible; n = 1 gives the origin.  The
 * returned point satisfies both constraints to 1e-12 relative error (checked
 * on the deficit representation before materializing). */
Complex tangential_zero(int n, double alpha, double gamma);
Zero tangential_zero_polar(int n, double alpha, double gamma);

} // namespace innerfn
