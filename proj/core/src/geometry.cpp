#include "innerfn/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace innerfn {

namespace {
constexpr double kRegionSlack = 1e-9;
constexpr double kUnitTol = 1e-12;
} // namespace

Zero Zero::from_point(Complex z) {
    Zero out;
    out.point = z;
    out.deficit = 1.0 - std::abs(z);
    out.arg = std::atan2(z.imag(), z.real());
    return out;
}

Zero Zero::from_polar(double deficit, double arg) {
    Zero out;
    out.deficit = deficit;
    out.arg = arg;
    const double r = 1.0 - deficit;
    out.point = Complex(r * std::cos(arg), r * std::sin(arg));
    return out;
}

double pseudohyperbolic(Complex z, Complex w) {
    if (std::abs(z) >= 1.0 || std::abs(w) >= 1.0)
        throw std::domain_error("pseudohyperbolic: arguments must lie in the open disc");
    return std::abs((z - w) / (1.0 - std::conj(w) * z));
}

double pseudohyperbolic(const Zero& z, const Zero& w) {
    const double u = z.deficit, v = w.deficit;
    if (u <= 0.0 || v <= 0.0)
        throw std::domain_error("pseudohyperbolic: arguments must lie in the open disc");
    const double s = std::sin(0.5 * (z.arg - w.arg));
    const double s2 = s * s;
    const double cross = 4.0 * (1.0 - u) * (1.0 - v) * s2;
    const double du = v - u;
    const double num = du * du + cross;
    const double gap = u + v - u * v; // 1 - (1-u)(1-v), no cancellation
    const double den = gap * gap + cross;
    return std::sqrt(num / den);
}

double circle_distance_sq(double theta, const Zero& z) {
    const double s = std::sin(0.5 * (theta - z.arg));
    return z.deficit * z.deficit + 4.0 * (1.0 - z.deficit) * s * s;
}

double chord_sq(double a, double b) {
    const double s = std::sin(0.5 * (a - b));
    return 4.0 * s * s;
}

Region::Region(double gamma_, Complex vertex_, double c_)
    : gamma(gamma_), vertex(vertex_), c(c_) {
    if (gamma < 1.0)
        throw std::invalid_argument("Region: gamma must be >= 1");
    if (std::abs(std::abs(vertex) - 1.0) > kUnitTol)
        throw std::invalid_argument("Region: vertex must lie on the unit circle");
    if (c <= 0.0)
        throw std::invalid_argument("Region: c must be positive");
    if (gamma == 1.0 && c <= 1.0)
        throw std::invalid_argument("Region: gamma = 1 requires c > 1");
}

bool in_region(Complex z, const Region& r) {
    const double m = std::abs(z);
    if (m >= 1.0)
        throw std::domain_error("in_region: z must lie in the open disc");
    const double lhs = std::pow(std::abs(1.0 - std::conj(r.vertex) * z), r.gamma);
    const double rhs = r.c * (1.0 - m);
    return lhs <= rhs * (1.0 + kRegionSlack);
}

bool in_region(const Zero& z, const Region& r) {
    if (z.deficit <= 0.0)
        throw std::domain_error("in_region: z must lie in the open disc");
    const double vertex_arg = std::atan2(r.vertex.imag(), r.vertex.real());
    const double lhs = std::pow(circle_distance_sq(vertex_arg, z), 0.5 * r.gamma);
    const double rhs = r.c * z.deficit;
    return lhs <= rhs * (1.0 + kRegionSlack);
}

Zero tangential_zero_polar(int n, double alpha, double gamma) {
    if (n < 1)
        throw std::invalid_argument("tangential_zero: n must be >= 1");
    if (gamma <= 1.0)
        throw std::invalid_argument("tangential_zero: gamma must be > 1");
    if (alpha <= gamma / (gamma - 1.0))
        throw std::invalid_argument("tangential_zero: alpha must exceed gamma/(gamma-1)");
    if (n == 1)
        return Zero{Complex(0.0, 0.0), 1.0, 0.0};

    const double deficit = std::pow(static_cast<double>(n), -alpha);
    const double d2 = std::pow(static_cast<double>(n), -2.0 * alpha / gamma); // |1-z|^2
    // Solve |1-z|^2 = deficit^2 + 4(1-deficit) sin^2(arg/2) for the argument.
    const double s2 = (d2 - deficit * deficit) / (4.0 * (1.0 - deficit));
    if (s2 < 0.0 || s2 > 1.0)
        throw std::domain_error("tangential_zero: infeasible modulus/chord pair");
    const double arg = 2.0 * std::asin(std::sqrt(s2));

    Zero z = Zero::from_polar(deficit, arg);
    const double chord2 = circle_distance_sq(0.0, z);
    if (std::abs(chord2 - d2) > 1e-12 * d2)
        throw std::domain_error("tangential_zero: constraint check failed");
    return z;
}

Complex tangential_zero(int n, double alpha, double gamma) {
    return tangential_zero_polar(n, alpha, gamma).point;
}

} // namespace innerfn
