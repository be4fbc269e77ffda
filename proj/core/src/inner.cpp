#include "innerfn/inner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace innerfn {

namespace {

constexpr double kAtomCollision = 1e-14;
constexpr double kUnderflowExponent = -745.0; // exp underflows to 0 below this
constexpr double kUnitTol = 1e-12;

// Unimodular normalization |z_n|/z_n as an exact unit number.
Complex unit_conj(const Zero& z) {
    const double m = std::abs(z.point);
    return std::conj(z.point) / m;
}

Jet2 factor_jet(const Zero& zn, Complex z) {
    const Complex c = unit_conj(zn);
    const Complex den = 1.0 - std::conj(zn.point) * z;
    // |z_n|^2 - 1 = -deficit (2 - deficit), exact near the boundary.
    const double m2m1 = -zn.deficit * (2.0 - zn.deficit);
    Jet2 j;
    j.f = c * (zn.point - z) / den;
    j.df = c * m2m1 / (den * den);
    j.d2f = 2.0 * std::conj(zn.point) * j.df / den;
    return j;
}

} // namespace

InnerFunctionSpec::InnerFunctionSpec(std::vector<ZeroFamily> b, std::vector<AtomFamily> s)
    : blaschke(std::move(b)), singular(std::move(s)) {
    if (empty())
        throw std::invalid_argument("InnerFunctionSpec: at least one part is required");
}

InnerFunctionSpec InnerFunctionSpec::doubled() const {
    InnerFunctionSpec out;
    out.blaschke.reserve(blaschke.size());
    out.singular.reserve(singular.size());
    for (const auto& f : blaschke) out.blaschke.push_back(f.doubled());
    for (const auto& f : singular) out.singular.push_back(f.doubled());
    return out;
}

std::vector<double> InnerFunctionSpec::spectrum_angles() const {
    std::vector<double> out;
    for (const auto& f : blaschke) {
        if (auto a = f.accumulation_angle()) {
            out.push_back(*a);
            continue;
        }
        // Explicit list: project near-boundary zeros and merge clusters.
        std::vector<double> near;
        for (const Zero& z : f.zeros())
            if (z.deficit < 1e-6) near.push_back(z.arg);
        std::sort(near.begin(), near.end());
        for (size_t i = 0; i < near.size();) {
            size_t j = i;
            while (j + 1 < near.size() && near[j + 1] - near[j] < 1e-6) ++j;
            out.push_back(near[(i + j) / 2]);
            i = j + 1;
        }
    }
    for (const auto& f : singular) {
        auto a = f.spectrum_angles();
        out.insert(out.end(), a.begin(), a.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

Jet2 eval_blaschke(const ZeroFamily& f, Complex z) {
    Jet2 acc = Jet2::one();
    for (const Zero& zn : f.zeros()) acc *= factor_jet(zn, z);
    return acc;
}

Complex eval_blaschke_value(const ZeroFamily& f, Complex z) {
    Complex acc(1.0, 0.0);
    for (const Zero& zn : f.zeros())
        acc *= unit_conj(zn) * (zn.point - z) / (1.0 - std::conj(zn.point) * z);
    return acc;
}

Jet2 eval_singular(const AtomFamily& f, Complex z) {
    Complex w(0.0, 0.0);  // exponent
    Complex w1(0.0, 0.0); // its first derivative
    Complex w2(0.0, 0.0); // its second derivative
    for (const Atom& a : f.atoms()) {
        const Complex e = std::polar(1.0, a.theta);
        const Complex d = z - e;
        if (std::abs(d) < kAtomCollision)
            throw std::domain_error("eval_singular: z collides with an atom");
        w += a.gamma * (z + e) / d;
        const Complex d2 = d * d;
        w1 += a.gamma * e / d2;
        w2 += a.gamma * e / (d2 * d);
    }
    w1 *= -2.0;
    w2 *= 4.0;
    if (w.real() < kUnderflowExponent) return Jet2::zero();
    const Complex s = std::exp(w);
    Jet2 j;
    j.f = s;
    j.df = w1 * s;
    j.d2f = (w2 + w1 * w1) * s;
    return j;
}

Complex eval_singular_value(const AtomFamily& f, Complex z) {
    Complex w(0.0, 0.0);
    for (const Atom& a : f.atoms()) {
        const Complex e = std::polar(1.0, a.theta);
        const Complex d = z - e;
        if (std::abs(d) < kAtomCollision)
            throw std::domain_error("eval_singular: z collides with an atom");
        w += a.gamma * (z + e) / d;
    }
    if (w.real() < kUnderflowExponent) return Complex(0.0, 0.0);
    return std::exp(w);
}

Jet2 eval_inner(const InnerFunctionSpec& spec, Complex z) {
    Jet2 acc = Jet2::one();
    for (const auto& f : spec.blaschke) acc *= eval_blaschke(f, z);
    for (const auto& f : spec.singular) acc *= eval_singular(f, z);
    return acc;
}

Complex eval_inner_value(const InnerFunctionSpec& spec, Complex z) {
    Complex acc(1.0, 0.0);
    for (const auto& f : spec.blaschke) acc *= eval_blaschke_value(f, z);
    for (const auto& f : spec.singular) acc *= eval_singular_value(f, z);
    return acc;
}

double truncation_bound(const InnerFunctionSpec& spec, double r, double cap) {
    if (r < 0.0 || r >= 1.0)
        throw std::domain_error("truncation_bound: r must lie in [0, 1)");
    double tail = 0.0;
    for (const auto& f : spec.blaschke) tail += f.blaschke_sum().tail_bound;
    for (const auto& f : spec.singular) tail += f.tail_bound();
    const double e = std::expm1(2.0 * tail / (1.0 - r));
    if (e > cap) return std::numeric_limits<double>::infinity();
    return e;
}

double boundary_derivative_modulus(const InnerFunctionSpec& spec, Complex zeta,
                                   double exclusion) {
    if (std::abs(std::abs(zeta) - 1.0) > kUnitTol)
        throw std::domain_error("boundary_derivative_modulus: zeta must lie on the circle");
    const double t = std::atan2(zeta.imag(), zeta.real());
    for (double a : spec.spectrum_angles())
        if (chord_sq(t, a) < exclusion * exclusion)
            throw std::domain_error("boundary_derivative_modulus: zeta too close to the spectrum");

    double total = 0.0;
    for (const auto& f : spec.blaschke) {
        double s = 0.0;
        const auto& zs = f.zeros();
        for (auto it = zs.rbegin(); it != zs.rend(); ++it)
            s += it->deficit * (2.0 - it->deficit) / circle_distance_sq(t, *it);
        total += s;
    }
    for (const auto& f : spec.singular) {
        double s = 0.0;
        const auto& as = f.atoms();
        for (auto it = as.rbegin(); it != as.rend(); ++it)
            s += it->gamma / chord_sq(t, it->theta);
        total += 2.0 * s;
    }
    return total;
}

std::vector<RadialSample> radial_modulus_profile(const InnerFunctionSpec& spec, Complex xi,
                                                 const std::vector<double>& radii) {
    if (std::abs(std::abs(xi) - 1.0) > kUnitTol)
        throw std::domain_error("radial_modulus_profile: xi must lie on the circle");
    std::vector<RadialSample> out;
    out.reserve(radii.size());
    for (double r : radii) {
        if (r < 0.0 || r >= 1.0)
            throw std::domain_error("radial_modulus_profile: radii must lie in [0, 1)");
        RadialSample s;
        s.r = r;
        s.modulus = std::abs(eval_inner_value(spec, r * xi));
        s.truncation = truncation_bound(spec, r);
        out.push_back(s);
    }
    return out;
}

} // namespace innerfn
