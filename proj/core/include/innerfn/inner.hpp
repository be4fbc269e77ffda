#pragma once

#include <vector>

#include "innerfn/families.hpp"
#include "innerfn/jet.hpp"

namespace innerfn {

/* Product of finitely many truncated Blaschke products and purely atomic
 * singular inner functions.  At least one part is required. */
struct InnerFunctionSpec {
    std::vector<ZeroFamily> blaschke;
    std::vector<AtomFamily> singular;

    InnerFunctionSpec() = default;
    InnerFunctionSpec(std::vector<ZeroFamily> b, std::vector<AtomFamily> s);

    bool empty() const { return blaschke.empty() && singular.empty(); }
    InnerFunctionSpec doubled() const;

    // Angles of estimated boundary singularities: accumulation points of the
    // zero families (explicit lists are scanned for clusters within 1e-6 of
    // the circle), every atom, and atom accumulation points.
    std::vector<double> spectrum_angles() const;
};

// Jet of one truncated Blaschke product.  Factors use the closed forms
//   b_n(z)  = (|z_n|/z_n) (z_n - z)/(1 - conj(z_n) z)
//   b_n'(z) = (|z_n|/z_n) (|z_n|^2 - 1)/(1 - conj(z_n) z)^2
//   b_n''   = 2 conj(z_n) b_n' / (1 - conj(z_n) z)
// combined with the Leibniz rule, which stays finite at the zeros.
Jet2 eval_blaschke(const ZeroFamily& f, Complex z);
Complex eval_blaschke_value(const ZeroFamily& f, Complex z);

// Jet of one atomic singular inner function S = exp(sum gamma_k (z+e_k)/(z-e_k)).
// If Re(exponent) < -745 the jet underflows to an exact zero.  Throws
// std::domain_error when z is within 1e-14 of an atom.
Jet2 eval_singular(const AtomFamily& f, Complex z);
Complex eval_singular_value(const AtomFamily& f, Complex z);

Jet2 eval_inner(const InnerFunctionSpec& spec, Complex z);
Complex eval_inner_value(const InnerFunctionSpec& spec, Complex z);

/* Bound on |Theta - Theta_truncated| on the closed disc of radius r:
 *   exp( sum_tail 2 (1 - |z_n|) / (1 - r) ) - 1
 * with the zero tail bounds from the families and the omitted atom masses.
 * Returns +infinity when the bound exceeds cap (truncation insufficient). */
double truncation_bound(const InnerFunctionSpec& spec, double r, double cap = 1.0);

/* |Theta'| at zeta on the circle from the boundary sums
 *   |B'(zeta)| = sum (1 - |z_n|^2) / |zeta - z_n|^2
 *   |S'(zeta)| = 2 sum gamma_n / |zeta - e_n|^2
 * added over the parts.  Throws std::domain_error if zeta is off the circle
 * by more than 1e-12 or within `exclusion` (angular) of a spectrum point. */
double boundary_derivative_modulus(const InnerFunctionSpec& spec, Complex zeta,
                                   double exclusion = 1e-3);

struct RadialSample {
    double r;
    double modulus;
    double truncation; // bound at this radius, +inf when flagged
};

// |Theta| along r * xi for the given radii (xi on the circle).
std::vector<RadialSample> radial_modulus_profile(const InnerFunctionSpec& spec, Complex xi,
                                                 const std::vector<double>& radii);

} // namespace innerfn
