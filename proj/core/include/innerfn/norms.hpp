#pragma once

#include <utility>
#include <vector>

#include "innerfn/inner.hpp"

namespace innerfn {

enum class Classification { Bounded, Diverging, Inconclusive };

const char* to_string(Classification c);

struct NormsConfig {
    int k_min = 64;          // initial circle quadrature nodes
    int k_max = 1 << 20;     // node-doubling ceiling
    double quad_rel = 1e-6;  // relative agreement between doubling levels
    int j_max = 20;          // deepest dyadic radius 1 - 2^-j
    double trunc_tol = 1e-3; // truncation bound allowed at the working radius
    double flat_rel = 1e-3;  // last increment below this fraction of the mean: bounded
    double growth_ratio = 1.04; // sustained per-step growth at or above this: diverging
    double decay_ratio = 0.97;  // sustained per-step decay at or below this: bounded
    int sustain = 3;            // steps the growth/decay must persist
    int min_ceiling_j = 8;      // bounded verdicts need at least this radial depth
    int radial_m = 4;           // radial subdivisions per dyadic interval
    double stable_rel = 0.1;    // radial refinement agreement
};

struct MeanEstimate {
    double value = 0.0;
    int nodes = 0;
    bool converged = false;
};

// M_p(r, f^(deriv)) = ( (1/2pi) integral |f^(deriv)(r e^it)|^p dt )^(1/p) by
// the periodic trapezoid rule with node doubling until quad_rel agreement.
MeanEstimate hardy_mean(const InnerFunctionSpec& spec, int deriv, double p, double r,
                        const NormsConfig& cfg = {});

// (1/2pi) integral log+ |f^(deriv)(r e^it)| dt, same quadrature.
MeanEstimate nevanlinna_mean(const InnerFunctionSpec& spec, int deriv, double r,
                             const NormsConfig& cfg = {});

/* Growth data along the dyadic radii r_j = 1 - 2^-j.  For the radial profile
 * `means` holds M_p(r_j, .) and `value` the deepest mean; for the area norm
 * `means` holds the annulus contributions and `value` their sum.  The
 * classification looks at the telescoped per-step ratio of the last `sustain`
 * increments (or contributions): at or above growth_ratio is diverging, at or
 * below decay_ratio is bounded, a final increment under flat_rel of the total
 * is bounded outright.  Bounded below min_ceiling_j of usable depth degrades
 * to inconclusive, as does a profile cut short by the truncation budget. */
struct GrowthProfile {
    Classification classification = Classification::Inconclusive;
    std::vector<double> radii;
    std::vector<double> means;
    double value = 0.0;
    int ceiling_j = 0;
    bool quadrature_converged = true;
    double step_ratio = 0.0; // telescoped per-step ratio the verdict used
};

GrowthProfile hardy_classification(const InnerFunctionSpec& spec, int deriv, double p,
                                   const NormsConfig& cfg = {});

// integral over the disc of |f^(deriv)|^p (1-|z|)^alpha dA, split over the
// annuli between consecutive dyadic radii (alpha > -1).  The angular mean is
// taken at the annulus midpoint and the weight integrated in closed form.
GrowthProfile bergman_norm(const InnerFunctionSpec& spec, int deriv, double p, double alpha,
                           const NormsConfig& cfg = {});

/* The three integrability statements whose agreement is expected for
 * derivatives of the functions this library builds:
 *   (a) radial growth of M_p(r, f'),
 *   (b) area integrability of |f'|^{2p} with weight (1-|z|)^{p-1},
 *   (c) area integrability of |f''|^p  with weight (1-|z|)^{p-1}. */
struct EquivalenceReport {
    Classification hardy_first = Classification::Inconclusive;
    Classification bergman_first = Classification::Inconclusive;
    Classification bergman_second = Classification::Inconclusive;
    bool agree = false;
    std::vector<std::pair<double, Classification>> alpha_sweep;
};

EquivalenceReport equivalence_report(const InnerFunctionSpec& spec, double p,
                                     const std::vector<double>& sweep_alphas = {},
                                     const NormsConfig& cfg = {});

/* Per boundary angle, the weighted radial integral
 *   integral_0^1 |f'(rho e^it)|^(p+alpha+1) (1 - rho)^alpha drho
 * divided by |f'(e^it)|^p from the boundary sum.  Angles within the spectrum
 * exclusion are skipped.  `stable` records whether doubling the radial
 * subdivision moved the max ratio by less than stable_rel. */
struct RadialComparison {
    std::vector<double> values;
    double statistic = 0.0;
    double refined_statistic = 0.0;
    bool stable = false;
    int skipped = 0;
};

RadialComparison radial_boundary_comparison(const InnerFunctionSpec& spec, double p, double alpha,
                                            const std::vector<double>& thetas,
                                            const NormsConfig& cfg = {});

} // namespace innerfn
