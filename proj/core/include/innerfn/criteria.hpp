#pragma once

#include <string>
#include <utility>
#include <vector>

#include "innerfn/inner.hpp"

namespace innerfn {

enum class Verdict { Satisfied, Violated, Inconclusive };

const char* to_string(Verdict v);

/* Shared numeric knobs for the certification criteria.  Tail statistics are
 * taken over the index window [window_lo, window_hi] (fractions of the list
 * length) to dodge both head transients and truncation-edge bias.  The thin
 * product uses the trailing quarter instead: its omitted tail factors are
 * close to 1 for the fast-decaying sequences it certifies, so the edge is
 * unbiased there while the interior window is not yet in the regime. */
struct CriteriaConfig {
    double window_lo = 0.5;
    double window_hi = 0.75;
    double satisfied_min = 0.05; // tail/step ratio statistic above this: satisfied
    double violated_max = 1e-3;  // and below this: violated
    double thin_window_lo = 0.75;
    double thin_satisfied = 0.9;
    double thin_violated = 0.5;
    double stability_factor = 2.0;    // refinement growth below this counts as stable
    double frostman_tail_frac = 0.01; // tail bound below this fraction of the partial sum
    double frostman_decay = 0.5;      // term decay ratio at or above this: divergent terms
    double atom_gap_growth = 2.0;     // window-to-window growth flagging unbounded gaps
    double atom_gap_median_factor = 10.0;
    double cluster_tol = 1e-6; // boundary clustering for explicit zero lists
};

struct CriterionResult {
    std::string name;
    std::vector<double> values;
    double statistic = 0.0;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<std::pair<std::string, double>> metadata;

    double meta(const std::string& key) const;
};

struct SpectrumPoint {
    double angle = 0.0;
    Complex point{1.0, 0.0};
    bool atom = false;
    bool accumulation = false;
};

struct SpectrumEstimate {
    std::vector<SpectrumPoint> points;

    std::vector<double> angles() const;
};

// Estimated boundary singularities of the truncated spec: accumulation points
// of generated zero families, boundary clusters of explicit lists, every atom
// and atom accumulation point.  Coinciding angles merge with their flags.
SpectrumEstimate spectrum(const InnerFunctionSpec& spec, const CriteriaConfig& cfg = {});

/* r_n = sum of (1 - |z_j|) over |z_j| > |z_n|, divided by (1 - |z_n|).
 * A positive lower bound on r_n certifies a connected sublevel set; the
 * statistic is the window minimum. */
CriterionResult tail_ratio(const std::vector<Zero>& zeros, const CriteriaConfig& cfg = {});

// Consecutive-gap ratios (1 - |z_{n+1}|)/(1 - |z_n|); requires strictly
// increasing moduli.  Bounded below away from 0 implies the tail ratio is too.
CriterionResult step_ratio(const std::vector<Zero>& zeros, const CriteriaConfig& cfg = {});

/* Partial sums of (1 - |z_n|)/|xi - z_n| for xi on the circle.  The family
 * overload attaches a closed-form tail bound where available and accounts for
 * the index-1 origin point that power/tangential generation omits (its term
 * equals 1 exactly for every boundary xi). */
CriterionResult frostman_sum(const std::vector<Zero>& zeros, Complex xi,
                             const CriteriaConfig& cfg = {});
CriterionResult frostman_sum(const ZeroFamily& family, Complex xi,
                             const CriteriaConfig& cfg = {});

// v_n = product over k != n of the pseudohyperbolic distance d(z_k, z_n),
// i.e. the derivative criterion for thin/interpolating sequences evaluated
// with the factor n removed analytically.
CriterionResult thin_test(const std::vector<Zero>& zeros, const CriteriaConfig& cfg = {});

// Infimum of the thin products over all n (uniform separation constant).
double uniform_separation(const std::vector<Zero>& zeros);

/* Max of |Theta''| / |Theta'|^2 over uniform boundary samples, excluding
 * arcs of angular half-width `exclusion` around each spectrum point.  The
 * verdict compares against a refined run (doubled samples and truncation
 * counts); metadata records both statistics, their ratio, and a growth probe
 * of |Theta'| along a ladder approaching the first spectrum point. */
CriterionResult second_derivative_ratio(const InnerFunctionSpec& spec, int samples,
                                        double exclusion, const CriteriaConfig& cfg = {});

/* Pointwise comparison of sum (1-|z_n|^2)/|z_n - zeta|^3 against the square
 * of sum (1-|z_n|^2)/|z_n - zeta|^2 at boundary points zeta.  The family
 * overload adds a doubling stability verdict. */
CriterionResult sum_condition(const std::vector<Zero>& zeros, const std::vector<Complex>& zetas);
CriterionResult sum_condition(const ZeroFamily& family, const std::vector<Complex>& zetas,
                              const CriteriaConfig& cfg = {});

/* Gap-to-mass ratios |theta_{n-1} - theta_{n+1}| / gamma_n^2 for an atom
 * sequence decreasing to the base atom at angle 0.  Bounded ratios are the
 * hypothesis of the one-component test for such measures. */
CriterionResult atom_gap_ratio(const AtomFamily& atoms, const CriteriaConfig& cfg = {});

// Atom analogue of sum_condition: sum gamma_n/|zeta - e_n|^3 against the
// square of sum gamma_n/|zeta - e_n|^2.
CriterionResult atom_sum_condition(const AtomFamily& atoms, const std::vector<Complex>& zetas);
CriterionResult atom_sum_condition(const AtomFamily& atoms, const std::vector<Complex>& zetas,
                                   const CriteriaConfig& cfg, bool with_doubling);

// Deterministic boundary angles spread over the gaps between consecutive
// atoms, at least one per gap, allocated by arc length.
std::vector<Complex> points_between_atoms(const AtomFamily& atoms, int m);

/* values = |Theta^(n)(z)| (1-|z|)^n / (1-|Theta(z)|)^n over interior points
 * (n = 1 or 2); points where 1-|Theta(z)| < 1e-12 are skipped and counted in
 * metadata.  Verdict is stability under truncation doubling. */
CriterionResult schwarz_pick_ratio(const InnerFunctionSpec& spec, int order,
                                   const std::vector<Complex>& points,
                                   const CriteriaConfig& cfg = {});

} // namespace innerfn
