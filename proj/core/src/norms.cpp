#include "innerfn/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "innerfn/parallel.hpp"

namespace innerfn {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

void require_deriv(int deriv) {
    if (deriv < 0 || deriv > 2) throw std::invalid_argument("derivative order must be 0, 1 or 2");
}

double deriv_modulus(const InnerFunctionSpec& spec, int deriv, Complex z) {
    if (deriv == 0) return std::abs(eval_inner_value(spec, z));
    Jet2 jet = eval_inner(spec, z);
    return std::abs(deriv == 1 ? jet.df : jet.d2f);
}

/* Periodic trapezoid mean (1/2pi) integral g(t) dt with node doubling and
 * reuse of previous levels.  Two consecutive doublings must agree to `rel`
 * before the estimate counts as converged, so an unsampled narrow feature at
 * the first level cannot fake agreement. */
template <typename G>
MeanEstimate circle_mean(const NormsConfig& cfg, const G& g) {
    int k = cfg.k_min;
    std::vector<double> vals(k);
    parallel_for(vals.size(), [&](std::size_t i) { vals[i] = g(kTwoPi * i / k); });
    double sum = pairwise_sum(vals);
    double mean = sum / k;

    MeanEstimate out;
    int agreements = 0;
    while (2 * k <= cfg.k_max) {
        int two_k = 2 * k;
        std::vector<double> odd(k);
        parallel_for(odd.size(),
                     [&](std::size_t i) { odd[i] = g(kTwoPi * (2.0 * i + 1.0) / two_k); });
        sum += pairwise_sum(odd);
        double next = sum / two_k;
        bool close = std::abs(next - mean) <= cfg.quad_rel * std::max(std::abs(next), 1e-300);
        agreements = close ? agreements + 1 : 0;
        mean = next;
        k = two_k;
        if (agreements >= 2) break;
    }
    out.value = mean;
    out.nodes = k;
    out.converged = agreements >= 2;
    return out;
}

MeanEstimate raw_power_mean(const InnerFunctionSpec& spec, int deriv, double p, double r,
                            const NormsConfig& cfg) {
    return circle_mean(cfg, [&](double t) {
        return std::pow(deriv_modulus(spec, deriv, std::polar(r, t)), p);
    });
}

int truncation_ceiling(const InnerFunctionSpec& spec, const NormsConfig& cfg) {
    int ceiling = 0;
    for (int j = 1; j <= cfg.j_max; ++j) {
        double r = 1.0 - std::exp2(-j);
        if (!(truncation_bound(spec, r) <= cfg.trunc_tol)) break;
        ceiling = j;
    }
    return ceiling;
}

/* Verdict from a positive sequence x_1..x_n of increments or annulus
 * contributions.  The per-step ratio is telescoped over the last `sustain`
 * steps, which averages out level-to-level jitter. */
void classify_sequence(GrowthProfile& g, const std::vector<double>& x, double total,
                       const NormsConfig& cfg) {
    g.classification = Classification::Inconclusive;
    if (x.empty()) return;
    double last = x.back();
    if (std::abs(last) <= cfg.flat_rel * std::abs(total)) {
        g.classification = g.ceiling_j >= cfg.min_ceiling_j ? Classification::Bounded
                                                            : Classification::Inconclusive;
        return;
    }
    int n = static_cast<int>(x.size());
    if (n < cfg.sustain + 1) return;
    double base = x[n - 1 - cfg.sustain];
    if (base <= 0.0 || last <= 0.0) return;
    double ratio = std::pow(last / base, 1.0 / cfg.sustain);
    g.step_ratio = ratio;
    if (ratio >= cfg.growth_ratio)
        g.classification = Classification::Diverging;
    else if (ratio <= cfg.decay_ratio)
        g.classification = g.ceiling_j >= cfg.min_ceiling_j ? Classification::Bounded
                                                            : Classification::Inconclusive;
}

} // namespace

const char* to_string(Classification c) {
    switch (c) {
    case Classification::Bounded: return "bounded";
    case Classification::Diverging: return "diverging";
    default: return "inconclusive";
    }
}

MeanEstimate hardy_mean(const InnerFunctionSpec& spec, int deriv, double p, double r,
                        const NormsConfig& cfg) {
    require_deriv(deriv);
    if (!(p > 0.0)) throw std::invalid_argument("p must be positive");
    if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("radius must lie in [0, 1)");
    MeanEstimate m = raw_power_mean(spec, deriv, p, r, cfg);
    m.value = std::pow(m.value, 1.0 / p);
    return m;
}

MeanEstimate nevanlinna_mean(const InnerFunctionSpec& spec, int deriv, double r,
                             const NormsConfig& cfg) {
    require_deriv(deriv);
    if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("radius must lie in [0, 1)");
    return circle_mean(cfg, [&](double t) {
        double v = deriv_modulus(spec, deriv, std::polar(r, t));
        return v > 1.0 ? std::log(v) : 0.0;
    });
}

GrowthProfile hardy_classification(const InnerFunctionSpec& spec, int deriv, double p,
                                   const NormsConfig& cfg) {
    require_deriv(deriv);
    if (!(p > 0.0)) throw std::invalid_argument("p must be positive");

    GrowthProfile g;
    g.ceiling_j = truncation_ceiling(spec, cfg);
    for (int j = 1; j <= g.ceiling_j; ++j) {
        double r = 1.0 - std::exp2(-j);
        MeanEstimate m = hardy_mean(spec, deriv, p, r, cfg);
        g.radii.push_back(r);
        g.means.push_back(m.value);
        g.quadrature_converged = g.quadrature_converged && m.converged;
    }
    if (g.means.empty()) return g;
    g.value = g.means.back();

    std::vector<double> increments;
    for (size_t i = 1; i < g.means.size(); ++i)
        increments.push_back(g.means[i] - g.means[i - 1]);
    classify_sequence(g, increments, g.value, cfg);
    return g;
}

GrowthProfile bergman_norm(const InnerFunctionSpec& spec, int deriv, double p, double alpha,
                           const NormsConfig& cfg) {
    require_deriv(deriv);
    if (!(p > 0.0)) throw std::invalid_argument("p must be positive");
    if (!(alpha > -1.0)) throw std::invalid_argument("weight exponent must exceed -1");

    // antiderivative of u^alpha (1 - u) for u = 1 - rho
    auto F = [alpha](double u) {
        return std::pow(u, alpha + 1.0) / (alpha + 1.0) - std::pow(u, alpha + 2.0) / (alpha + 2.0);
    };

    GrowthProfile g;
    g.ceiling_j = truncation_ceiling(spec, cfg);
    for (int j = 0; j < g.ceiling_j; ++j) {
        double a = j == 0 ? 0.0 : 1.0 - std::exp2(-j);
        double b = 1.0 - std::exp2(-(j + 1));
        double mid = 0.5 * (a + b);
        double weight = kTwoPi * (F(1.0 - a) - F(1.0 - b));
        MeanEstimate m = raw_power_mean(spec, deriv, p, mid, cfg);
        g.radii.push_back(mid);
        g.means.push_back(m.value * weight);
        g.quadrature_converged = g.quadrature_converged && m.converged;
        g.value += m.value * weight;
    }
    if (g.means.empty()) return g;
    classify_sequence(g, g.means, g.value, cfg);
    return g;
}

EquivalenceReport equivalence_report(const InnerFunctionSpec& spec, double p,
                                     const std::vector<double>& sweep_alphas,
                                     const NormsConfig& cfg) {
    if (!(p > 0.0)) throw std::invalid_argument("p must be positive");
    EquivalenceReport rep;
    rep.hardy_first = hardy_classification(spec, 1, p, cfg).classification;
    rep.bergman_first = bergman_norm(spec, 1, 2.0 * p, p - 1.0, cfg).classification;
    rep.bergman_second = bergman_norm(spec, 2, p, p - 1.0, cfg).classification;
    rep.agree = rep.hardy_first == rep.bergman_first && rep.bergman_first == rep.bergman_second;
    for (double a : sweep_alphas)
        rep.alpha_sweep.emplace_back(a, bergman_norm(spec, 1, 2.0 * p, a, cfg).classification);
    return rep;
}

RadialComparison radial_boundary_comparison(const InnerFunctionSpec& spec, double p, double alpha,
                                            const std::vector<double>& thetas,
                                            const NormsConfig& cfg) {
    if (!(p > 0.0)) throw std::invalid_argument("p must be positive");
    if (!(alpha > -1.0)) throw std::invalid_argument("weight exponent must exceed -1");
    if (thetas.empty()) throw std::invalid_argument("need at least one boundary angle");
    double q = p + alpha + 1.0;
    if (!(q > 0.0)) throw std::invalid_argument("integrand exponent must be positive");

    int ceiling = truncation_ceiling(spec, cfg);
    if (ceiling < 1) throw std::runtime_error("truncation too coarse for the radial integral");

    // integral over [lo, 1) of |f'(rho e^it)|^q (1-rho)^alpha drho on dyadic
    // intervals, m midpoint panels each, weights integrated exactly; the
    // sliver beyond the truncation ceiling uses the boundary modulus.
    auto integral = [&](double t, double bd, int m) {
        double acc = 0.0;
        for (int j = 0; j < ceiling; ++j) {
            double a = j == 0 ? 0.0 : 1.0 - std::exp2(-j);
            double b = 1.0 - std::exp2(-(j + 1));
            double h = (b - a) / m;
            for (int s = 0; s < m; ++s) {
                double lo = a + h * s;
                double w =
                    (std::pow(1.0 - lo, alpha + 1.0) - std::pow(1.0 - lo - h, alpha + 1.0)) /
                    (alpha + 1.0);
                double gmid = deriv_modulus(spec, 1, std::polar(lo + 0.5 * h, t));
                acc += std::pow(gmid, q) * w;
            }
        }
        double tail_w = std::pow(std::exp2(-ceiling), alpha + 1.0) / (alpha + 1.0);
        return acc + std::pow(bd, q) * tail_w;
    };

    std::vector<double> base(thetas.size(), -1.0), refined(thetas.size(), -1.0);
    parallel_for(thetas.size(), [&](std::size_t i) {
        double bd;
        try {
            bd = boundary_derivative_modulus(spec, std::polar(1.0, thetas[i]));
        } catch (const std::domain_error&) {
            return; // inside the spectrum exclusion, slot stays skipped
        }
        double rhs = std::pow(bd, p);
        base[i] = integral(thetas[i], bd, cfg.radial_m) / rhs;
        refined[i] = integral(thetas[i], bd, 2 * cfg.radial_m) / rhs;
    });

    RadialComparison out;
    double ref_stat = 0.0;
    for (size_t i = 0; i < thetas.size(); ++i) {
        if (base[i] < 0.0) {
            ++out.skipped;
            continue;
        }
        out.values.push_back(base[i]);
        out.statistic = std::max(out.statistic, base[i]);
        ref_stat = std::max(ref_stat, refined[i]);
    }
    if (out.values.empty()) throw std::invalid_argument("every angle fell inside the exclusion");
    out.refined_statistic = ref_stat;
    out.stable = std::abs(out.refined_statistic - out.statistic) < cfg.stable_rel * out.statistic;
    return out;
}

} // namespace innerfn
