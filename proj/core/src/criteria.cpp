#include "innerfn/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace innerfn {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kUnitTol = 1e-12;

double angular_distance(double a, double b) { return std::abs(std::remainder(a - b, kTwoPi)); }

double circle_angle(Complex zeta) {
    if (std::abs(std::abs(zeta) - 1.0) > kUnitTol)
        throw std::domain_error("boundary point is not on the unit circle");
    return std::arg(zeta);
}

// 1-based inclusive index window [ceil(lo*n), floor(hi*n)] clamped to [1, n],
// returned 0-based; never empty.
std::pair<int, int> index_window(int n, double lo, double hi) {
    int a = static_cast<int>(std::ceil(lo * n));
    int b = static_cast<int>(std::floor(hi * n));
    a = std::max(1, a);
    b = std::min(n, std::max(a, b));
    return {a - 1, b - 1};
}

double window_min(const std::vector<double>& v, std::pair<int, int> w) {
    double m = v[w.first];
    for (int i = w.first + 1; i <= w.second; ++i) m = std::min(m, v[i]);
    return m;
}

double window_max(const std::vector<double>& v, std::pair<int, int> w) {
    double m = v[w.first];
    for (int i = w.first + 1; i <= w.second; ++i) m = std::max(m, v[i]);
    return m;
}

double window_mean(const std::vector<double>& v, std::pair<int, int> w) {
    double s = 0.0;
    for (int i = w.first; i <= w.second; ++i) s += v[i];
    return s / (w.second - w.first + 1);
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

void require_sorted_moduli(const std::vector<Zero>& zeros) {
    for (size_t i = 1; i < zeros.size(); ++i)
        if (zeros[i].deficit > zeros[i - 1].deficit)
            throw std::invalid_argument("zeros must be sorted by non-decreasing modulus");
}

// Thin product with factor n removed, on the deficit representation.
double thin_product(const std::vector<Zero>& zeros, size_t n) {
    double p = 1.0;
    for (size_t k = 0; k < zeros.size(); ++k)
        if (k != n) p *= pseudohyperbolic(zeros[k], zeros[n]);
    return p;
}

Verdict ratio_verdict(double stat, const CriteriaConfig& cfg) {
    if (stat > cfg.satisfied_min) return Verdict::Satisfied;
    if (stat <= cfg.violated_max) return Verdict::Violated;
    return Verdict::Inconclusive;
}

struct FrostmanTerms {
    std::vector<double> terms;
    double origin_term = 0.0; // 1 when the family's omitted index-1 origin is charged
};

FrostmanTerms frostman_terms(const std::vector<Zero>& zeros, double t, bool with_origin) {
    FrostmanTerms out;
    if (with_origin) out.origin_term = 1.0; // (1 - |0|) / |xi - 0| for unit xi
    out.terms.reserve(zeros.size());
    for (const Zero& z : zeros)
        out.terms.push_back(z.deficit / std::sqrt(circle_distance_sq(t, z)));
    return out;
}

CriterionResult frostman_result(const FrostmanTerms& ft, double tail_bound,
                                const CriteriaConfig& cfg) {
    CriterionResult r;
    r.name = "frostman_sum";
    double acc = ft.origin_term;
    if (ft.origin_term > 0.0) r.values.push_back(acc);
    for (double t : ft.terms) r.values.push_back(acc += t);
    if (r.values.empty()) throw std::invalid_argument("frostman_sum needs at least one zero");
    r.statistic = r.values.back();

    size_t n = ft.terms.size();
    double last = n ? ft.terms[n - 1] : ft.origin_term;
    double mid = n ? ft.terms[(n - 1) / 2] : ft.origin_term;
    double decay = mid > 0.0 ? last / mid : 0.0;
    if (std::isfinite(tail_bound) && tail_bound < cfg.frostman_tail_frac * r.statistic)
        r.verdict = Verdict::Satisfied;
    else if (decay >= cfg.frostman_decay)
        r.verdict = Verdict::Violated;
    else
        r.verdict = Verdict::Inconclusive;

    r.metadata.emplace_back("tail_bound", tail_bound);
    r.metadata.emplace_back("origin_term", ft.origin_term);
    r.metadata.emplace_back("last_term", last);
    r.metadata.emplace_back("decay", decay);
    return r;
}

// Max of |Theta''|/|Theta'|^2 over the sample angles outside the excluded arcs.
double ratio_statistic(const InnerFunctionSpec& spec, int samples, double exclusion,
                       const std::vector<double>& spectrum_angles, std::vector<double>* values,
                       int* excluded) {
    double stat = 0.0;
    int skipped = 0;
    for (int j = 0; j < samples; ++j) {
        double t = kTwoPi * j / samples;
        bool near = false;
        for (double a : spectrum_angles)
            if (angular_distance(t, a) < exclusion) {
                near = true;
                break;
            }
        if (near) {
            ++skipped;
            continue;
        }
        Jet2 jet = eval_inner(spec, std::polar(1.0, t));
        double den = std::norm(jet.df);
        if (den == 0.0) {
            ++skipped;
            continue;
        }
        double v = std::abs(jet.d2f) / den;
        if (values) values->push_back(v);
        stat = std::max(stat, v);
    }
    if (excluded) *excluded = skipped;
    if (samples > 0 && skipped == samples)
        throw std::invalid_argument("exclusion arcs cover every boundary sample");
    return stat;
}

std::vector<double> atom_distances(const AtomFamily& atoms, double t) {
    std::vector<double> d;
    d.reserve(atoms.count());
    for (const Atom& a : atoms.atoms()) d.push_back(std::sqrt(chord_sq(t, a.theta)));
    return d;
}

double atom_condition_value(const AtomFamily& atoms, Complex zeta) {
    double t = circle_angle(zeta);
    double lhs = 0.0, rhs = 0.0;
    std::vector<double> d = atom_distances(atoms, t);
    const std::vector<Atom>& as = atoms.atoms();
    for (size_t i = as.size(); i-- > 0;) {
        if (d[i] == 0.0) throw std::domain_error("boundary point coincides with an atom");
        lhs += as[i].gamma / (d[i] * d[i] * d[i]);
        rhs += as[i].gamma / (d[i] * d[i]);
    }
    return lhs / (rhs * rhs);
}

double zero_condition_value(const std::vector<Zero>& zeros, Complex zeta) {
    double t = circle_angle(zeta);
    double lhs = 0.0, rhs = 0.0;
    for (size_t i = zeros.size(); i-- > 0;) {
        double d2 = circle_distance_sq(t, zeros[i]);
        if (d2 == 0.0) throw std::domain_error("boundary point coincides with a zero's argument");
        double num = zeros[i].deficit * (2.0 - zeros[i].deficit); // 1 - |z|^2
        lhs += num / (d2 * std::sqrt(d2));
        rhs += num / d2;
    }
    return lhs / (rhs * rhs);
}

} // namespace

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Satisfied: return "satisfied";
    case Verdict::Violated: return "violated";
    default: return "inconclusive";
    }
}

double CriterionResult::meta(const std::string& key) const {
    for (const auto& kv : metadata)
        if (kv.first == key) return kv.second;
    throw std::out_of_range("no metadata entry named " + key);
}

std::vector<double> SpectrumEstimate::angles() const {
    std::vector<double> out;
    out.reserve(points.size());
    for (const SpectrumPoint& p : points) out.push_back(p.angle);
    return out;
}

SpectrumEstimate spectrum(const InnerFunctionSpec& spec, const CriteriaConfig& cfg) {
    std::vector<SpectrumPoint> raw;
    auto add = [&raw](double angle, bool atom, bool accumulation) {
        double a = std::remainder(angle, kTwoPi);
        raw.push_back({a, std::polar(1.0, a), atom, accumulation});
    };

    for (const ZeroFamily& f : spec.blaschke) {
        if (auto a = f.accumulation_angle()) {
            add(*a, false, true);
            continue;
        }
        // Explicit list: clusters of zeros close to the circle.
        std::vector<double> args;
        for (const Zero& z : f.zeros())
            if (z.deficit < cfg.cluster_tol) args.push_back(std::remainder(z.arg, kTwoPi));
        std::sort(args.begin(), args.end());
        for (size_t i = 0; i < args.size();) {
            size_t j = i + 1;
            while (j < args.size() && args[j] - args[j - 1] < cfg.cluster_tol) ++j;
            add(args[i + (j - i) / 2], false, true);
            i = j;
        }
    }
    for (const AtomFamily& f : spec.singular) {
        for (const Atom& a : f.atoms()) add(a.theta, true, false);
        if (f.kind() == AtomKind::DyadicSquare) add(0.0, false, true);
    }

    std::sort(raw.begin(), raw.end(),
              [](const SpectrumPoint& a, const SpectrumPoint& b) { return a.angle < b.angle; });
    SpectrumEstimate out;
    for (const SpectrumPoint& p : raw) {
        if (!out.points.empty() && p.angle - out.points.back().angle < cfg.cluster_tol) {
            out.points.back().atom |= p.atom;
            out.points.back().accumulation |= p.accumulation;
        } else {
            out.points.push_back(p);
        }
    }
    if (out.points.size() > 1 &&
        out.points.front().angle + kTwoPi - out.points.back().angle < cfg.cluster_tol) {
        out.points.front().atom |= out.points.back().atom;
        out.points.front().accumulation |= out.points.back().accumulation;
        out.points.pop_back();
    }
    return out;
}

CriterionResult tail_ratio(const std::vector<Zero>& zeros, const CriteriaConfig& cfg) {
    if (zeros.empty()) throw std::invalid_argument("tail_ratio needs at least one zero");
    require_sorted_moduli(zeros);

    int n = static_cast<int>(zeros.size());
    CriterionResult r;
    r.name = "tail_ratio";
    r.values.assign(n, 0.0);
    // Walk tie groups right to left so each r_n sums strictly larger moduli
    // only, accumulating the smallest deficits first.
    double acc = 0.0;
    for (int hi = n; hi > 0;) {
        int lo = hi;
        while (lo > 1 && zeros[lo - 2].deficit == zeros[hi - 1].deficit) --lo;
        for (int i = lo - 1; i < hi; ++i) r.values[i] = acc / zeros[i].deficit;
        for (int i = hi - 1; i >= lo - 1; --i) acc += zeros[i].deficit;
        hi = lo - 1;
    }

    auto w = index_window(n, cfg.window_lo, cfg.window_hi);
    r.statistic = window_min(r.values, w);
    r.verdict = ratio_verdict(r.statistic, cfg);
    r.metadata.emplace_back("window_first", w.first + 1);
    r.metadata.emplace_back("window_last", w.second + 1);
    return r;
}

CriterionResult step_ratio(const std::vector<Zero>& zeros, const CriteriaConfig& cfg) {
    if (zeros.size() < 2) throw std::invalid_argument("step_ratio needs at least two zeros");
    for (size_t i = 1; i < zeros.size(); ++i)
        if (zeros[i].deficit >= zeros[i - 1].deficit)
            throw std::invalid_argument("step_ratio requires strictly increasing moduli");

    CriterionResult r;
    r.name = "step_ratio";
    r.values.reserve(zeros.size() - 1);
    for (size_t i = 0; i + 1 < zeros.size(); ++i)
        r.values.push_back(zeros[i + 1].deficit / zeros[i].deficit);

    auto w = index_window(static_cast<int>(r.values.size()), cfg.window_lo, cfg.window_hi);
    r.statistic = window_min(r.values, w);
    r.verdict = ratio_verdict(r.statistic, cfg);
    r.metadata.emplace_back("window_first", w.first + 1);
    r.metadata.emplace_back("window_last", w.second + 1);
    return r;
}

CriterionResult frostman_sum(const std::vector<Zero>& zeros, Complex xi,
                             const CriteriaConfig& cfg) {
    double t = circle_angle(xi);
    return frostman_result(frostman_terms(zeros, t, false),
                           std::numeric_limits<double>::infinity(), cfg);
}

CriterionResult frostman_sum(const ZeroFamily& family, Complex xi, const CriteriaConfig& cfg) {
    double t = circle_angle(xi);
    bool skips_origin =
        family.kind() == ZeroKind::Power || family.kind() == ZeroKind::Tangential;
    FrostmanTerms ft = frostman_terms(family.zeros(), t, skips_origin);

    double tail = std::numeric_limits<double>::infinity();
    if (auto acc = family.accumulation_angle()) {
        int last = family.first_index() + family.count() - 1;
        if (family.kind() == ZeroKind::Tangential && angular_distance(t, *acc) < 1e-9) {
            // At the vertex the terms are n^(alpha/gamma - alpha) to within the
            // construction tolerance; bound the tail by the integral.
            double s = family.alpha() / family.gamma() - family.alpha();
            tail = std::pow(static_cast<double>(last), s + 1.0) / (-s - 1.0);
        } else if (angular_distance(t, *acc) >= 1e-9) {
            // Away from the accumulation point the omitted zeros stay at least
            // chord - d_last from xi, where d_last bounds their distance to the
            // accumulation point.
            double chord = std::sqrt(chord_sq(t, *acc));
            double d_last = std::sqrt(circle_distance_sq(*acc, family.zeros().back()));
            if (chord > 2.0 * d_last)
                tail = family.blaschke_sum().tail_bound / (chord - d_last);
        }
    } else {
        tail = 0.0; // explicit lists are exact
    }
    return frostman_result(ft, tail, cfg);
}

CriterionResult thin_test(const std::vector<Zero>& zeros, const CriteriaConfig& cfg) {
    if (zeros.empty()) throw std::invalid_argument("thin_test needs at least one zero");
    CriterionResult r;
    r.name = "thin_test";
    r.values.reserve(zeros.size());
    for (size_t n = 0; n < zeros.size(); ++n) r.values.push_back(thin_product(zeros, n));

    auto w = index_window(static_cast<int>(zeros.size()), cfg.thin_window_lo, 1.0);
    r.statistic = window_min(r.values, w);
    if (r.statistic > cfg.thin_satisfied)
        r.verdict = Verdict::Satisfied;
    else if (r.statistic < cfg.thin_violated)
        r.verdict = Verdict::Violated;
    else
        r.verdict = Verdict::Inconclusive;
    r.metadata.emplace_back("window_first", w.first + 1);
    r.metadata.emplace_back("window_last", w.second + 1);
    return r;
}

double uniform_separation(const std::vector<Zero>& zeros) {
    if (zeros.empty()) throw std::invalid_argument("uniform_separation needs at least one zero");
    double m = 1.0;
    for (size_t n = 0; n < zeros.size(); ++n) m = std::min(m, thin_product(zeros, n));
    return m;
}

CriterionResult second_derivative_ratio(const InnerFunctionSpec& spec, int samples,
                                        double exclusion, const CriteriaConfig& cfg) {
    if (samples < 1) throw std::invalid_argument("need at least one boundary sample");
    if (exclusion < 0.0) throw std::invalid_argument("exclusion must be non-negative");
    std::vector<double> angles = spec.spectrum_angles();

    CriterionResult r;
    r.name = "second_derivative_ratio";
    int excluded = 0;
    r.statistic = ratio_statistic(spec, samples, exclusion, angles, &r.values, &excluded);

    InnerFunctionSpec refined = spec.doubled();
    double stat2 =
        ratio_statistic(refined, 2 * samples, exclusion, refined.spectrum_angles(), nullptr, nullptr);
    double growth = r.statistic > 0.0 ? stat2 / r.statistic : (stat2 > 0.0 ? INFINITY : 1.0);
    r.verdict = growth < cfg.stability_factor ? Verdict::Satisfied : Verdict::Inconclusive;

    r.metadata.emplace_back("samples", samples);
    r.metadata.emplace_back("excluded", excluded);
    r.metadata.emplace_back("refined_statistic", stat2);
    r.metadata.emplace_back("growth", growth);
    if (!angles.empty()) {
        // How fast |Theta'| climbs as the excluded arc around the first
        // spectrum point is approached from outside.
        double a = angles.front();
        double far = std::min(64.0 * exclusion, 0.5 * kPi);
        try {
            double near_v = boundary_derivative_modulus(spec, std::polar(1.0, a + exclusion),
                                                        0.5 * exclusion);
            double far_v =
                boundary_derivative_modulus(spec, std::polar(1.0, a + far), 0.5 * exclusion);
            r.metadata.emplace_back("probe_growth", near_v / far_v);
        } catch (const std::domain_error&) {
            // Another spectrum point sits inside the probe ladder; skip it.
        }
    }
    return r;
}

CriterionResult sum_condition(const std::vector<Zero>& zeros, const std::vector<Complex>& zetas) {
    if (zeros.empty() || zetas.empty())
        throw std::invalid_argument("sum_condition needs zeros and boundary points");
    CriterionResult r;
    r.name = "sum_condition";
    r.values.reserve(zetas.size());
    for (Complex zeta : zetas) r.values.push_back(zero_condition_value(zeros, zeta));
    r.statistic = *std::max_element(r.values.begin(), r.values.end());
    r.verdict = Verdict::Inconclusive;
    return r;
}

CriterionResult sum_condition(const ZeroFamily& family, const std::vector<Complex>& zetas,
                              const CriteriaConfig& cfg) {
    CriterionResult r = sum_condition(family.zeros(), zetas);
    CriterionResult fine = sum_condition(family.doubled().zeros(), zetas);
    double growth = r.statistic > 0.0 ? fine.statistic / r.statistic : 1.0;
    r.verdict = growth < cfg.stability_factor ? Verdict::Satisfied : Verdict::Inconclusive;
    r.metadata.emplace_back("refined_statistic", fine.statistic);
    r.metadata.emplace_back("growth", growth);
    return r;
}

CriterionResult atom_gap_ratio(const AtomFamily& atoms, const CriteriaConfig& cfg) {
    const std::vector<Atom>& as = atoms.atoms();
    int n = atoms.count();
    if (n < 3) throw std::invalid_argument("atom_gap_ratio needs at least three atoms");
    for (int i = 2; i < n; ++i)
        if (as[i].theta >= as[i - 1].theta)
            throw std::invalid_argument("atoms must decrease strictly toward the base atom");
    if (as[0].theta >= as[n - 1].theta)
        throw std::invalid_argument("base atom must sit below the decreasing tail");

    CriterionResult r;
    r.name = "atom_gap_ratio";
    r.values.reserve(n - 2);
    for (int i = 1; i + 1 < n; ++i)
        r.values.push_back(std::abs(as[i - 1].theta - as[i + 1].theta) /
                           (as[i].gamma * as[i].gamma));

    int m = static_cast<int>(r.values.size());
    auto w2 = index_window(m, cfg.window_lo, cfg.window_hi);
    auto w1 = index_window(m, cfg.window_lo - (cfg.window_hi - cfg.window_lo), cfg.window_lo);
    if (w1.second >= w2.first) w1.second = std::max(w1.first, w2.first - 1);

    double m2 = window_mean(r.values, w2);
    double m1 = window_mean(r.values, w1);
    double growth = m1 > 0.0 ? m2 / m1 : (m2 > 0.0 ? INFINITY : 1.0);
    double med = median(r.values);
    double wmax = window_max(r.values, w2);
    r.statistic = wmax;
    if (growth >= cfg.atom_gap_growth)
        r.verdict = Verdict::Violated;
    else if (growth <= 1.0 || wmax <= cfg.atom_gap_median_factor * med)
        r.verdict = Verdict::Satisfied;
    else
        r.verdict = Verdict::Inconclusive;

    r.metadata.emplace_back("window_mean", m2);
    r.metadata.emplace_back("previous_mean", m1);
    r.metadata.emplace_back("growth", growth);
    r.metadata.emplace_back("median", med);
    return r;
}

CriterionResult atom_sum_condition(const AtomFamily& atoms, const std::vector<Complex>& zetas) {
    if (zetas.empty()) throw std::invalid_argument("atom_sum_condition needs boundary points");
    CriterionResult r;
    r.name = "atom_sum_condition";
    r.values.reserve(zetas.size());
    for (Complex zeta : zetas) r.values.push_back(atom_condition_value(atoms, zeta));
    r.statistic = *std::max_element(r.values.begin(), r.values.end());
    r.verdict = Verdict::Inconclusive;
    return r;
}

CriterionResult atom_sum_condition(const AtomFamily& atoms, const std::vector<Complex>& zetas,
                                   const CriteriaConfig& cfg, bool with_doubling) {
    CriterionResult r = atom_sum_condition(atoms, zetas);
    if (!with_doubling) return r;
    CriterionResult fine = atom_sum_condition(atoms.doubled(), zetas);
    double growth = r.statistic > 0.0 ? fine.statistic / r.statistic : 1.0;
    r.verdict = growth < cfg.stability_factor ? Verdict::Satisfied : Verdict::Inconclusive;
    r.metadata.emplace_back("refined_statistic", fine.statistic);
    r.metadata.emplace_back("growth", growth);
    return r;
}

std::vector<Complex> points_between_atoms(const AtomFamily& atoms, int m) {
    if (m < 1) throw std::invalid_argument("need at least one point");
    std::vector<double> angles;
    angles.reserve(atoms.count());
    for (const Atom& a : atoms.atoms()) {
        double t = std::fmod(a.theta, kTwoPi);
        if (t < 0.0) t += kTwoPi;
        angles.push_back(t);
    }
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end()), angles.end());

    size_t g = angles.size();
    std::vector<double> width(g);
    for (size_t i = 0; i < g; ++i) {
        double next = i + 1 < g ? angles[i + 1] : angles[0] + kTwoPi;
        width[i] = next - angles[i];
    }

    std::vector<int> alloc(g);
    int total = 0;
    for (size_t i = 0; i < g; ++i) total += alloc[i] = std::max(1, (int)std::lround(m * width[i] / kTwoPi));
    auto widest_adjustable = [&](bool shrink) {
        size_t best = g;
        for (size_t i = 0; i < g; ++i) {
            if (shrink && alloc[i] < 2) continue;
            if (best == g || width[i] > width[best]) best = i;
        }
        return best;
    };
    while (total > m) {
        size_t i = widest_adjustable(true);
        if (i == g) break; // every gap keeps one point even if that exceeds m
        --alloc[i], --total;
    }
    while (total < m) ++alloc[widest_adjustable(false)], ++total;

    std::vector<Complex> out;
    out.reserve(total);
    // Offset 0.382 keeps the points off gap midpoints, which for dyadic atom
    // sequences are atoms of the refined family.
    for (size_t i = 0; i < g; ++i)
        for (int j = 0; j < alloc[i]; ++j)
            out.push_back(std::polar(1.0, angles[i] + width[i] * (j + 0.382) / alloc[i]));
    return out;
}

CriterionResult schwarz_pick_ratio(const InnerFunctionSpec& spec, int order,
                                   const std::vector<Complex>& points,
                                   const CriteriaConfig& cfg) {
    if (order != 1 && order != 2) throw std::invalid_argument("order must be 1 or 2");
    if (points.empty()) throw std::invalid_argument("schwarz_pick_ratio needs interior points");

    auto stat_on = [order, &points](const InnerFunctionSpec& s, std::vector<double>* values,
                                    int* skipped_out) {
        double stat = 0.0;
        int skipped = 0;
        for (Complex z : points) {
            double az = std::abs(z);
            if (az >= 1.0) throw std::domain_error("schwarz_pick_ratio points must be interior");
            Jet2 jet = eval_inner(s, z);
            double gap = 1.0 - std::abs(jet.f);
            if (gap < 1e-12) {
                ++skipped;
                continue;
            }
            double omz = 1.0 - az;
            Complex d = order == 1 ? jet.df : jet.d2f;
            double v = std::abs(d) * std::pow(omz, order) / std::pow(gap, order);
            if (values) values->push_back(v);
            stat = std::max(stat, v);
        }
        if (skipped_out) *skipped_out = skipped;
        return stat;
    };

    CriterionResult r;
    r.name = "schwarz_pick_ratio";
    int skipped = 0;
    r.statistic = stat_on(spec, &r.values, &skipped);
    double stat2 = stat_on(spec.doubled(), nullptr, nullptr);
    double growth = r.statistic > 0.0 ? stat2 / r.statistic : 1.0;
    r.verdict = growth < cfg.stability_factor ? Verdict::Satisfied : Verdict::Inconclusive;
    r.metadata.emplace_back("order", order);
    r.metadata.emplace_back("skipped", skipped);
    r.metadata.emplace_back("refined_statistic", stat2);
    r.metadata.emplace_back("growth", growth);
    return r;
}

} // namespace innerfn
