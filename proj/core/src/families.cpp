#include "innerfn/families.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace innerfn {

namespace {

void check_count(int count) {
    if (count < 1)
        throw std::invalid_argument("ZeroFamily: count must be >= 1");
}

// Smallest-first summation keeps the partial sums of decreasing series exact
// where they can be.
double sum_deficits(const std::vector<Zero>& zs) {
    double s = 0.0;
    for (auto it = zs.rbegin(); it != zs.rend(); ++it) s += it->deficit;
    return s;
}

} // namespace

ZeroFamily ZeroFamily::power(double alpha, int count, double rotation) {
    check_count(count);
    if (alpha <= 1.0)
        throw std::invalid_argument("power family: alpha must be > 1 for a Blaschke sequence");
    ZeroFamily f;
    f.kind_ = ZeroKind::Power;
    f.alpha_ = alpha;
    f.rotation_ = rotation;
    f.requested_count_ = count;
    f.first_index_ = 2; // n = 1 gives the origin
    f.zeros_.reserve(count);
    for (int n = f.first_index_; n < f.first_index_ + count; ++n)
        f.zeros_.push_back(Zero::from_polar(std::pow(n, -alpha), rotation));
    return f;
}

ZeroFamily ZeroFamily::logpower(double alpha, int count, double rotation) {
    check_count(count);
    if (alpha <= 1.0)
        throw std::invalid_argument("logpower family: alpha must be > 1 for a Blaschke sequence");
    ZeroFamily f;
    f.kind_ = ZeroKind::LogPower;
    f.alpha_ = alpha;
    f.rotation_ = rotation;
    f.requested_count_ = count;
    int n = 2;
    while (n * std::pow(std::log(n), alpha) <= 1.0) ++n;
    f.first_index_ = n;
    f.zeros_.reserve(count);
    for (; n < f.first_index_ + count; ++n)
        f.zeros_.push_back(Zero::from_polar(1.0 / (n * std::pow(std::log(n), alpha)), rotation));
    return f;
}

ZeroFamily ZeroFamily::geometric(double alpha, int count, double rotation) {
    check_count(count);
    if (alpha <= 1.0)
        throw std::invalid_argument("geometric family: alpha must be > 1");
    ZeroFamily f;
    f.kind_ = ZeroKind::Geometric;
    f.alpha_ = alpha;
    f.rotation_ = rotation;
    f.requested_count_ = count;
    f.first_index_ = 1;
    f.zeros_.reserve(count);
    for (int n = 1; n <= count; ++n)
        f.zeros_.push_back(Zero::from_polar(std::pow(alpha, -n), rotation));
    return f;
}

ZeroFamily ZeroFamily::double_exp(int count, double rotation) {
    check_count(count);
    // 2^-2^n underflows to zero at n = 11; the point would land on the circle.
    if (count > 10)
        throw std::invalid_argument("doubleexp family: count must be <= 10");
    ZeroFamily f;
    f.kind_ = ZeroKind::DoubleExp;
    f.rotation_ = rotation;
    f.requested_count_ = count;
    f.first_index_ = 1;
    f.zeros_.reserve(count);
    for (int n = 1; n <= count; ++n)
        f.zeros_.push_back(Zero::from_polar(std::exp2(-std::exp2(n)), rotation));
    return f;
}

ZeroFamily ZeroFamily::tangential(double alpha, double gamma, int count, double rotation) {
    check_count(count);
    ZeroFamily f;
    f.kind_ = ZeroKind::Tangential;
    f.alpha_ = alpha;
    f.gamma_ = gamma;
    f.rotation_ = rotation;
    f.requested_count_ = count;
    f.first_index_ = 2; // n = 1 gives the origin
    f.zeros_.reserve(count);
    for (int n = f.first_index_; n < f.first_index_ + count; ++n) {
        Zero z = tangential_zero_polar(n, alpha, gamma);
        if (rotation != 0.0) z = Zero::from_polar(z.deficit, z.arg + rotation);
        f.zeros_.push_back(z);
    }
    return f;
}

ZeroFamily ZeroFamily::explicit_list(const std::vector<Complex>& zs, double rotation) {
    if (zs.empty())
        throw std::invalid_argument("explicit zero list: must contain at least one zero");
    ZeroFamily f;
    f.kind_ = ZeroKind::Explicit;
    f.rotation_ = rotation;
    f.requested_count_ = static_cast<int>(zs.size());
    f.zeros_.reserve(zs.size());
    for (Complex z : zs) {
        if (rotation != 0.0) z *= std::polar(1.0, rotation);
        const double m = std::abs(z);
        if (m == 0.0)
            throw std::invalid_argument("explicit zero list: zeros must be nonzero");
        if (m >= 1.0)
            throw std::invalid_argument("explicit zero list: zeros must lie in the open disc");
        f.zeros_.push_back(Zero::from_point(z));
    }
    std::stable_sort(f.zeros_.begin(), f.zeros_.end(),
                     [](const Zero& a, const Zero& b) { return a.deficit > b.deficit; });
    return f;
}

BlaschkeSum ZeroFamily::blaschke_sum() const {
    BlaschkeSum s;
    s.partial = sum_deficits(zeros_);
    const double last = first_index_ + count() - 1; // index where generation stopped
    switch (kind_) {
        case ZeroKind::Power:
        case ZeroKind::Tangential:
            s.tail_bound = std::pow(last, 1.0 - alpha_) / (alpha_ - 1.0);
            break;
        case ZeroKind::LogPower:
            s.tail_bound = std::pow(std::log(last), 1.0 - alpha_) / (alpha_ - 1.0);
            break;
        case ZeroKind::Geometric:
            s.tail_bound = std::pow(alpha_, -last) / (alpha_ - 1.0);
            break;
        case ZeroKind::DoubleExp:
            s.tail_bound = 2.0 * std::exp2(-std::exp2(last + 1.0));
            break;
        case ZeroKind::Explicit:
            s.tail_bound = 0.0;
            break;
    }
    return s;
}

std::optional<double> ZeroFamily::accumulation_angle() const {
    if (kind_ != ZeroKind::Explicit) return rotation_;
    return std::nullopt;
}

ZeroFamily ZeroFamily::doubled() const {
    const int c = 2 * requested_count_;
    switch (kind_) {
        case ZeroKind::Power: return power(alpha_, c, rotation_);
        case ZeroKind::LogPower: return logpower(alpha_, c, rotation_);
        case ZeroKind::Geometric: return geometric(alpha_, c, rotation_);
        case ZeroKind::DoubleExp: return double_exp(std::min(c, 10), rotation_);
        case ZeroKind::Tangential: return tangential(alpha_, gamma_, c, rotation_);
        case ZeroKind::Explicit: return *this;
    }
    return *this;
}

AtomFamily AtomFamily::dyadic_square(int count, double gamma0) {
    if (count < 1)
        throw std::invalid_argument("dyadic_square: count must be >= 1");
    if (gamma0 <= 0.0)
        throw std::invalid_argument("dyadic_square: gamma0 must be positive");
    AtomFamily f;
    f.kind_ = AtomKind::DyadicSquare;
    f.gamma0_ = gamma0;
    f.requested_count_ = count;
    f.atoms_.reserve(count);
    f.atoms_.push_back({0.0, gamma0});
    for (int n = 1; n < count; ++n)
        f.atoms_.push_back({std::exp2(-n), 1.0 / (static_cast<double>(n) * n)});
    return f;
}

AtomFamily AtomFamily::explicit_list(const std::vector<Atom>& atoms) {
    if (atoms.empty())
        throw std::invalid_argument("explicit atom list: must contain at least one atom");
    AtomFamily f;
    f.kind_ = AtomKind::Explicit;
    f.requested_count_ = static_cast<int>(atoms.size());
    f.atoms_ = atoms;
    for (const Atom& a : f.atoms_)
        if (a.gamma <= 0.0)
            throw std::invalid_argument("explicit atom list: masses must be positive");
    for (size_t i = 0; i < f.atoms_.size(); ++i)
        for (size_t j = i + 1; j < f.atoms_.size(); ++j)
            if (chord_sq(f.atoms_[i].theta, f.atoms_[j].theta) == 0.0)
                throw std::invalid_argument("explicit atom list: atom angles must be distinct");
    return f;
}

double AtomFamily::mass() const {
    double s = 0.0;
    for (auto it = atoms_.rbegin(); it != atoms_.rend(); ++it) s += it->gamma;
    return s;
}

double AtomFamily::tail_bound() const {
    if (kind_ == AtomKind::Explicit) return 0.0;
    // Omitted masses are n^-2 for n >= count; integral comparison.
    return 1.0 / (static_cast<double>(requested_count_) - 1.0);
}

AtomFamily AtomFamily::doubled() const {
    if (kind_ == AtomKind::Explicit) return *this;
    return dyadic_square(2 * requested_count_, gamma0_);
}

std::vector<double> AtomFamily::spectrum_angles() const {
    std::vector<double> out;
    out.reserve(atoms_.size());
    for (const Atom& a : atoms_) out.push_back(a.theta);
    // Dyadic atoms accumulate at angle 0, which is already the theta_0 atom.
    return out;
}

} // namespace innerfn
