#pragma once

#include <optional>
#include <vector>

#include "innerfn/geometry.hpp"

namespace innerfn {

enum class ZeroKind { Power, LogPower, Geometric, DoubleExp, Tangential, Explicit };

struct BlaschkeSum {
    double partial = 0.0;    // sum of (1 - |z_n|) over the generated zeros
    double tail_bound = 0.0; // bound on the omitted remainder of the series
};

/* A finite batch of Blaschke zeros drawn from one of the named sequences or
 * given explicitly.  Generated moduli are non-decreasing, every zero lies in
 * the open disc and is nonzero, and explicit lists are stable-sorted by
 * modulus.  Generation starts at the smallest index whose formula value lies
 * in (0,1); in particular power and tangential skip the index-1 origin and
 * logpower skips indices with n (log n)^alpha <= 1. */
class ZeroFamily {
  public:
    static ZeroFamily power(double alpha, int count, double rotation = 0.0);
    static ZeroFamily logpower(double alpha, int count, double rotation = 0.0);
    static ZeroFamily geometric(double alpha, int count, double rotation = 0.0);
    static ZeroFamily double_exp(int count, double rotation = 0.0); // count <= 10
    static ZeroFamily tangential(double alpha, double gamma, int count, double rotation = 0.0);
    static ZeroFamily explicit_list(const std::vector<Complex>& zs, double rotation = 0.0);

    ZeroKind kind() const { return kind_; }
    double alpha() const { return alpha_; }
    double gamma() const { return gamma_; }
    int count() const { return static_cast<int>(zeros_.size()); }
    double rotation() const { return rotation_; }
    const std::vector<Zero>& zeros() const { return zeros_; }

    // First generated index (2 for power/tangential, n with n(log n)^alpha > 1
    // for logpower, 1 otherwise).
    int first_index() const { return first_index_; }

    BlaschkeSum blaschke_sum() const;

    // Angle of the boundary accumulation point of the full sequence, when the
    // family has one (all generated kinds do; finite explicit lists may not).
    std::optional<double> accumulation_angle() const;

    // Same family with twice the zero count (refinement probe). Explicit
    // lists cannot be extended and are returned unchanged.
    ZeroFamily doubled() const;

  private:
    ZeroFamily() = default;

    ZeroKind kind_ = ZeroKind::Explicit;
    double alpha_ = 0.0;
    double gamma_ = 0.0;
    double rotation_ = 0.0;
    int requested_count_ = 0;
    int first_index_ = 1;
    std::vector<Zero> zeros_;
};

enum class AtomKind { DyadicSquare, Explicit };

struct Atom {
    double theta; // radians
    double gamma; // point mass, > 0
};

/* Atoms of a purely atomic singular measure.  The dyadic family is
 * theta_0 = 0 with mass gamma0 and theta_n = 2^-n with mass n^-2. */
class AtomFamily {
  public:
    static AtomFamily dyadic_square(int count, double gamma0);
    static AtomFamily explicit_list(const std::vector<Atom>& atoms);

    AtomKind kind() const { return kind_; }
    int count() const { return static_cast<int>(atoms_.size()); }
    double gamma0() const { return gamma0_; }
    const std::vector<Atom>& atoms() const { return atoms_; }

    double mass() const;      // sum of generated masses
    double tail_bound() const; // bound on the omitted mass (0 for explicit)

    AtomFamily doubled() const;

    // Angles where the measure charges points or where atoms accumulate.
    std::vector<double> spectrum_angles() const;

  private:
    AtomFamily() = default;

    AtomKind kind_ = AtomKind::Explicit;
    double gamma0_ = 0.0;
    int requested_count_ = 0;
    std::vector<Atom> atoms_;
};

} // namespace innerfn
