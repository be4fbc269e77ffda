#pragma once

#include <complex>

namespace innerfn {

using Complex = std::complex<double>;

// Value and first two derivatives of a holomorphic function at one point.
struct Jet2 {
    Complex f{0.0, 0.0};
    Complex df{0.0, 0.0};
    Complex d2f{0.0, 0.0};

    static Jet2 one() { return {Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0)}; }
    static Jet2 zero() { return {}; }
};

// Leibniz rule, second order: (fg)'' = f''g + 2f'g' + fg''.
inline Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.f = a.f * b.f;
    r.df = a.f * b.df + a.df * b.f;
    r.d2f = a.f * b.d2f + 2.0 * a.df * b.df + a.d2f * b.f;
    return r;
}

inline Jet2& operator*=(Jet2& a, const Jet2& b) {
    a = a * b;
    return a;
}

} // namespace innerfn
