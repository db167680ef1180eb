#pragma once

#include <cmath>

namespace halfstep {

// Forward-mode dual number: value and first derivative.
struct Dual {
    double val{0.0};
    double der{0.0};

    static constexpr Dual constant(double v) { return {v, 0.0}; }
    static constexpr Dual variable(double v) { return {v, 1.0}; }

    constexpr bool operator==(const Dual&) const = default;
};

constexpr Dual operator-(Dual a) { return {-a.val, -a.der}; }
constexpr Dual operator+(Dual a, Dual b) { return {a.val + b.val, a.der + b.der}; }
constexpr Dual operator-(Dual a, Dual b) { return {a.val - b.val, a.der - b.der}; }
constexpr Dual operator*(Dual a, Dual b) { return {a.val * b.val, a.der * b.val + a.val * b.der}; }
constexpr Dual operator/(Dual a, Dual b) {
    return {a.val / b.val, (a.der * b.val - a.val * b.der) / (b.val * b.val)};
}

inline Dual abs(Dual a) {
    const double s = a.val > 0.0 ? 1.0 : (a.val < 0.0 ? -1.0 : 0.0);
    return {std::fabs(a.val), s * a.der};
}
inline Dual sqrt(Dual a) {
    const double r = std::sqrt(a.val);
    return {r, a.der / (2.0 * r)};
}
// Defined for all reals; the derivative blows up at 0.
inline Dual cbrt(Dual a) {
    const double r = std::cbrt(a.val);
    return {r, a.der / (3.0 * r * r)};
}
inline Dual exp(Dual a) {
    const double e = std::exp(a.val);
    return {e, e * a.der};
}
inline Dual log(Dual a) { return {std::log(a.val), a.der / a.val}; }
inline Dual sin(Dual a) { return {std::sin(a.val), std::cos(a.val) * a.der}; }
inline Dual cos(Dual a) { return {std::cos(a.val), -std::sin(a.val) * a.der}; }
inline Dual tan(Dual a) {
    const double t = std::tan(a.val);
    return {t, (1.0 + t * t) * a.der};
}

/// Value is std::pow(a.val, b.val) so it matches plain evaluation bit for bit.
/// A constant exponent uses the power rule and never touches log(a), which keeps
/// negative bases with integer exponents finite.
inline Dual pow(Dual a, Dual b) {
    const double v = std::pow(a.val, b.val);
    double d = 0.0;
    if (a.der != 0.0) d += b.val * std::pow(a.val, b.val - 1.0) * a.der;
    if (b.der != 0.0) d += v * std::log(a.val) * b.der;
    return {v, d};
}

}  // namespace halfstep
