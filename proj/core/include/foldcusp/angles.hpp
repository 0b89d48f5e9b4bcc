#ifndef FOLDCUSP_ANGLES_HPP
#define FOLDCUSP_ANGLES_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace foldcusp {

/// Exact rational with small magnitudes; all angles in this library are
/// rational multiples of pi.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rat operator-(const Rat& a) { return Rat(-a.num, a.den); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num * b.num, a.den * b.den);
    }
    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return a.num * b.den < b.num * a.den;
    }

    bool is_integer() const { return den == 1; }
    long long floor() const {
        if (num >= 0) return num / den;
        return -((-num + den - 1) / den);
    }
    long long ceil() const { return -Rat(-num, den).floor(); }

    std::string str() const {
        return den == 1 ? std::to_string(num)
                        : std::to_string(num) + "/" + std::to_string(den);
    }
};

/// Reduce an angle (in units of pi) to the principal branch (-1, 1]:
/// a - 2*ceil((a-1)/2).
inline Rat principal_angle(const Rat& a) {
    const Rat half = Rat(a.num - a.den, 2 * a.den);
    return a - Rat(2 * half.ceil());
}

/// An element of the lifted orthogonal group: det in {+1,-1} together with
/// a real (here: exact rational, units of pi) angle lift.
/// det=+1 is the rotation R(a*pi); det=-1 the reflection about a*pi/2.
struct LiftedOrtho {
    int det = 1;
    Rat a;

    static LiftedOrtho rotation(const Rat& a) { return LiftedOrtho{+1, a}; }
    static LiftedOrtho reflection(const Rat& a) { return LiftedOrtho{-1, a}; }
    static LiftedOrtho identity() { return LiftedOrtho{+1, Rat(0)}; }

    /// outer after inner.
    friend LiftedOrtho compose(const LiftedOrtho& outer, const LiftedOrtho& inner) {
        return LiftedOrtho{outer.det * inner.det,
                           outer.det > 0 ? outer.a + inner.a : outer.a - inner.a};
    }
    LiftedOrtho inverse() const {
        return LiftedOrtho{det, det > 0 ? -a : a};
    }
    /// Same underlying orthogonal matrix (lift ignored).
    bool same_matrix(const LiftedOrtho& o) const {
        if (det != o.det) return false;
        const Rat d = a - o.a;
        return d.den == 1 && d.num % 2 == 0;
    }
    LiftedOrtho normalized() const { return LiftedOrtho{det, principal_angle(a)}; }
};

}  // namespace foldcusp

#endif
