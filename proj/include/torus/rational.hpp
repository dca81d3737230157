#ifndef TORUS_RATIONAL_HPP
#define TORUS_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace torus {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

inline BigInt rat_floor(const Rat& q) {
    BigInt n = numerator(q), d = denominator(q); // d > 0 canonical
    BigInt f = n / d;
    if (n < 0 && f * d != n) --f;
    return f;
}

/// Fractional part in [0,1).
inline Rat rat_frac(const Rat& q) { return q - Rat(rat_floor(q)); }

/// Rendered as "n/d" (or "n" when integral).
inline std::string rat_str(const Rat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

struct RatVec2 {
    Rat x, y;

    RatVec2 operator+(const RatVec2& o) const { return {x + o.x, y + o.y}; }
    RatVec2 operator-(const RatVec2& o) const { return {x - o.x, y - o.y}; }
    RatVec2 operator-() const { return {-x, -y}; }
    bool operator==(const RatVec2& o) const { return x == o.x && y == o.y; }
};

inline Rat dot(const RatVec2& a, const RatVec2& b) { return a.x * b.x + a.y * b.y; }
inline Rat cross(const RatVec2& a, const RatVec2& b) { return a.x * b.y - a.y * b.x; }
inline Rat norm2(const RatVec2& a) { return a.x * a.x + a.y * a.y; }

} // namespace torus

#endif
