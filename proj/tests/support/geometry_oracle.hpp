#pragma once

// Test-only geometric ground truth: n rational points on the unit circle close
// to the angles of a regular n-gon, with closed-segment intersection decided
// by exact integer orientation tests. Independent of the label predicate.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace dncolor::testing {

/// Homogeneous point (x/w, y/w), w > 0.
struct RationalPoint
{
    __int128 x;
    __int128 y;
    __int128 w;
};

/// Rational parametrisation of the circle: t = p/d maps to
/// ((d^2 - p^2) / (d^2 + p^2), 2pd / (d^2 + p^2)), with t close to tan(theta/2).
inline std::vector<RationalPoint> circle_points(int n, std::int64_t d = 1000)
{
    std::vector<RationalPoint> out;
    std::int64_t previous = INT64_MIN;
    for (int m = 1; m <= n; ++m) {
        const double theta = -std::numbers::pi + 2 * std::numbers::pi * (m - 0.5) / n;
        const auto p = static_cast<std::int64_t>(std::llround(std::tan(theta / 2) * static_cast<double>(d)));
        if (p <= previous) {
            throw std::logic_error("rational circle points collapsed; increase the denominator");
        }
        previous = p;
        const __int128 dd = static_cast<__int128>(d) * d;
        const __int128 pp = static_cast<__int128>(p) * p;
        out.push_back({dd - pp, 2 * static_cast<__int128>(p) * d, dd + pp});
    }
    return out;
}

inline int orientation(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c)
{
    const __int128 det = a.x * (b.y * c.w - b.w * c.y) - a.y * (b.x * c.w - b.w * c.x) + a.w * (b.x * c.y - b.y * c.x);
    return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

inline bool same_point(const RationalPoint& a, const RationalPoint& b)
{
    return a.x * b.w == b.x * a.w && a.y * b.w == b.y * a.w;
}

// For c collinear with a and b: does c lie on the closed segment ab?
inline bool on_segment(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c)
{
    auto between = [](__int128 p, __int128 pw, __int128 q, __int128 qw, __int128 r, __int128 rw) {
        // compare p/pw, r/rw, q/qw with positive weights
        const __int128 lo_p = p * rw;
        const __int128 mid_p = r * pw;
        const __int128 mid_q = r * qw;
        const __int128 hi_q = q * rw;
        return (lo_p <= mid_p && mid_q <= hi_q) || (lo_p >= mid_p && mid_q >= hi_q);
    };
    return between(a.x, a.w, b.x, b.w, c.x, c.w) && between(a.y, a.w, b.y, b.w, c.y, c.w);
}

inline bool closed_segments_intersect(const RationalPoint& p, const RationalPoint& q, const RationalPoint& r,
                                      const RationalPoint& s)
{
    if (same_point(p, r) || same_point(p, s) || same_point(q, r) || same_point(q, s)) {
        return true;
    }
    const int o1 = orientation(p, q, r);
    const int o2 = orientation(p, q, s);
    const int o3 = orientation(r, s, p);
    const int o4 = orientation(r, s, q);
    if (o1 * o2 < 0 && o3 * o4 < 0) {
        return true;
    }
    return (o1 == 0 && on_segment(p, q, r)) || (o2 == 0 && on_segment(p, q, s)) || (o3 == 0 && on_segment(r, s, p)) ||
           (o4 == 0 && on_segment(r, s, q));
}

/// Geometric disjointness of chords (a,b) and (c,d) on the rational circle.
inline bool geometric_disjoint(const std::vector<RationalPoint>& pts, int a, int b, int c, int d)
{
    const auto& at = [&pts](int label) -> const RationalPoint& { return pts[static_cast<std::size_t>(label - 1)]; };
    return !closed_segments_intersect(at(a), at(b), at(c), at(d));
}

} // namespace dncolor::testing
