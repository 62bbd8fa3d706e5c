#include "asd/geometry.hpp"

#include <algorithm>

namespace asd {

std::vector<std::string> sector_violations(const RingSector& s) {
    std::vector<std::string> out;
    if (!(s.inner_radius >= 0.0))
        out.push_back("inner_radius must be >= 0");
    if (!(s.inner_radius < s.outer_radius))
        out.push_back("inner_radius must be < outer_radius");
    if (!(s.angle_lo >= 0.0))
        out.push_back("angle_lo must be >= 0");
    if (!(s.angle_lo < s.angle_hi))
        out.push_back("angle_lo must be < angle_hi");
    if (!(s.angle_hi <= kTwoPi))
        out.push_back("angle_hi must be <= 2*pi");
    return out;
}

RingSector make_sector(double inner_radius, double outer_radius,
                       double angle_lo, double angle_hi) {
    if (angle_hi > kTwoPi && angle_hi <= kTwoPi + kAngleSlack)
        angle_hi = kTwoPi;
    RingSector s{inner_radius, outer_radius, angle_lo, angle_hi};
    require_valid(s);
    return s;
}

void require_valid(const RingSector& s) {
    // Fast path: all four bounds in one predicate.
    if (s.inner_radius >= 0.0 && s.inner_radius < s.outer_radius &&
        s.angle_lo >= 0.0 && s.angle_lo < s.angle_hi && s.angle_hi <= kTwoPi)
        return;
    const auto violations = sector_violations(s);
    std::string msg = "invalid ring sector:";
    for (const auto& v : violations) msg += " " + v + ";";
    throw ValidationError(msg);
}

bool sector_contains(const RingSector& s, const Point2D& p, double tol) {
    const double r = std::hypot(p.x, p.y);
    if (r < s.inner_radius - tol || r > s.outer_radius + tol) return false;

    double theta = std::atan2(p.y, p.x);
    if (theta < 0.0) theta += kTwoPi;
    // Try the angle as-is and shifted by one turn either way, so sectors
    // touching the positive x-axis accept round-tripped boundary points.
    for (double t : {theta, theta - kTwoPi, theta + kTwoPi}) {
        if (t >= s.angle_lo - tol && t <= s.angle_hi + tol) return true;
    }
    // r == 0 has no defined angle; it belongs to any sector with L1 == 0.
    return r <= tol && s.inner_radius <= tol;
}

BoundingBox sector_bounding_box(const RingSector& s) {
    require_valid(s);
    // Extremes of (r cos t, r sin t) over [L1,L2] x [a1,a2] occur at the
    // four corners or where the trig derivative vanishes, i.e. at interior
    // multiples of pi/2.
    std::vector<double> angles{s.angle_lo, s.angle_hi};
    for (int k = 0; k <= 4; ++k) {
        const double a = k * (kPi / 2.0);
        if (a > s.angle_lo && a < s.angle_hi) angles.push_back(a);
    }
    BoundingBox bb{1e300, -1e300, 1e300, -1e300};
    for (double a : angles) {
        for (double r : {s.inner_radius, s.outer_radius}) {
            const double x = r * std::cos(a);
            const double y = r * std::sin(a);
            bb.x_lo = std::min(bb.x_lo, x);
            bb.x_hi = std::max(bb.x_hi, x);
            bb.y_lo = std::min(bb.y_lo, y);
            bb.y_hi = std::max(bb.y_hi, y);
        }
    }
    return bb;
}

} // namespace asd
