#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "asd/errors.hpp"
#include "asd/rng.hpp"

namespace asd {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Slack accepted above 2*pi for angle inputs typed as rounded decimals
/// (e.g. 6.2832); anything inside it is clamped to exactly 2*pi.
inline constexpr double kAngleSlack = 1e-3;

/// Default boundary tolerance for membership checks, absorbing the
/// polar -> Cartesian -> polar round-trip error.
inline constexpr double kBoundaryTol = 1e-12;

struct Point2D {
    double x = 0.0;
    double y = 0.0;
};

/// Annular sector centred at the origin: radii [inner_radius, outer_radius],
/// angles [angle_lo, angle_hi]. The atomic deployment region; every cluster
/// a plan produces is one of these.
struct RingSector {
    double inner_radius = 0.0; ///< >= 0, < outer_radius
    double outer_radius = 1.0;
    double angle_lo = 0.0;     ///< radians, >= 0, < angle_hi
    double angle_hi = kTwoPi;  ///< radians, <= 2*pi
};

struct BoundingBox {
    double x_lo = 0.0, x_hi = 0.0;
    double y_lo = 0.0, y_hi = 0.0;

    double width() const { return x_hi - x_lo; }
    double height() const { return y_hi - y_lo; }
};

/// Every violated bound of `s`, in words. Empty means valid.
std::vector<std::string> sector_violations(const RingSector& s);

/// Validated constructor. Clamps angle_hi to 2*pi when it overshoots by at
/// most kAngleSlack (rounded-decimal inputs); throws ValidationError naming
/// the violated bound otherwise. Degenerate sectors (zero width or zero
/// angular span) are rejected: their area is zero and the uniform density
/// over them is undefined.
RingSector make_sector(double inner_radius, double outer_radius,
                       double angle_lo, double angle_hi);

/// Throws ValidationError naming the first violated bound.
void require_valid(const RingSector& s);

/// (L2^2 - L1^2) * (a2 - a1) / 2. Strictly positive for a valid sector.
inline double sector_area(const RingSector& s) {
    require_valid(s);
    return (s.outer_radius * s.outer_radius - s.inner_radius * s.inner_radius)
         * (s.angle_hi - s.angle_lo) / 2.0;
}

/// Marginal radial density: 2r / (L2^2 - L1^2) on [L1, L2], 0 outside.
inline double radial_pdf(const RingSector& s, double r) {
    require_valid(s);
    if (r < s.inner_radius || r > s.outer_radius) return 0.0;
    return 2.0 * r
         / (s.outer_radius * s.outer_radius - s.inner_radius * s.inner_radius);
}

/// Radial CDF: (r^2 - L1^2) / (L2^2 - L1^2), clamped to [0,1].
inline double radial_cdf(const RingSector& s, double r) {
    require_valid(s);
    if (r <= s.inner_radius) return 0.0;
    if (r >= s.outer_radius) return 1.0;
    return (r * r - s.inner_radius * s.inner_radius)
         / (s.outer_radius * s.outer_radius - s.inner_radius * s.inner_radius);
}

/// Inverse-CDF radial sample: sqrt(L1^2 + u * (L2^2 - L1^2)) with one
/// uniform draw. The draw lies in (0,1), so the radius lies strictly
/// between the radii.
template <UniformSource R>
double sample_radius(const RingSector& s, R& rng) {
    require_valid(s);
    const double u = rng.next_unit();
    const double lo2 = s.inner_radius * s.inner_radius;
    const double hi2 = s.outer_radius * s.outer_radius;
    return std::sqrt(lo2 + u * (hi2 - lo2));
}

/// Uniform angle a1 + v * (a2 - a1) with one draw, independent of the
/// radius draw.
template <UniformSource R>
double sample_angle(const RingSector& s, R& rng) {
    require_valid(s);
    const double v = rng.next_unit();
    return s.angle_lo + v * (s.angle_hi - s.angle_lo);
}

/// One uniform point on the sector. Draws radius first, then angle, so the
/// stream layout is fixed at two draws per point.
template <UniformSource R>
Point2D sample_point(const RingSector& s, R& rng) {
    const double r = sample_radius(s, rng);
    const double theta = sample_angle(s, rng);
    return Point2D{r * std::cos(theta), r * std::sin(theta)};
}

/// Membership with boundary tolerance `tol` (radii absolute, angles in
/// radians). Angle comparison wraps modulo 2*pi so points that round-trip
/// across the positive x-axis still match.
bool sector_contains(const RingSector& s, const Point2D& p,
                     double tol = kBoundaryTol);

/// Exact axis-aligned bounding box of the sector region.
BoundingBox sector_bounding_box(const RingSector& s);

} // namespace asd
