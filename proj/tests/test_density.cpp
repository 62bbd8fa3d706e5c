#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "asd/controlled.hpp"
#include "asd/density.hpp"
#include "asd/rng.hpp"
#include "support/fixtures.hpp"

using namespace asd;
using testfix::six_sector_plan;

TEST_CASE("build_histogram: one bin per point, clamp rule, out-of-bounds") {
    const BoundingBox bounds{0, 2, 0, 2};
    // the four centers of a 2x2 grid
    const Point2D centers[] = {{0.5, 0.5}, {1.5, 0.5}, {0.5, 1.5}, {1.5, 1.5}};
    const HistogramGrid g = build_histogram(centers, bounds, 2, 2);
    for (auto c : g.counts) CHECK(c == 1);
    CHECK(g.total() == 4);
    CHECK(g.out_of_bounds == 0);

    // top/right boundary clamps into the last bin; interior edges are
    // half-open (y = 1.0 belongs to the upper row)
    const Point2D edge[] = {{2.0, 0.5}, {0.5, 2.0}, {2.0, 2.0}, {1.0, 0.5}};
    const HistogramGrid ge = build_histogram(edge, bounds, 2, 2);
    CHECK(ge.at(1, 0) == 2);
    CHECK(ge.at(0, 1) == 1);
    CHECK(ge.at(1, 1) == 1);

    // outside points are counted, never binned
    const Point2D outside[] = {{-0.1, 1.0}, {1.0, 2.1}, {3.0, 3.0}, {1.0, 1.0}};
    const HistogramGrid go = build_histogram(outside, bounds, 2, 2);
    CHECK(go.out_of_bounds == 3);
    CHECK(go.total() == 1);

    CHECK_THROWS_AS(build_histogram(centers, BoundingBox{1, 1, 0, 2}, 2, 2),
                    ValidationError);
    CHECK_THROWS_AS(build_histogram(centers, bounds, 0, 2), ValidationError);
}

TEST_CASE("build_histogram: uniform square fill has mean count n/(nx*ny)") {
    // 1e6 uniform points on [-1,1]^2 at 500x500: 4 points per bin overall
    SeededRng rng(4004);
    std::vector<Point2D> pts;
    pts.reserve(1000000);
    for (int i = 0; i < 1000000; ++i)
        pts.push_back(Point2D{2.0 * rng.next_unit() - 1.0,
                              2.0 * rng.next_unit() - 1.0});
    const HistogramGrid g =
        build_histogram(pts, BoundingBox{-1, 1, -1, 1}, 500, 500);
    CHECK(g.out_of_bounds == 0);
    CHECK(static_cast<double>(g.total()) / (500.0 * 500.0) == 4.0);
    // and the nonzero-bin mean is barely above it (few empty bins at mean 4)
    const EmpiricalMean em = empirical_mean_density(g);
    const double occupied_mean = 4.0 / (1.0 - std::exp(-4.0));
    CHECK(em.mean == doctest::Approx(occupied_mean).epsilon(0.01));
}

TEST_CASE("analytical_mean_density: recorded reference rows") {
    // full disk, 1e7 samples, 500 bins: 160/pi
    const double disk =
        analytical_mean_density(RingSector{0, 1, 0, kTwoPi}, 10000000, 500);
    CHECK(disk == doctest::Approx(160.0 / kPi).epsilon(1e-15));
    CHECK(std::abs(disk - 50.9296) < 5e-5);

    // 0.7 ring, 1e6 samples
    const double ring =
        analytical_mean_density(RingSector{0.7, 1, 0, kTwoPi}, 1000000, 500);
    CHECK(std::abs(ring - 9.9862) < 5e-5);

    // 13pi/36 sector, 1e6 samples
    const double sector = analytical_mean_density(
        RingSector{0, 1, 0, 13 * kPi / 18}, 1000000, 500);
    CHECK(std::abs(sector - 14.1036) < 5e-5);

    // general form equals the expanded form
    const RingSector s{0.3, 1.8, kPi / 5, kPi};
    const double general = analytical_mean_density(s, 12345, 200);
    const double ratio = s.inner_radius / s.outer_radius;
    const double expanded = 8.0 * 12345
                          / (200.0 * 200.0 * (s.angle_hi - s.angle_lo)
                             * (1.0 - ratio * ratio));
    CHECK(general == doctest::Approx(expanded).epsilon(1e-12));

    CHECK_THROWS_AS(analytical_mean_density(RingSector{1, 1, 0, 1}, 10, 10),
                    ValidationError);
}

TEST_CASE("analytical_mean_density: halving the bin edge quarters the value") {
    const RingSector s{0.25, 1, 0, kPi};
    for (std::size_t nb : {10UL, 50UL, 250UL}) {
        const double h1 = analytical_mean_density(s, 100000, nb);
        const double h2 = analytical_mean_density(s, 100000, 2 * nb);
        CHECK(h2 == doctest::Approx(h1 / 4.0).epsilon(1e-12));
    }
}

TEST_CASE("all six reference cases match their recorded figures") {
    for (const auto& rc : density_reference_cases()) {
        CHECK(std::abs(sector_area(rc.sector) - rc.recorded_area) < 5e-5);
        const double h = analytical_mean_density(rc.sector, rc.samples, 500);
        CHECK(std::abs(h - rc.recorded_analytical) < 5e-5);
        // the recorded empirical/error figures are mutually consistent
        CHECK(std::abs(density_error_pct(rc.recorded_analytical,
                                         rc.recorded_empirical)
                       - rc.recorded_error_pct) < 0.5);
    }
}

TEST_CASE("empirical_mean_density: nonzero-bin mean") {
    HistogramGrid g;
    g.bounds = {0, 1, 0, 1};
    g.nx = g.ny = 2;
    g.counts = {0, 0, 3, 5};
    const EmpiricalMean em = empirical_mean_density(g);
    CHECK(em.mean == 4.0);
    CHECK(em.nonzero_bins == 2);

    g.counts = {0, 0, 0, 0};
    CHECK_THROWS_AS(empirical_mean_density(g), ValidationError);
}

TEST_CASE("density_error_pct") {
    CHECK(density_error_pct(57.2958, 56.4602) == doctest::Approx(1.46).epsilon(0.005));
    CHECK(density_error_pct(14.1036, 14.0280) == doctest::Approx(0.54).epsilon(0.01));
    CHECK(density_error_pct(3.25, 3.25) == 0.0);
    CHECK_THROWS_AS(density_error_pct(0.0, 1.0), ValidationError);
}

TEST_CASE("unit disk at 1e6 samples reproduces the scaled reference row") {
    const RingSector disk{0, 1, 0, kTwoPi};
    SeededRng rng(20120917);
    std::vector<Point2D> pts;
    pts.reserve(1000000);
    for (int i = 0; i < 1000000; ++i) pts.push_back(sample_point(disk, rng));
    const HistogramGrid g =
        build_histogram(pts, BoundingBox{-1, 1, -1, 1}, 500, 500);
    const double analytical = analytical_mean_density(disk, 1000000, 500);
    CHECK(analytical == doctest::Approx(16.0 / kPi).epsilon(1e-15));
    const EmpiricalMean em = empirical_mean_density(g);
    CHECK(density_error_pct(analytical, em.mean) <= 3.0);
}

TEST_CASE("deployment_bounds: union of per-sector boxes") {
    const RingSector right{0.5, 1, 7 * kPi / 4, kTwoPi};
    const RingSector upper{1, 2, kPi / 4, 3 * kPi / 4};
    const BoundingBox bb =
        deployment_bounds(std::vector<RingSector>{right, upper});
    CHECK(bb.x_hi == doctest::Approx(std::sqrt(2.0))); // upper wedge at pi/4
    CHECK(bb.y_hi == doctest::Approx(2.0));
    CHECK(bb.x_lo == doctest::Approx(-std::sqrt(2.0)));
    CHECK(bb.y_lo == doctest::Approx(-std::sin(kPi / 4)));
    CHECK_THROWS_AS(deployment_bounds({}), ValidationError);
}

TEST_CASE("asd_pdf_estimate: homogeneous limit is flat at 1/area") {
    const RingSector disk{0, 1, 0, kTwoPi};
    SeededRng rng(224);
    std::vector<Point2D> pts;
    pts.reserve(200000);
    for (int i = 0; i < 200000; ++i) pts.push_back(sample_point(disk, rng));
    const PdfGrid pdf =
        asd_pdf_estimate(pts, std::vector<RingSector>{disk}, 50, 50);

    CHECK(pdf.binned == pdf.total);
    CHECK(pdf.riemann_sum() == doctest::Approx(1.0).epsilon(1e-9));

    // bins fully inside the disk sit near 1/pi; corner bins are zero
    double interior_sum = 0.0;
    std::size_t interior_bins = 0;
    for (std::size_t j = 0; j < pdf.ny; ++j) {
        for (std::size_t i = 0; i < pdf.nx; ++i) {
            const double x = pdf.x_center(i), y = pdf.y_center(j);
            if (std::hypot(x, y) < 0.9) {
                interior_sum += pdf.values[j * pdf.nx + i];
                ++interior_bins;
            }
        }
    }
    CHECK(interior_sum / static_cast<double>(interior_bins)
          == doctest::Approx(1.0 / kPi).epsilon(0.02));
    CHECK(pdf.values[0] == 0.0); // corner lies outside the disk
}

TEST_CASE("asd_pdf_estimate: plateau heights follow the sector densities") {
    const NetworkPlan plan = six_sector_plan();
    const Deployment d = deploy_controlled(plan, 8080);
    const auto planned = to_sectors(plan);
    std::vector<RingSector> sectors;
    for (const auto& ps : planned) sectors.push_back(ps.sector);

    const PdfGrid pdf = asd_pdf_estimate(d.points, sectors, 25, 25);
    CHECK(pdf.riemann_sum() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(pdf.bounds.x_lo == doctest::Approx(-3.5));
    CHECK(pdf.bounds.x_hi == doctest::Approx(3.5));

    // mean estimated pdf over bins well inside each sector vs rho_k / n_S
    const auto rho = sector_densities(plan);
    const double n_s = static_cast<double>(plan.total_nodes());
    for (std::size_t k = 0; k < planned.size(); ++k) {
        double sum = 0.0;
        std::size_t bins = 0;
        for (std::size_t j = 0; j < pdf.ny; ++j) {
            for (std::size_t i = 0; i < pdf.nx; ++i) {
                const Point2D c{pdf.x_center(i), pdf.y_center(j)};
                // keep only bins whose whole cell sits in this one sector
                const double hx = pdf.dx() / 2, hy = pdf.dy() / 2;
                const Point2D corners[] = {{c.x - hx, c.y - hy},
                                           {c.x + hx, c.y - hy},
                                           {c.x - hx, c.y + hy},
                                           {c.x + hx, c.y + hy}};
                const auto inside = [&](const Point2D& p) {
                    return sector_contains(planned[k].sector, p, 0.0);
                };
                if (inside(c) && inside(corners[0]) && inside(corners[1])
                    && inside(corners[2]) && inside(corners[3])) {
                    sum += pdf.values[j * pdf.nx + i];
                    ++bins;
                }
            }
        }
        if (bins < 3) continue; // thin wedges have no fully-interior bin at 25x25
        const double expected = rho[k] / n_s;
        CHECK(sum / static_cast<double>(bins)
              == doctest::Approx(expected).epsilon(0.25));
    }

    // the highest-density sector (800 nodes over pi/2 area) owns the peak
    // plateau; check against a finer grid where bins resolve the wedge
    const PdfGrid fine = asd_pdf_estimate(d.points, sectors, 100, 100);
    const auto max_it = std::max_element(fine.values.begin(), fine.values.end());
    const std::size_t flat = static_cast<std::size_t>(max_it - fine.values.begin());
    const Point2D peak{fine.x_center(flat % fine.nx),
                       fine.y_center(flat / fine.nx)};
    const std::size_t densest =
        std::max_element(rho.begin(), rho.end()) - rho.begin();
    CHECK(densest == 1); // the 800-node wedge, density 1600/pi
    CHECK(sector_contains(planned[densest].sector, peak, 1e-9));
}

TEST_CASE("asd_pdf_estimate: error and edge cases") {
    CHECK_THROWS_AS(
        asd_pdf_estimate({}, std::vector<RingSector>{RingSector{0, 1, 0, kTwoPi}},
                         10, 10),
        ValidationError);
}

TEST_CASE("estimation error shrinks as samples grow (fixed resolution)") {
    const RingSector disk{0, 1, 0, kTwoPi};
    const double analytical_small = analytical_mean_density(disk, 10000, 100);
    const double analytical_large = analytical_mean_density(disk, 1000000, 100);
    double err_small = 0.0, err_large = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SeededRng rng(seed * 31 + 7);
        std::vector<Point2D> pts;
        pts.reserve(1000000);
        for (int i = 0; i < 1000000; ++i) pts.push_back(sample_point(disk, rng));
        const std::span<const Point2D> all(pts);
        const HistogramGrid small = build_histogram(
            all.subspan(0, 10000), BoundingBox{-1, 1, -1, 1}, 100, 100);
        const HistogramGrid large =
            build_histogram(all, BoundingBox{-1, 1, -1, 1}, 100, 100);
        err_small += density_error_pct(analytical_small,
                                       empirical_mean_density(small).mean);
        err_large += density_error_pct(analytical_large,
                                       empirical_mean_density(large).mean);
    }
    CHECK(err_large / 20.0 < err_small / 20.0);
}
