#include "bergsamp/region.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <random>

using namespace bergsamp;

namespace {

constexpr double kPi = std::numbers::pi;

// Normalized area of the intersection of two disks (centers c1, c2), by the
// standard lens formula; independent oracle for intersect_disk_area.
double lens_area(Complex c1, double r1, Complex c2, double r2) {
    const double d = std::abs(c1 - c2);
    if (d >= r1 + r2) return 0.0;
    if (d <= std::abs(r1 - r2)) {
        const double r = std::min(r1, r2);
        return r * r;
    }
    const double a1 = std::acos((d * d + r1 * r1 - r2 * r2) / (2.0 * d * r1));
    const double a2 = std::acos((d * d + r2 * r2 - r1 * r1) / (2.0 * d * r2));
    const double tri = 0.5 * std::sqrt((-d + r1 + r2) * (d + r1 - r2) * (d - r1 + r2) *
                                       (d + r1 + r2));
    return (r1 * r1 * a1 + r2 * r2 * a2 - tri) / kPi;
}

std::mt19937_64 rng_for(const char* name) {
    std::seed_seq seq(name, name + std::strlen(name));
    std::mt19937_64 rng;
    rng.seed(seq);
    return rng;
}

} // namespace

TEST_SUITE("region") {

TEST_CASE("sector validation") {
    CHECK_NOTHROW(validate(Region{{{0.0, 1.0, 0.0, 2.0 * kPi}}, "full"}));
    CHECK_THROWS_AS(validate(Region{{{-0.1, 0.5, 0.0, 1.0}}, ""}), std::invalid_argument);
    CHECK_THROWS_AS(validate(Region{{{0.5, 0.5, 0.0, 1.0}}, ""}), std::invalid_argument);
    CHECK_THROWS_AS(validate(Region{{{0.0, 1.1, 0.0, 1.0}}, ""}), std::invalid_argument);
    CHECK_THROWS_AS(validate(Region{{{0.0, 0.5, 0.0, 7.0}}, ""}), std::invalid_argument);
    CHECK_THROWS_AS(validate(Region{{{0.0, 0.5, 1.0, 0.5}}, ""}), std::invalid_argument);
    // a tighter outer limit applies when the region must sit in a smaller disk
    CHECK_THROWS_AS(validate(Region{{{0.0, 0.9, 0.0, 1.0}}, ""}, 0.5), std::invalid_argument);
}

TEST_CASE("areas of overlapping sectors add up to the union") {
    const Region region{{{0.2, 0.6, 0.0, kPi}, {0.4, 0.8, kPi / 2.0, 1.5 * kPi}}, "overlap"};
    // bands: [0.2,0.4] x pi, [0.4,0.6] x 3pi/2, [0.6,0.8] x pi
    CHECK(region_area(region) == doctest::Approx(0.35).epsilon(1e-13));

    const auto bands = disjoint_bands(region);
    REQUIRE(bands.size() == 3);
    CHECK(bands[0].angular_width() == doctest::Approx(kPi).epsilon(1e-13));
    CHECK(bands[1].angular_width() == doctest::Approx(1.5 * kPi).epsilon(1e-13));
    CHECK(bands[1].contains_angle(0.1));
    CHECK(bands[1].contains_angle(4.0));
    CHECK_FALSE(bands[1].contains_angle(5.5));
}

TEST_CASE("unreduced angles wrap correctly") {
    const Region region{{{0.1, 0.5, 1.5 * kPi, 2.5 * kPi}}, "wrapped"};
    CHECK(region_area(region) == doctest::Approx(0.12).epsilon(1e-13));
    const auto bands = disjoint_bands(region);
    REQUIRE(bands.size() == 1);
    CHECK(bands[0].contains_angle(0.1));
    CHECK(bands[0].contains_angle(2.0 * kPi - 0.1));
    CHECK_FALSE(bands[0].contains_angle(kPi));
    // fully contained in a large disk, the intersection is the whole region
    const EuclideanDisk big{Complex(0.0), 0.9};
    CHECK(intersect_disk_area(region, big) == doctest::Approx(0.12).epsilon(2e-4));
}

TEST_CASE("weighted area closed forms") {
    const Region full = builtin_region("full");
    for (double alpha : {0.0, 0.5, 2.0, 3.7}) {
        CHECK(region_area(full, alpha) == doctest::Approx(1.0).epsilon(1e-14));
    }
    const Region ann = builtin_region("annulus(0.3,0.7)");
    CHECK(region_area(ann) == doctest::Approx(0.7 * 0.7 - 0.3 * 0.3).epsilon(1e-14));
    for (double alpha : {0.5, 2.0}) {
        const double expected =
            std::pow(1.0 - 0.09, alpha + 1.0) - std::pow(1.0 - 0.49, alpha + 1.0);
        CHECK(region_area(ann, alpha) == doctest::Approx(expected).epsilon(1e-14));
    }
    CHECK_THROWS_AS(region_area(full, -1.0), std::invalid_argument);
}

TEST_CASE("builtin catalog") {
    CHECK(region_area(builtin_region("full")) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(region_area(builtin_region("empty")) == 0.0);
    CHECK(region_area(builtin_region("annulus(0.5)")) == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(region_area(builtin_region("grating(8,0.37)")) ==
          doctest::Approx(0.37).epsilon(1e-13));
    CHECK(region_area(builtin_region("holes(6,0.5,0.1)")) ==
          doctest::Approx(1.0 - 4.0 * 6.0 * 0.01 / kPi).epsilon(1e-12));

    const Region a = builtin_region("random(5,42)");
    const Region b = builtin_region("random(5,42)");
    REQUIRE(a.sectors.size() == b.sectors.size());
    for (std::size_t i = 0; i < a.sectors.size(); ++i) {
        CHECK(a.sectors[i].rho_min == b.sectors[i].rho_min);
        CHECK(a.sectors[i].theta_min == b.sectors[i].theta_min);
    }
    CHECK(region_area(builtin_region("random(5,43)")) != region_area(a));

    CHECK_THROWS_AS(builtin_region("nosuch(1)"), std::invalid_argument);
    CHECK_THROWS_AS(builtin_region("grating(0,0.5)"), std::invalid_argument);
    CHECK_THROWS_AS(builtin_region("holes(4,0.5,0.6)"), std::invalid_argument);
    for (const std::string& name : builtin_region_names()) CHECK_FALSE(name.empty());
}

TEST_CASE("disk intersection against the lens-formula oracle") {
    auto rng = rng_for("lens");
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 60; ++i) {
        const double a = 0.6 * unit(rng);
        const double b = a + 0.1 + (0.99 - a - 0.1) * unit(rng);
        const Region ann{{{a, b, 0.0, 2.0 * kPi}}, "ann"};
        const double rho = 0.9 * unit(rng);
        const double phi = 2.0 * kPi * unit(rng);
        const Complex c = rho * Complex(std::cos(phi), std::sin(phi));
        const double R = 0.05 + (0.999 - rho - 0.05) * unit(rng);
        if (R <= 0.05) continue;
        const EuclideanDisk disk{c, R};
        const double expected =
            lens_area(Complex(0.0), b, c, R) - lens_area(Complex(0.0), a, c, R);
        const double got = intersect_disk_area(ann, disk);
        CHECK(got == doctest::Approx(expected).epsilon(5e-4));
    }

    SUBCASE("disk strictly inside one sector") {
        const Region sec = builtin_region("sector(0.1,0.9,0,1.5707963267948966)");
        const Complex c = 0.5 * Complex(std::cos(kPi / 4.0), std::sin(kPi / 4.0));
        const EuclideanDisk disk{c, 0.05};
        CHECK(intersect_disk_area(sec, disk) == doctest::Approx(0.0025).epsilon(1e-4));
    }

    SUBCASE("empty region and degenerate disk") {
        CHECK(intersect_disk_area(builtin_region("empty"), {Complex(0.0), 0.5}) == 0.0);
        CHECK(intersect_disk_area(builtin_region("full"), {Complex(0.0), 0.0}) == 0.0);
    }
}

TEST_CASE("relative density reports") {
    SUBCASE("full disk has density one everywhere") {
        const DensityReport rep = density(builtin_region("full"), 0.5, 16);
        CHECK(rep.gamma_hat == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(rep.r == 0.5);
        CHECK(rep.grid_resolution == 16);
    }
    SUBCASE("empty region has density zero") {
        CHECK(density(builtin_region("empty"), 0.5, 8).gamma_hat == 0.0);
    }
    SUBCASE("annulus density is self-consistent at the grid argmin") {
        const DensityReport rep = density(builtin_region("annulus(0.5)"), 0.7, 32);
        // the origin sits on the center grid, so its ratio caps the minimum:
        // disk area 0.49, hole overlap 0.25
        CHECK(rep.gamma_hat <= 24.0 / 49.0 + 1e-9);
        CHECK(rep.gamma_hat > 0.0);
        // recompute the reported minimum with the closed lens formula
        const EuclideanDisk d = phb_disk_to_euclidean(rep.argmin_center, 0.7);
        const double part = lens_area(Complex(0.0), 1.0, d.center, d.radius) -
                            lens_area(Complex(0.0), 0.5, d.center, d.radius);
        CHECK(rep.gamma_hat ==
              doctest::Approx(part / (d.radius * d.radius)).epsilon(5e-4));
    }
    SUBCASE("density grows with the region") {
        const double lean = density(builtin_region("annulus(0.6)"), 0.7, 16).gamma_hat;
        const double fat = density(builtin_region("annulus(0.4)"), 0.7, 16).gamma_hat;
        CHECK(lean <= fat + 1e-12);
        CHECK(lean > 0.0);
        CHECK(fat < 1.0);
    }

    SUBCASE("narrow slits miss near-boundary disks entirely") {
        // a pseudohyperbolic disk of moderate radius centered near the boundary
        // subtends a vanishing angle, so it fits inside an angular gap and the
        // grid minimum collapses to zero
        CHECK(density(builtin_region("grating(6,0.3)"), 0.6, 16).gamma_hat == 0.0);
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(density(builtin_region("full"), 0.0, 16), std::domain_error);
        CHECK_THROWS_AS(density(builtin_region("full"), 1.0, 16), std::domain_error);
        CHECK_THROWS_AS(density(builtin_region("full"), 0.5, 1), std::invalid_argument);
    }
}

} // TEST_SUITE
