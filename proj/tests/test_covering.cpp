#include "bergsamp/covering.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>

using namespace bergsamp;

namespace {

std::mt19937_64 rng_for(const char* name) {
    std::seed_seq seq(name, name + std::strlen(name));
    std::mt19937_64 rng;
    rng.seed(seq);
    return rng;
}

} // namespace

TEST_SUITE("covering") {

TEST_CASE("lattice points and index enumeration") {
    CHECK(std::abs(lattice_point({0, 0})) == 0.0);
    // level n sits on the circle of radius 1 - 2^{-n}
    for (int n = 1; n <= 6; ++n) {
        const Complex z = lattice_point({n, 1});
        CHECK(std::abs(z) == doctest::Approx(1.0 - std::ldexp(1.0, -n)).epsilon(1e-15));
        CHECK(std::arg(z) == doctest::Approx(2.0 * M_PI / std::ldexp(1.0, n)).epsilon(1e-14));
    }
    for (int n_max : {0, 1, 3, 6}) {
        const auto idx = lattice_indices_up_to(n_max);
        CHECK(idx.size() == (std::size_t{1} << (n_max + 1)) - 1);
        for (const LatticeIndex& i : idx) {
            CHECK(i.n <= n_max);
            CHECK(i.k >= 0);
            CHECK(i.k < (std::int64_t{1} << i.n));
        }
    }
}

TEST_CASE("minimal distance vanishes exactly on the lattice") {
    for (const LatticeIndex& idx : lattice_indices_up_to(4)) {
        CHECK(min_lattice_distance(lattice_point(idx), 4) < 1e-15);
    }
    // a point far from every low level keeps a positive distance
    CHECK(min_lattice_distance(Complex(0.25), 3) > 0.1);
}

TEST_CASE("fast overlap count agrees with the exhaustive scan") {
    auto rng = rng_for("overlap-routes");
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 400; ++i) {
        const double rho = 0.98 * std::sqrt(unit(rng));
        const double theta = 2.0 * M_PI * unit(rng);
        const Complex z = rho * Complex(std::cos(theta), std::sin(theta));
        const double r = 0.2 + 0.7 * unit(rng);
        const int n_max = 3 + static_cast<int>(unit(rng) * 5.0);
        CHECK(overlap_count(z, r, n_max) == overlap_count_fast(z, r, n_max));
    }
}

TEST_CASE("radial level count obeys the logarithmic window bound") {
    auto rng = rng_for("levels");
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double rho = 0.95 * unit(rng);
        const double theta = 2.0 * M_PI * unit(rng);
        const Complex x(rho * std::cos(theta), rho * std::sin(theta));
        const double r = 0.3 + 0.65 * unit(rng);
        const int count = radial_level_count(x, r, 10);
        const double bound = std::log(4.0 / ((1.0 - r) * (1.0 - r))) / std::log(2.0);
        CHECK(count <= bound + 1e-9);
    }
}

TEST_CASE("overlap sweep report") {
    const CoveringReport rep = overlap_constant(0.6, 6, 96);
    CHECK(rep.r == 0.6);
    CHECK(rep.measured_N >= 1);
    CHECK(rep.bound_N ==
          doctest::Approx(std::log(1.0 / 0.4) / (0.4 * 0.4)).epsilon(1e-12));
    // scaling c_ov scales the bound linearly
    const CoveringReport scaled = overlap_constant(0.6, 6, 96, 2.5);
    CHECK(scaled.bound_N == doctest::Approx(2.5 * rep.bound_N).epsilon(1e-12));
    CHECK(scaled.measured_N == rep.measured_N);

    // multiplicity can only grow with the radius
    int prev = 0;
    for (double r : {0.4, 0.55, 0.7, 0.85}) {
        const int n = overlap_constant(r, 6, 96).measured_N;
        CHECK(n >= prev);
        prev = n;
    }
}

TEST_CASE("covering radius search is minimal on its grid") {
    const double r = find_covering_radius(5, 96, 1.0 / 32.0);
    CHECK(r >= 0.30);
    CHECK(r <= 0.99);
    const CoveringReport at = overlap_constant(r, 5, 96);
    CHECK(at.covering_ok);
    CHECK(at.uncovered_fraction == 0.0);
    if (r > 0.30) {
        const CoveringReport below = overlap_constant(r - 0.01, 5, 96);
        CHECK_FALSE(below.covering_ok);
        CHECK(below.uncovered_fraction > 0.0);
    }
}

TEST_CASE("reference covering radius is covered and not trivially small") {
    const double r0 = reference_covering_radius();
    CHECK(r0 > 0.3);
    CHECK(r0 < 0.99);
    // every point of a moderate test grid sits inside some lattice disk
    const CoveringReport rep = overlap_constant(r0, 8, 128);
    CHECK(rep.covering_ok);
}

} // TEST_SUITE
