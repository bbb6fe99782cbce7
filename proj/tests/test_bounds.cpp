#include "bergsamp/bounds.hpp"
#include "bergsamp/geometry.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace bergsamp;

namespace {

constexpr double kLn2 = std::numbers::ln2;

} // namespace

TEST_SUITE("bounds") {

TEST_CASE("config defaults carry provenance") {
    const BoundConfig cfg = BoundConfig::defaults();
    CHECK(cfg.c_remez == 1.0);
    CHECK(cfg.c1 == 1.0);
    CHECK(cfg.provenance.at("c_remez") == "default-1");
    CHECK(cfg.provenance.at("c1") == "default-1");
    CHECK(cfg.provenance.at("c_dprime") == "default-1");
    CHECK(cfg.provenance.at("c_ov") == "default-1");
    CHECK(cfg.provenance.at("D_const") == "default-1");
    CHECK_NOTHROW(validate(cfg));

    BoundConfig bad = cfg;
    bad.c1 = 0.0;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("exponent value and monotonicity") {
    const BoundConfig cfg = BoundConfig::defaults();
    CHECK(exponent_L(0.5, {2.0, 0.0}, cfg) == doctest::Approx(8.0 * kLn2).epsilon(1e-14));
    // scaling in (1+alpha)/p
    CHECK(exponent_L(0.5, {2.0, 1.0}, cfg) ==
          doctest::Approx(16.0 * kLn2).epsilon(1e-14));
    CHECK(exponent_L(0.5, {4.0, 0.0}, cfg) == doctest::Approx(4.0 * kLn2).epsilon(1e-14));

    double prev = 0.0;
    bool first = true;
    for (double r = 0.23; r < 0.96; r += 0.02) {
        const double L = exponent_L(r, {2.0, 0.0}, cfg);
        if (!first) CHECK(L > prev);
        first = false;
        prev = L;
        // doubling the radius can only increase the exponent
        CHECK(exponent_L(phb_double(r), {2.0, 0.0}, cfg) > L);
    }
    CHECK_THROWS_AS(exponent_L(0.0, {2.0, 0.0}, cfg), std::domain_error);
    CHECK_THROWS_AS(exponent_L(1.0, {2.0, 0.0}, cfg), std::domain_error);
}

TEST_CASE("eta closed form and scale invariance") {
    const BoundConfig cfg = BoundConfig::defaults();
    CHECK(eta_general(0.5, 1.0, cfg) == doctest::Approx(16.0 * kLn2).epsilon(1e-14));
    for (double r : {0.2, 0.5, 0.8}) {
        CHECK(eta_bergman(r, cfg) == doctest::Approx(eta_general(r, 1.0, cfg)).epsilon(1e-15));
        for (double lambda : {0.5, 2.0, 17.0}) {
            CHECK(eta_general(lambda * r, lambda * 1.0, cfg) ==
                  doctest::Approx(eta_general(r, 1.0, cfg)).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(eta_general(0.5, 0.5, cfg), std::domain_error);
    CHECK_THROWS_AS(eta_general(0.0, 1.0, cfg), std::domain_error);
}

TEST_CASE("good-disk threshold K") {
    CHECK(K_good(1.0, 0.5, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(K_good(4.0, 0.75, 2.0) == doctest::Approx(4.0).epsilon(1e-15));
    for (double N : {1.0, 3.0, 20.0}) {
        for (double p : {1.0, 2.0, 3.5}) {
            // any positive mass fraction pushes K above N^{1/p}
            CHECK(K_good(N, 0.2, p) > std::pow(N, 1.0 / p));
        }
    }
    CHECK_THROWS_AS(K_good(0.5, 0.5, 2.0), std::domain_error);
    CHECK_THROWS_AS(K_good(1.0, 0.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(K_good(1.0, 1.0, 2.0), std::domain_error);
}

TEST_CASE("local sup bound M") {
    const BoundConfig cfg = BoundConfig::defaults();
    for (double p : {1.0, 2.0, 4.0}) {
        CHECK(M_bound(0.0, {p, 0.0}, 1.0, cfg) == doctest::Approx(1.0).epsilon(1e-15));
    }
    // with K ~ (1-r1)^{-3/p} the log grows like (7+2*alpha)/p * ln(1/(1-r1^2))
    for (double alpha : {0.0, 1.0}) {
        for (double p : {1.0, 2.0}) {
            const double r1 = 1.0 - 1e-6;
            const double K = std::pow(1.0 - r1, -3.0 / p);
            const double lnM = std::log(M_bound(r1, {p, alpha}, K, cfg));
            const double predicted = (7.0 + 2.0 * alpha) / p * std::log(1.0 / (1.0 - r1 * r1));
            CHECK(lnM / predicted == doctest::Approx(1.0).epsilon(0.03));
        }
    }
    CHECK_THROWS_AS(M_bound(1.0, {2.0, 0.0}, 1.0, cfg), std::domain_error);
}

TEST_CASE("theoretical lower bound") {
    BoundConfig cfg = BoundConfig::defaults();
    cfg.c_remez = std::numbers::e;
    CHECK(theoretical_lower(0.1, 0.5, {2.0, 0.0}, cfg) ==
          doctest::Approx(std::exp(-(1.0 + std::log(10.0)) * 8.0 * kLn2)).epsilon(1e-12));
    // gamma equal to the Remez constant gives the trivial bound 1
    CHECK(theoretical_lower(1.0, 0.5, {2.0, 0.0}, BoundConfig::defaults()) == 1.0);
    // clamped into [0, 1] and monotone in gamma
    double prev = 0.0;
    for (double gamma : {0.05, 0.2, 0.5, 0.9}) {
        const double lo = theoretical_lower(gamma, 0.6, {2.0, 0.0}, cfg);
        CHECK(lo >= prev);
        CHECK(lo <= 1.0);
        prev = lo;
    }
    CHECK_THROWS_AS(theoretical_lower(0.0, 0.5, {2.0, 0.0}, cfg), std::domain_error);
}

TEST_CASE("necessary upper bound") {
    CHECK(necessary_upper(1.0, 2.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(necessary_upper(0.25, 2.0, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(necessary_upper(0.25, 2.0, 3.0) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK_THROWS_AS(necessary_upper(-0.1, 2.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(necessary_upper(0.5, 0.5, 1.0), std::domain_error);
}

TEST_CASE("bound report consistency") {
    const BoundConfig cfg = BoundConfig::defaults();
    const double gamma = 0.3, r = 0.55;
    const SpaceParams params{2.0, 0.0};
    const BoundReport rep = make_bound_report(gamma, r, params, cfg, 1.2, 0.5, 0.4);

    CHECK(rep.gamma == gamma);
    CHECK(rep.L == doctest::Approx(exponent_L(r, params, cfg)).epsilon(1e-15));
    CHECK(rep.eta == doctest::Approx(eta_bergman(r, cfg)).epsilon(1e-15));
    CHECK(rep.C_lower_theory ==
          doctest::Approx(theoretical_lower(gamma, r, params, cfg)).epsilon(1e-15));
    CHECK(rep.C_upper_necessary ==
          doctest::Approx(necessary_upper(gamma, 2.0, 1.2)).epsilon(1e-15));
    CHECK(rep.K == doctest::Approx(K_good(std::max(1.0, rep.N_bound), 0.5, 2.0)).epsilon(1e-15));
    CHECK(rep.M == doctest::Approx(M_bound(r, params, rep.K, cfg)).epsilon(1e-15));
    REQUIRE(rep.C_measured.has_value());
    CHECK(rep.lower_ok == (rep.C_lower_theory <= 0.4 + 1e-12));
    CHECK(rep.upper_ok == (0.4 <= rep.C_upper_necessary + 1e-12));

    const BoundReport bare = make_bound_report(gamma, r, params, cfg, 1.0);
    CHECK_FALSE(bare.C_measured.has_value());
}

TEST_CASE("calibration from synthetic data") {
    const BoundConfig base = BoundConfig::defaults();

    SUBCASE("overlap envelope touches its worst point") {
        CalibrationData data;
        data.experiment_id = "sweep-7";
        for (double r : {0.5, 0.6, 0.7, 0.8}) {
            const double u = 1.0 - r;
            const int N = static_cast<int>(2.4 * std::log(1.0 / u) / (u * u));
            data.overlap.push_back({r, N});
        }
        const BoundConfig cfg = calibrate(data, base);
        CHECK(cfg.provenance.at("c_ov") == "calibrated:sweep-7");
        CHECK(cfg.provenance.at("c1") == "default-1"); // untouched group
        double worst = 0.0;
        for (const OverlapPoint& pt : data.overlap) {
            const double u = 1.0 - pt.r;
            const double bound = cfg.c_ov * std::log(1.0 / u) / (u * u);
            CHECK(pt.measured_N <= bound * (1.0 + 1e-12));
            worst = std::max(worst, pt.measured_N / bound);
        }
        CHECK(worst == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("sandwich experiments pin the smallest valid c1") {
        BoundConfig seeded = base;
        seeded.c_remez = 2.0;
        CalibrationData data;
        data.sandwich.push_back({"a", 0.4, 0.5, {2.0, 0.0}, 0.3});
        data.sandwich.push_back({"b", 0.2, 0.5, {2.0, 0.0}, 0.25});
        data.sandwich.push_back({"c", 0.5, 0.6, {2.0, 0.0}, 0.6});
        const BoundConfig cfg = calibrate(data, seeded);
        CHECK(cfg.provenance.at("c1") == "calibrated");
        // every experiment satisfies the recalibrated lower bound ...
        for (const SandwichExperiment& ex : data.sandwich) {
            CHECK(theoretical_lower(ex.gamma, ex.r, ex.params, cfg) <=
                  ex.C_measured * (1.0 + 1e-9));
        }
        // ... and some experiment makes it tight: a smaller c1 would overstate it
        BoundConfig tighter = cfg;
        tighter.c1 *= 0.999;
        bool violated = false;
        for (const SandwichExperiment& ex : data.sandwich) {
            if (theoretical_lower(ex.gamma, ex.r, ex.params, tighter) >
                ex.C_measured * (1.0 + 1e-12))
                violated = true;
        }
        CHECK(violated);
    }

    SUBCASE("remez constant is copied with provenance") {
        CalibrationData data;
        data.remez_c_fitted = 3.75;
        data.experiment_id = "remez-sweep";
        const BoundConfig cfg = calibrate(data, base);
        CHECK(cfg.c_remez == 3.75);
        CHECK(cfg.provenance.at("c_remez") == "calibrated:remez-sweep");
    }

    SUBCASE("degenerate groups") {
        CHECK_THROWS_AS(calibrate(CalibrationData{}, base), std::invalid_argument);
        CalibrationData two;
        two.overlap = {{0.5, 3}, {0.6, 4}};
        CHECK_THROWS_AS(calibrate(two, base), std::invalid_argument);
        CalibrationData two_sandwich;
        two_sandwich.sandwich.push_back({"a", 0.4, 0.5, {2.0, 0.0}, 0.3});
        two_sandwich.sandwich.push_back({"b", 0.3, 0.5, {2.0, 0.0}, 0.2});
        CHECK_THROWS_AS(calibrate(two_sandwich, base), std::invalid_argument);
    }

    SUBCASE("idempotent on the same data") {
        CalibrationData data;
        data.overlap = {{0.5, 10}, {0.6, 18}, {0.7, 35}, {0.8, 90}};
        data.remez_c_fitted = 4.5;
        data.sandwich.push_back({"a", 0.4, 0.5, {2.0, 0.0}, 0.3});
        data.sandwich.push_back({"b", 0.2, 0.5, {2.0, 0.0}, 0.25});
        data.sandwich.push_back({"c", 0.5, 0.6, {2.0, 0.0}, 0.6});
        const BoundConfig once = calibrate(data, base);
        const BoundConfig twice = calibrate(data, once);
        CHECK(twice.c_ov == doctest::Approx(once.c_ov).epsilon(1e-9));
        CHECK(twice.c_remez == doctest::Approx(once.c_remez).epsilon(1e-9));
        CHECK(twice.c1 == doctest::Approx(once.c1).epsilon(1e-9));
    }
}

TEST_CASE("necessary-direction constant") {
    std::vector<SandwichExperiment> exps;
    exps.push_back({"a", 0.25, 0.5, {2.0, 0.0}, 0.4});
    exps.push_back({"b", 0.16, 0.5, {2.0, 0.0}, 0.3});
    exps.push_back({"c", 0.81, 0.5, {2.0, 0.0}, 0.5});
    const double k = calibrate_k_nec(exps);
    CHECK(k == doctest::Approx(0.8).epsilon(1e-12)); // 0.4 / sqrt(0.25)
    for (const SandwichExperiment& ex : exps)
        CHECK(ex.C_measured <= k * std::pow(ex.gamma, 0.5) * (1.0 + 1e-12));
    CHECK_THROWS_AS(calibrate_k_nec({}), std::invalid_argument);
}

} // TEST_SUITE
