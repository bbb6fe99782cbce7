#include "bergsamp/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bergsamp {

namespace {

const char* kDefaultProvenance = "default-1";

// The r-dependent part of the exponent L, without the c1 prefactor.
double exponent_shape(double r, const SpaceParams& params) {
    const double u = 1.0 - r;
    return (1.0 + params.alpha) / params.p * std::log(1.0 / u) / (u * u * u * u);
}

} // namespace

BoundConfig BoundConfig::defaults() {
    BoundConfig cfg;
    for (const char* field : {"c_remez", "c1", "c_dprime", "c_ov", "D_const"})
        cfg.provenance[field] = kDefaultProvenance;
    return cfg;
}

void validate(const BoundConfig& cfg) {
    if (!(cfg.c_remez > 0.0 && cfg.c1 > 0.0 && cfg.c_dprime > 0.0 && cfg.c_ov > 0.0 &&
          cfg.D_const > 0.0))
        throw std::invalid_argument("BoundConfig: all constants must be positive");
}

double exponent_L(double r, const SpaceParams& params, const BoundConfig& cfg) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("exponent_L: r in (0,1) required");
    validate(params);
    return cfg.c1 * exponent_shape(r, params);
}

double eta_general(double r, double rho, const BoundConfig& cfg) {
    if (!(r > 0.0 && r < rho)) throw std::domain_error("eta_general: 0 < r < rho required");
    const double gap = rho - r;
    const double ratio = rho / gap;
    return cfg.c_dprime * ratio * ratio * ratio * ratio * std::log(ratio);
}

double eta_bergman(double r, const BoundConfig& cfg) { return eta_general(r, 1.0, cfg); }

double K_good(double N, double c, double p) {
    if (!(c > 0.0 && c < 1.0)) throw std::domain_error("K_good: c in (0,1) required");
    if (!(N >= 1.0)) throw std::domain_error("K_good: N >= 1 required");
    if (!(p >= 1.0)) throw std::domain_error("K_good: p >= 1 required");
    return std::pow(N / (1.0 - c), 1.0 / p);
}

double M_bound(double r1, const SpaceParams& params, double K, const BoundConfig& cfg) {
    if (!(r1 >= 0.0 && r1 < 1.0)) throw std::domain_error("M_bound: r1 in [0,1) required");
    validate(params);
    const double base = 1.0 - r1 * r1;
    return cfg.D_const * K * std::pow(base, -2.0 * (2.0 + params.alpha) / params.p);
}

double theoretical_lower(double gamma, double r, const SpaceParams& params,
                         const BoundConfig& cfg) {
    if (!(gamma > 0.0 && gamma <= 1.0))
        throw std::domain_error("theoretical_lower: gamma in (0,1] required");
    const double L = exponent_L(r, params, cfg);
    const double value = std::pow(gamma / cfg.c_remez, L);
    return std::clamp(value, 0.0, 1.0);
}

double necessary_upper(double gamma, double p, double k_nec) {
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw std::domain_error("necessary_upper: gamma in [0,1] required");
    if (!(p >= 1.0)) throw std::domain_error("necessary_upper: p >= 1 required");
    return k_nec * std::pow(gamma, 1.0 / p);
}

BoundReport make_bound_report(double gamma, double r, const SpaceParams& params,
                              const BoundConfig& cfg, double k_nec, double c_good,
                              std::optional<double> C_measured) {
    BoundReport report;
    report.gamma = gamma;
    report.r = r;
    report.params = params;
    report.L = exponent_L(r, params, cfg);
    report.eta = eta_bergman(r, cfg);
    const double u = 1.0 - r;
    report.N_bound = cfg.c_ov * std::log(1.0 / u) / (u * u);
    report.K = K_good(std::max(1.0, report.N_bound), c_good, params.p);
    report.M = M_bound(r, params, report.K, cfg);
    report.C_lower_theory = theoretical_lower(gamma, r, params, cfg);
    report.C_upper_necessary = necessary_upper(gamma, params.p, k_nec);
    report.C_measured = C_measured;
    if (C_measured) {
        report.lower_ok = report.C_lower_theory <= *C_measured + 1e-12;
        report.upper_ok = *C_measured <= report.C_upper_necessary + 1e-12;
    }
    return report;
}

BoundConfig calibrate(const CalibrationData& data, const BoundConfig& base) {
    validate(base);
    const bool has_overlap = !data.overlap.empty();
    const bool has_remez = data.remez_c_fitted > 0.0;
    const bool has_sandwich = !data.sandwich.empty();
    if (!has_overlap && !has_remez && !has_sandwich)
        throw std::invalid_argument("calibrate: empty experiment set");
    if (has_overlap && data.overlap.size() < 3)
        throw std::invalid_argument("calibrate: overlap sweep needs at least 3 points");
    if (has_sandwich && data.sandwich.size() < 3)
        throw std::invalid_argument("calibrate: sandwich sweep needs at least 3 points");

    BoundConfig cfg = base;
    const std::string tag =
        data.experiment_id.empty() ? "calibrated" : "calibrated:" + data.experiment_id;

    if (has_overlap) {
        double envelope = 0.0;
        for (const OverlapPoint& pt : data.overlap) {
            if (!(pt.r > 0.0 && pt.r < 1.0))
                throw std::invalid_argument("calibrate: overlap point radius out of (0,1)");
            const double u = 1.0 - pt.r;
            envelope = std::max(envelope, pt.measured_N * u * u / std::log(1.0 / u));
        }
        cfg.c_ov = envelope;
        cfg.provenance["c_ov"] = tag;
    }

    if (has_remez) {
        cfg.c_remez = data.remez_c_fitted;
        cfg.provenance["c_remez"] = tag;
    }

    if (has_sandwich) {
        double critical = 0.0;
        bool constrained = false;
        for (const SandwichExperiment& ex : data.sandwich) {
            if (!(ex.gamma > 0.0 && ex.C_measured > 0.0))
                throw std::invalid_argument("calibrate: sandwich experiment needs gamma, C > 0");
            if (ex.gamma >= cfg.c_remez || ex.C_measured >= 1.0)
                continue; // no constraint: the clamped bound is already <= C
            const double shape = exponent_shape(ex.r, ex.params);
            const double needed =
                std::log(ex.C_measured) / (shape * std::log(ex.gamma / cfg.c_remez));
            critical = std::max(critical, needed);
            constrained = true;
        }
        if (constrained) {
            cfg.c1 = critical;
            cfg.provenance["c1"] = tag;
        }
    }

    validate(cfg);
    return cfg;
}

double calibrate_k_nec(const std::vector<SandwichExperiment>& experiments) {
    if (experiments.empty()) throw std::invalid_argument("calibrate_k_nec: empty experiment set");
    double k = 0.0;
    for (const SandwichExperiment& ex : experiments) {
        if (!(ex.gamma > 0.0))
            throw std::invalid_argument("calibrate_k_nec: gamma > 0 required");
        k = std::max(k, ex.C_measured / std::pow(ex.gamma, 1.0 / ex.params.p));
    }
    return k;
}

} // namespace bergsamp
