#pragma once

#include "bergsamp/analysis.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bergsamp {

/// Bundle of the absolute constants entering the explicit bounds.  Each field
/// carries a provenance string: "default-1" until a calibration run replaces
/// it with "calibrated:<experiment-id>".
struct BoundConfig {
    double c_remez = 1.0;  ///< constant of the sublevel growth bound (c*r^2/s)^n
    double c1 = 1.0;       ///< constant inside the exponent L
    double c_dprime = 1.0; ///< constant of the eta estimate
    double c_ov = 1.0;     ///< covering-overlap envelope constant
    double D_const = 1.0;  ///< constant of the local sup bound M
    std::map<std::string, std::string> provenance;

    static BoundConfig defaults();
};

void validate(const BoundConfig& cfg);

/// Exponent L = c1 * ((1+alpha)/p) * (1-r)^{-4} * ln(1/(1-r)).
double exponent_L(double r, const SpaceParams& params, const BoundConfig& cfg);

/// eta = c'' * rho^4/(rho-r)^4 * ln(rho/(rho-r)) for 0 < r < rho.
double eta_general(double r, double rho, const BoundConfig& cfg);

/// Specialization of eta_general at rho = 1: c'' * (1-r)^{-4} * ln(1/(1-r)).
double eta_bergman(double r, const BoundConfig& cfg);

/// K with K^p = N/(1-c); the smallest threshold making the c-mass argument work.
double K_good(double N, double c, double p);

/// M <= D * K * (1 - r1^2)^{-2(2+alpha)/p}: local sup bound on the doubled disk.
double M_bound(double r1, const SpaceParams& params, double K, const BoundConfig& cfg);

/// Lower bound (gamma/c_remez)^L for the sampling constant, clamped to [0,1].
double theoretical_lower(double gamma, double r, const SpaceParams& params,
                         const BoundConfig& cfg);

/// Upper bound k_nec * gamma^{1/p} that any measured constant must respect.
double necessary_upper(double gamma, double p, double k_nec);

/// One row of the lower/measured/upper comparison.
struct BoundReport {
    double gamma = 0.0;
    double r = 0.0;
    SpaceParams params;
    double L = 0.0;
    double eta = 0.0;
    double N_bound = 0.0;
    double K = 0.0;
    double M = 0.0;
    double C_lower_theory = 0.0;
    double C_upper_necessary = 0.0;
    std::optional<double> C_measured;
    bool lower_ok = false; ///< set when C_measured is present
    bool upper_ok = false; ///< set when C_measured is present
};

/// Evaluates every closed-form bound at (gamma, r).  c_good is the mass
/// fraction used for the K threshold; K feeds the M bound at r1 = r.
BoundReport make_bound_report(double gamma, double r, const SpaceParams& params,
                              const BoundConfig& cfg, double k_nec, double c_good = 0.5,
                              std::optional<double> C_measured = std::nullopt);

/// One measured point of an overlap sweep: max disk multiplicity at radius r.
struct OverlapPoint {
    double r = 0.0;
    int measured_N = 0;
};

/// One measured sampling experiment used for calibrating c1 and k_nec.
struct SandwichExperiment {
    std::string region_label;
    double gamma = 0.0; ///< grid estimate of the relative density
    double r = 0.0;
    SpaceParams params;
    double C_measured = 0.0;
};

struct CalibrationData {
    std::vector<OverlapPoint> overlap;
    double remez_c_fitted = 0.0; ///< 0 means "no Remez fit supplied"
    std::vector<SandwichExperiment> sandwich;
    std::string experiment_id;
};

/// Refits the constants that the supplied data can constrain and stamps their
/// provenance.  Groups with data must hold at least 3 points; empty groups
/// leave their constant untouched.
/// - c_ov: envelope over the overlap sweep, so the bound covers every point.
/// - c_remez: taken from the supplied sublevel-growth fit.
/// - c1: the largest per-experiment critical value, i.e. the smallest c1 for
///   which the theoretical lower bound holds on every experiment; any smaller
///   value would overstate the bound on the binding experiment.
BoundConfig calibrate(const CalibrationData& data, const BoundConfig& base);

/// k_nec = max over experiments of C_measured / gamma^{1/p}.
double calibrate_k_nec(const std::vector<SandwichExperiment>& experiments);

} // namespace bergsamp
