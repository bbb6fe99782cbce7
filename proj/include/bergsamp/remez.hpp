#pragma once

#include "bergsamp/analysis.hpp"
#include "bergsamp/bounds.hpp"

#include <cstdint>
#include <vector>

namespace bergsamp {

/// One normalized extremal candidate: a polynomial whose sublevel set
/// {|p| <= 1} within the domain disk has planar measure >= s, together with
/// its boundary sup (= sup over the closed disk, by the maximum principle).
struct RemezSample {
    int degree = 0;
    double s = 0.0;
    double boundary_sup = 0.0;
    std::vector<Complex> poly_coeffs;
};

/// Envelope fit of the sublevel growth law sup <= (c * R^2 / s)^degree.
struct RemezFit {
    double domain_radius = 0.0;
    double c_fitted = 0.0;
    std::vector<RemezSample> samples;
    double max_residual = 0.0; ///< largest fraction of its bound any sample attains (<= 1)
    double shape_slope = 0.0;  ///< regression slope of ln(sup) on degree*ln(1/s)
    bool shape_ok = false;     ///< slope in (0.3, 1.05]: genuine growth, envelope exponent not exceeded
};

/// Planar Lebesgue measure of {|z| <= domain_radius : |p(z)| <= level},
/// by dense polar rays with root-polished level crossings
/// (relative target 1e-3; much better in practice).
double sublevel_measure(const AnalyticFunction& p, double domain_radius, double level);

/// Largest modulus of p on the circle |z| = radius (dense sampling plus
/// golden-section polish). Equals the sup over the closed disk.
double boundary_sup(const AnalyticFunction& p, double radius);

/// Scales p so its unit-sublevel measure within the domain disk is >= s and
/// as close to s as the jump structure allows (bisection on the scale).
AnalyticFunction normalize_to_sublevel(const AnalyticFunction& p, double s,
                                       double domain_radius);

/// Best (largest boundary sup) normalized candidate found by structured
/// families, random draws, and hill climbing. Deterministic given seed;
/// a lower bound for the true extremal value.
RemezSample empirical_Rn(int degree, double s, double domain_radius, int restarts,
                         std::uint64_t seed);

/// Sweeps (degree, s) pairs, fits the envelope constant, and checks the
/// growth-law shape by regression.
RemezFit fit_remez_constant(const std::vector<int>& degrees, const std::vector<double>& s_values,
                            double domain_radius, int restarts, std::uint64_t seed);

/// Both sides of the local sup-comparison inequality and its L^p form,
/// evaluated on one configuration. Ratios are RHS/LHS (>= 1 means the bound
/// holds); log_ratio fields avoid overflow when the bound is very loose.
struct KovrijkineReport {
    double r = 0.0;
    double rho = 0.0;
    double p = 2.0;
    double sup_lhs = 0.0; ///< sup over D(0,r)
    double sup_E = 0.0;   ///< sup over E
    double M = 0.0;       ///< sup over D(0,rho)
    double area_E = 0.0;  ///< planar Lebesgue measure of E
    double eta = 0.0;
    double base = 0.0; ///< c_remez * r^2 / |E|
    double lp_lhs = 0.0;
    double lp_E = 0.0;
    double log_ratio_sup = 0.0;
    double log_ratio_lp = 0.0;
    double ratio_sup = 0.0;
    double ratio_lp = 0.0;
    bool ok_sup = false;
    bool ok_lp = false;
};

/// Checks sup_{D(0,r)} |phi| <= base^{eta ln M} sup_E |phi| and the L^p form
/// with exponent eta ln M + 1/p, for phi with |phi(z0)| >= 1, z0 in D(0,r),
/// E a sector union inside D(0,r), and M taken at radius rho > r.
/// The ln M factor is clamped at 0 when M <= 1.
KovrijkineReport verify_kovrijkine_2d(const AnalyticFunction& phi, const Region& E, Complex z0,
                                      double r, double rho, const BoundConfig& cfg,
                                      double p = 2.0);

/// Deterministic random configuration for the calibration sweep; trial t of a
/// given master seed is always the same (phi scaled so |phi(z0)| = 1).
struct KovrijkineTrial {
    AnalyticFunction phi;
    Region E;
    Complex z0;
    double r = 0.0;
    double rho = 0.0;
};

KovrijkineTrial make_kovrijkine_trial(int index, std::uint64_t master_seed);

/// Runs the trial sweep and returns a config in which c_remez is raised to at
/// least pi * 1.02 (the value below which the base factor can drop under 1,
/// which the inequality's derivation rules out) and c_dprime is the smallest
/// constant validating every trial, with a 25% safety margin.
BoundConfig calibrate_kovrijkine(int trials, const BoundConfig& base, std::uint64_t seed,
                                 const std::string& experiment_id = "kovrijkine");

} // namespace bergsamp
