#pragma once

#include "bergsamp/analysis.hpp"
#include "bergsamp/covering.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bergsamp {

struct SamplingResult {
    double C_hat = 0.0;
    int degree = 0;
    SpaceParams params;
    std::string region_label;
    std::vector<Complex> extremal_coeffs;
};

/// ||f||_{L^{p,alpha}(E)} / ||f||_{A^{p,alpha}}, in [0, 1].
double sampling_ratio(const AnalyticFunction& f, const Region& E, const SpaceParams& params);

/// Exact restricted sampling constant at p = 2: smallest eigenvalue of the
/// whitened Gram pencil, C_hat = sqrt(lambda_min); extremal_coeffs is the
/// eigenvector pulled back through the whitening.
SamplingResult optimal_constant_p2(const Region& E, int degree, double alpha);

/// General-p minimizer of sampling_ratio over unit-sphere coefficient vectors:
/// projected coordinate descent with per-restart RNG streams. Deterministic
/// given seed; an upper bound for the true restricted constant.
SamplingResult extremal_search(const Region& E, int degree, const SpaceParams& params,
                               int restarts, std::uint64_t seed);

struct GoodDiskSet {
    std::vector<LatticeIndex> indices;
    double K = 0.0;
    double s = 0.0;
    double t = 0.0;
    double good_mass_fraction = 0.0;
};

/// Local masses ||f||^p over D^s_{n,k} and D^t_{n,k} for all n <= n_max,
/// computed once and shared by classifications at different thresholds.
struct LocalNormProfile {
    std::vector<LatticeIndex> indices;
    std::vector<double> mass_s;
    std::vector<double> mass_t;
    double total_mass = 0.0; // ||f||^p over the unit disk
    double tail_mass = 0.0;  // ||f||^p beyond |z| <= 1 - 2^{-n_max}
    double s = 0.0;
    double t = 0.0;
    SpaceParams params;
};

LocalNormProfile local_norm_profile(const AnalyticFunction& f, const SpaceParams& params,
                                    double s, double t, int n_max);

/// Indices with ||f||_{D^t} <= K ||f||_{D^s} (ties within 1e-10 count as good).
GoodDiskSet good_disks(const LocalNormProfile& profile, double K);
GoodDiskSet good_disks(const AnalyticFunction& f, const SpaceParams& params, double s,
                       double t, double K, int n_max);

struct GoodMassReport {
    double c = 0.0;
    double K = 0.0;
    int measured_N = 0;
    double good_mass_fraction = 0.0;
    double tail_fraction = 0.0;
    double frame_sum_s = 0.0; // sum of D^s masses relative to the total mass
    bool mass_ok = false;
    bool frame_lower_ok = false;
    bool frame_upper_ok = false;
};

/// Sets K via K^p = N/(1-c) with the measured overlap N at radius t, then
/// checks the good-mass fraction and the two-sided frame inequality
/// (truncation tail folded into the tolerances).
GoodMassReport verify_good_mass(const LocalNormProfile& profile, double c, int measured_N);
GoodMassReport verify_good_mass(const AnalyticFunction& f, const SpaceParams& params,
                                double s, double t, double c, int n_max,
                                int overlap_grid_resolution = 512);

} // namespace bergsamp
