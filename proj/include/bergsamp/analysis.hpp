#pragma once

#include "bergsamp/geometry.hpp"
#include "bergsamp/region.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace bergsamp {

struct SpaceParams {
    double p = 2.0;
    double alpha = 0.0;
};

void validate(const SpaceParams& params);

/// Polynomial core, optionally composed with the disk automorphism at
/// mobius_center and multiplied by (phi'_a)^jacobian_power (fixed branch).
struct AnalyticFunction {
    std::vector<Complex> coeffs; // c0 + c1 z + ... ; empty means the zero function
    std::optional<Complex> mobius_center;
    double jacobian_power = 0.0;
    Complex scalar = 1.0;

    int degree() const { return coeffs.empty() ? 0 : static_cast<int>(coeffs.size()) - 1; }
    bool plain() const { return !mobius_center.has_value(); }
};

AnalyticFunction polynomial(std::vector<Complex> coeffs);

Complex evaluate(const AnalyticFunction& f, Complex z);

/// ||z^n||^2 in A^{2,alpha}: Gamma(alpha+2) n! / Gamma(n+alpha+2); 1/(n+1) at alpha = 0.
double monomial_norm_p2(int n, double alpha);

/// Full-disk norm; plain polynomials with p = 2 use the exact diagonal formula,
/// everything else goes through quadrature.
double bergman_norm(const AnalyticFunction& f, const SpaceParams& params);

/// Norm restricted to a region.
double bergman_norm(const AnalyticFunction& f, const SpaceParams& params, const Region& E);

/// Norm restricted to a Euclidean disk contained in the unit disk.
double bergman_norm_disk(const AnalyticFunction& f, const SpaceParams& params,
                         const EuclideanDisk& disk);

/// Always-quadrature full-disk norm (the independent route next to the
/// diagonal fast path; the two are compared in tests).
double bergman_norm_quadrature(const AnalyticFunction& f, const SpaceParams& params);

/// G[i][j] = integral_E z^i conj(z)^j dA_alpha; Hermitian by construction,
/// angular factors closed-form per arc, radial factors to 1e-12 relative.
Eigen::MatrixXcd gram_matrix(const Region& E, int degree, double alpha);

struct GramPencil {
    Eigen::MatrixXcd G_E;
    Eigen::VectorXd G_full_diag;
    int degree = 0;
    SpaceParams params;
};

GramPencil gram_pencil(const Region& E, int degree, double alpha);

/// T_a f = (f o phi_a) * (phi_a')^{(2+alpha)/p}; an isometry of A^{p,alpha}.
/// f must be a plain polynomial (compositions do not stack).
AnalyticFunction change_of_variable(const AnalyticFunction& f, Complex a,
                                    const SpaceParams& params);

} // namespace bergsamp
