#pragma once

#include "bergsamp/bounds.hpp"
#include "bergsamp/region.hpp"
#include "bergsamp/sampling.hpp"

#include <vector>

namespace bergsamp {

/// Gaussian-weight space parameters: ||f||^p = integral |f|^p e^{-p*alpha*|z|^2/2} dA
/// over the plane, truncated at truncation_radius (plain Lebesgue dA).
struct FockParams {
    double p = 2.0;
    double alpha = 1.0;
    double truncation_radius = 0.0;
};

void validate(const FockParams& params);

/// Smallest radius of the default family max(6/sqrt(alpha), 2*sqrt(degree/alpha))
/// whose Gaussian tail mass for the working degree is below 1e-13.
double fock_default_truncation(double alpha, int degree);

/// Polynomial optionally carried by the weighted translation T_a:
/// (T_a f)(z) = e^{alpha * conj(a) z - alpha |a|^2 / 2} f(z - a).
struct FockFunction {
    std::vector<Complex> coeffs;
    Complex translation = 0.0;
    double alpha = 1.0;

    int degree() const { return coeffs.empty() ? 0 : static_cast<int>(coeffs.size()) - 1; }
};

FockFunction fock_function(std::vector<Complex> coeffs, double alpha = 1.0);

/// T_a applied to a plain polynomial (translations do not stack).
FockFunction fock_translate(const FockFunction& f, Complex a);

Complex fock_evaluate(const FockFunction& f, Complex z);

/// |f(z)| e^{-alpha |z|^2 / 2}, computed in the translation-invariant form
/// |poly(z-a)| e^{-alpha |z-a|^2 / 2} (exact identity, no large exponentials).
double fock_weighted_modulus(const FockFunction& f, Complex z);

/// Norm over the truncated plane, or over a sector-union region when given
/// (sector radii live in [0, truncation_radius]).
double fock_norm(const FockFunction& f, const FockParams& params);
double fock_norm(const FockFunction& f, const FockParams& params, const Region& E);

/// Integer lattice point n + ik.
Complex fock_lattice(int n, int k);

/// Max multiplicity of the disks D(n+ik, r) over a unit-cell test grid;
/// window 0 means "wide enough for r" and is the common choice.
int fock_overlap(double r, int window = 0);

/// True when every unit-cell test point lies in some D(n+ik, r).
bool fock_covering_ok(double r, int window = 0);

/// ||z^n|| in the p=2 Gaussian space: sqrt(pi * n! / alpha^{n+1}).
double fock_monomial_norm_p2(int n, double alpha);

/// G[i][j] = integral_E z^i conj(z)^j e^{-alpha |z|^2} dA; radial factors in
/// closed form via incomplete gamma, angular factors per arc.
Eigen::MatrixXcd fock_gram_matrix(const Region& E, int degree, double alpha);

/// Smallest restricted-to-full norm ratio over polynomials of the given
/// degree, from the Gaussian Gram pencil (full-plane Gram is diagonal).
SamplingResult fock_optimal_constant_p2(const Region& E, int degree, double alpha,
                                        double truncation_radius);

/// Lower bound e^{-2 alpha r^2} (gamma/c1)^{eta ln M + 1/p} with
/// ln M = 8 alpha r^2 ln r + (2/p) ln r and eta = c'' * 16 * ln 2; needs r > sqrt(2).
double fock_bound(double gamma, double r, const FockParams& params, const BoundConfig& cfg);

} // namespace bergsamp
