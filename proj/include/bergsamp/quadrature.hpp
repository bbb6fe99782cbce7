#pragma once

#include <vector>

namespace bergsamp::quad {

struct Rule {
    std::vector<double> x;
    std::vector<double> w;
};

/// Gauss-Legendre nodes/weights on [-1, 1] (Newton iteration on P_n).
Rule gauss_legendre(int n);

/// Gauss-Legendre mapped onto [a, b].
Rule gauss_legendre_on(int n, double a, double b);

/// Nodes/weights for integral_0^1 f(t) (1-t)^alpha dt, alpha > -1
/// (Golub-Welsch on the Jacobi recurrence).
Rule gauss_jacobi01(int n, double alpha);

/// Uniform rule x_j = 2*pi*j/n, w_j = 2*pi/n; exact for trigonometric
/// polynomials of degree < n over a full period.
Rule periodic_trapezoid(int n);

} // namespace bergsamp::quad
