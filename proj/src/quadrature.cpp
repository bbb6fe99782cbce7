#include "bergsamp/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace bergsamp::quad {

namespace {

Rule compute_gauss_legendre(int n) {
    Rule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.x[i] = -x;
        rule.x[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.w[i] = w;
        rule.w[n - 1 - i] = w;
    }
    return rule;
}

// Monic Jacobi recurrence for weight (1-x)^a on [-1,1] (b = 0), then
// Golub-Welsch: nodes are eigenvalues of the symmetric tridiagonal matrix,
// weights mu0 times squared first eigenvector components.
Rule compute_gauss_jacobi01(int n, double a) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        double diag;
        if (k == 0) {
            diag = -a / (a + 2.0);
        } else {
            const double s = 2.0 * k + a;
            diag = -(a * a) / (s * (s + 2.0));
        }
        J(k, k) = diag;
        if (k >= 1) {
            double beta;
            if (k == 1) {
                beta = 4.0 * (a + 1.0) / ((a + 2.0) * (a + 2.0) * (a + 3.0));
            } else {
                const double s = 2.0 * k + a;
                beta = 4.0 * k * k * (k + a) * (k + a) / (s * s * (s + 1.0) * (s - 1.0));
            }
            const double off = std::sqrt(beta);
            J(k, k - 1) = off;
            J(k - 1, k) = off;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(J);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("gauss_jacobi01: eigensolver failed");

    const double mu0 = std::pow(2.0, a + 1.0) / (a + 1.0);
    const double scale = std::pow(2.0, -(a + 1.0));
    Rule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.x[i] = (solver.eigenvalues()(i) + 1.0) / 2.0;
        const double v0 = solver.eigenvectors()(0, i);
        rule.w[i] = mu0 * v0 * v0 * scale;
    }
    return rule;
}

std::mutex cache_mutex;

} // namespace

Rule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
    static std::map<int, Rule> cache;
    std::scoped_lock lock(cache_mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
    return it->second;
}

Rule gauss_legendre_on(int n, double a, double b) {
    Rule rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        rule.x[i] = mid + half * rule.x[i];
        rule.w[i] *= half;
    }
    return rule;
}

Rule gauss_jacobi01(int n, double alpha) {
    if (n < 1) throw std::invalid_argument("gauss_jacobi01: n >= 1 required");
    if (alpha <= -1.0) throw std::domain_error("gauss_jacobi01: alpha > -1 required");
    static std::map<std::pair<int, double>, Rule> cache;
    std::scoped_lock lock(cache_mutex);
    auto key = std::make_pair(n, alpha);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, compute_gauss_jacobi01(n, alpha)).first;
    return it->second;
}

Rule periodic_trapezoid(int n) {
    if (n < 1) throw std::invalid_argument("periodic_trapezoid: n >= 1 required");
    Rule rule;
    rule.x.resize(n);
    rule.w.assign(n, 2.0 * std::numbers::pi / n);
    for (int j = 0; j < n; ++j) rule.x[j] = 2.0 * std::numbers::pi * j / n;
    return rule;
}

} // namespace bergsamp::quad
