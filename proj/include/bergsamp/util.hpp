#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace bergsamp {

/// Thrown when an adaptive numerical routine stalls above its target accuracy.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Worker count: min(SAMPLER_THREADS, hardware concurrency), at least 1.
std::size_t thread_budget();

/// Runs body(i) for i in [0, n). Iterations must be independent and write to
/// disjoint slots so the schedule cannot influence the result.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// SplitMix64 step; derives independent per-stream seeds from a master seed.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream);

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
double gamma_q(double a, double x);

/// Roots of c0 + c1 z + ... via the companion-matrix eigenvalues. Exact zero
/// leading coefficients are stripped; constants yield no roots, and non-finite
/// eigenvalues are dropped.
std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& coeffs);

/// Drives value(0), value(1), ... (each level doubling the resolution) until
/// the sequence stabilizes to rel_tol: either two consecutive values agree, or
/// the differences contract geometrically (ratio q <= 0.7) and the projected
/// tail diff * q / (1 - q) is below tolerance. Throws ConvergenceError(what)
/// after max_level refinements without either signal.
double refine_doubling(const std::function<double(int)>& value, int max_level, double rel_tol,
                       const char* what);

} // namespace bergsamp
