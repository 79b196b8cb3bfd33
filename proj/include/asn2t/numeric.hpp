#pragma once
/*
 * Small numeric utilities shared by the analytic-moment code:
 * Gauss-Hermite rules for Gaussian expectations and a power iteration
 * for the top eigenvalue of small symmetric PSD matrices.
 */

#include <cstddef>
#include <vector>

namespace asn2t {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Nodes/weights for ∫ f(x) e^{-x^2} dx ≈ Σ w_i f(x_i).
// For X ~ N(mu, sigma^2): E[f(X)] = (1/√π) Σ w_i f(mu + √2 sigma x_i).
QuadratureRule gauss_hermite(int n);

// E[f(X)] for X ~ N(mean, stddev^2) using the given rule.
template <typename F>
double gauss_expectation(const QuadratureRule& rule, double mean, double stddev, F&& f) {
    constexpr double inv_sqrt_pi = 0.5641895835477562869480794515607726;
    const double root2 = 1.4142135623730950488016887242096981;
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        acc += rule.weights[i] * f(mean + root2 * stddev * rule.nodes[i]);
    }
    return acc * inv_sqrt_pi;
}

// Row-major dense symmetric matrix, dim x dim.
struct SymmetricMatrix {
    int dim = 0;
    std::vector<double> data;

    explicit SymmetricMatrix(int d) : dim(d), data(static_cast<std::size_t>(d) * d, 0.0) {}
    double& at(int i, int j) { return data[static_cast<std::size_t>(i) * dim + j]; }
    double at(int i, int j) const { return data[static_cast<std::size_t>(i) * dim + j]; }
};

// Largest eigenvalue of a symmetric PSD matrix by power iteration,
// converged to relative tolerance rel_tol on the Rayleigh quotient.
// Returns 0 for the zero matrix.
double largest_eigenvalue(const SymmetricMatrix& m, double rel_tol = 1e-8);

// Sample mean / unbiased standard deviation / standard error of the mean.
struct MeanSummary {
    std::size_t n = 0;
    double mean = 0.0;
    double stddev = 0.0;
    double stderr_mean = 0.0;
};
MeanSummary summarize_mean(const std::vector<double>& xs);

// Empirical quantile (linear interpolation between order statistics).
double quantile(std::vector<double> xs, double p);

} // namespace asn2t
