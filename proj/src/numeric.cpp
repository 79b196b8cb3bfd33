#include "asn2t/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "asn2t/errors.hpp"

namespace asn2t {

// Newton iteration on the Hermite recurrence (physicists' convention).
QuadratureRule gauss_hermite(int n) {
    if (n < 1) throw ContractError("gauss_hermite: n must be >= 1");
    QuadratureRule rule;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);

    const double pim4 = 0.7511255444649425; // pi^{-1/4}
    const int m = (n + 1) / 2;
    double z = 0.0;
    for (int i = 0; i < m; ++i) {
        // Initial guesses from standard asymptotics.
        if (i == 0) {
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        } else if (i == 1) {
            z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * rule.nodes[0];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * rule.nodes[1];
        } else {
            z = 2.0 * z - rule.nodes[i - 2];
        }
        double pp = 0.0;
        for (int iter = 0; iter < 200; ++iter) {
            double p1 = pim4;
            double p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1.0)) * p2 -
                     std::sqrt(static_cast<double>(j) / (j + 1.0)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) <= 1e-15 * std::max(1.0, std::abs(z))) break;
        }
        rule.nodes[i] = z;
        rule.nodes[n - 1 - i] = -z;
        rule.weights[i] = 2.0 / (pp * pp);
        rule.weights[n - 1 - i] = rule.weights[i];
    }
    // Exact zero for the middle node of odd rules.
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

double largest_eigenvalue(const SymmetricMatrix& m, double rel_tol) {
    const int d = m.dim;
    if (d <= 0) throw ContractError("largest_eigenvalue: empty matrix");
    if (d == 1) return m.at(0, 0);

    std::vector<double> v(d, 1.0 / std::sqrt(static_cast<double>(d)));
    std::vector<double> av(d, 0.0);
    double lambda = 0.0;
    for (int iter = 0; iter < 100000; ++iter) {
        double norm2 = 0.0;
        for (int i = 0; i < d; ++i) {
            double acc = 0.0;
            for (int j = 0; j < d; ++j) acc += m.at(i, j) * v[j];
            av[i] = acc;
            norm2 += acc * acc;
        }
        const double norm = std::sqrt(norm2);
        if (norm == 0.0) return 0.0;
        double next_lambda = 0.0;
        for (int i = 0; i < d; ++i) next_lambda += v[i] * av[i];
        for (int i = 0; i < d; ++i) v[i] = av[i] / norm;
        if (iter > 0 && std::abs(next_lambda - lambda) <= rel_tol * std::max(1.0, std::abs(next_lambda))) {
            return next_lambda;
        }
        lambda = next_lambda;
    }
    return lambda;
}

MeanSummary summarize_mean(const std::vector<double>& xs) {
    MeanSummary s;
    s.n = xs.size();
    if (s.n == 0) return s;
    double sum = 0.0;
    for (double x : xs) sum += x;
    s.mean = sum / static_cast<double>(s.n);
    if (s.n >= 2) {
        double ss = 0.0;
        for (double x : xs) {
            const double d = x - s.mean;
            ss += d * d;
        }
        s.stddev = std::sqrt(ss / static_cast<double>(s.n - 1));
        s.stderr_mean = s.stddev / std::sqrt(static_cast<double>(s.n));
    }
    return s;
}

double quantile(std::vector<double> xs, double p) {
    if (xs.empty()) throw ContractError("quantile: empty sample");
    std::sort(xs.begin(), xs.end());
    if (p <= 0.0) return xs.front();
    if (p >= 1.0) return xs.back();
    const double pos = p * static_cast<double>(xs.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(lo);
    if (lo + 1 >= xs.size()) return xs.back();
    return xs[lo] * (1.0 - frac) + xs[lo + 1] * frac;
}

} // namespace asn2t
