#pragma once
/*
 * The test-function class G, realized as norm-bounded linear functions over
 * bounded feature maps:
 *
 *     G = { x -> <w, phi(x)> : ||w||_2 <= 1/2 },   ||phi(x)||_2 <= 1,
 *
 * so every g maps into [-1/2, 1/2] and -g is in G whenever g is. The linear
 * structure gives closed forms for the suprema the test needs: the
 * best-in-hindsight payoff over a visited slot set is ||s||/2 with
 * s = Σ (phi(x1) - phi(x2)), which makes the per-source predictor regret
 * exactly computable.
 *
 * Per-source witnesses are trained by projected Online Gradient Ascent with
 * step size eta_n = 1/(2*sqrt(n)) on the n-th visit of that source.
 */

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace asn2t {

enum class FeatureKind {
    CenteredBinary,    // x in {0,1} -> (x - 1/2), d = 1
    TanhScalar,        // x in R -> tanh(x / scale), d = 1
    OneHotCategorical, // x in {0..m-1} -> e_x, d = m
    RandomFourier,     // x in R -> (1/sqrt(m)) (cos(w_j x), sin(w_j x))_j, d = 2m
};

std::string feature_kind_name(FeatureKind kind);
FeatureKind feature_kind_from_name(const std::string& name);

// How a run configures its feature maps. kind_auto selects per source kind:
// bernoulli -> centered-binary, gaussian -> tanh-scalar,
// categorical -> one-hot.
struct FeatureMapSpec {
    bool kind_auto = true;
    FeatureKind kind = FeatureKind::CenteredBinary;
    double tanh_scale = 1.0;
    int rf_frequencies = 4;      // number of frequency pairs m (d = 2m)
    double rf_bandwidth = 1.0;   // frequencies ~ N(0, 1/bandwidth^2)
    std::uint64_t rf_seed = 777; // class G is fixed before any data arrive
};

class FeatureMap {
public:
    static FeatureMap centered_binary();
    static FeatureMap tanh_scalar(double scale);
    static FeatureMap one_hot(int categories);
    // Frequencies are drawn once from the given seed and then frozen.
    static FeatureMap random_fourier(int frequency_pairs, double bandwidth,
                                     std::uint64_t seed);

    FeatureKind kind() const { return kind_; }
    int dim() const { return dim_; }
    double scale() const { return scale_; }
    int categories() const { return categories_; }
    const std::vector<double>& frequencies() const { return frequencies_; }

    // Writes phi(x) into out (size dim()). ||phi(x)||_2 <= 1 by construction.
    void eval(double x, std::span<double> out) const;
    std::vector<double> eval(double x) const;

private:
    FeatureMap() = default;
    FeatureKind kind_ = FeatureKind::CenteredBinary;
    int dim_ = 1;
    double scale_ = 1.0;
    int categories_ = 0;
    std::vector<double> frequencies_;
};

// A member of G: g(x) = <w, phi(x)> with ||w|| <= 1/2.
struct Witness {
    const FeatureMap* map = nullptr;
    std::vector<double> weights;

    static Witness zero(const FeatureMap& map);
    // Validates ||w|| <= 1/2 (+1e-12) and the dimension.
    static Witness from_weights(const FeatureMap& map, std::vector<double> w);

    double evaluate(double x) const;
    // v = g(x1) - g(x2) in [-1, 1].
    double increment(double x1, double x2) const;
};

// Per-source OGA predictor state. Tracks everything needed to evaluate the
// individual regret exactly: the visit count n, the displacement sum
// s = Σ (phi(x1)-phi(x2)) over visited slots, and the earned payoff sum e.
class WitnessPredictor {
public:
    explicit WitnessPredictor(const FeatureMap& map);

    const FeatureMap& map() const { return *map_; }
    std::int64_t visits() const { return visits_; }
    double earned() const { return earned_; }
    const std::vector<double>& weights() const { return weights_; }
    const std::vector<double>& displacement_sum() const { return displacement_; }

    Witness witness() const;

    // v = increment of the *current* witness on (x1, x2); never mutates.
    double increment(double x1, double x2) const;

    // One OGA step for a slot on which this source was selected. v_earned
    // must be the increment of the pre-update witness on this same pair.
    void update(double x1, double x2, double v_earned);

    // sup over G of the cumulative payoff on the visited slots: ||s||/2.
    double best_in_hindsight_value() const;
    Witness best_in_hindsight_witness() const;

    // Individual regret: best_in_hindsight_value() - earned(). Nonnegative
    // up to ~1e-9 of accumulated rounding.
    double regret() const;

private:
    const FeatureMap* map_;
    std::vector<double> weights_;
    std::vector<double> displacement_;
    std::vector<double> phi1_, phi2_; // scratch
    double earned_ = 0.0;
    std::int64_t visits_ = 0;
};

} // namespace asn2t
