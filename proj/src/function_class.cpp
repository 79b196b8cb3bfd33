#include "asn2t/function_class.hpp"

#include <cmath>

#include "asn2t/errors.hpp"
#include "asn2t/rng.hpp"

namespace asn2t {

std::string feature_kind_name(FeatureKind kind) {
    switch (kind) {
        case FeatureKind::CenteredBinary: return "centered-binary";
        case FeatureKind::TanhScalar: return "tanh-scalar";
        case FeatureKind::OneHotCategorical: return "one-hot-categorical";
        case FeatureKind::RandomFourier: return "random-fourier";
    }
    throw ContractError("feature_kind_name: unknown kind");
}

FeatureKind feature_kind_from_name(const std::string& name) {
    if (name == "centered-binary") return FeatureKind::CenteredBinary;
    if (name == "tanh-scalar") return FeatureKind::TanhScalar;
    if (name == "one-hot-categorical") return FeatureKind::OneHotCategorical;
    if (name == "random-fourier") return FeatureKind::RandomFourier;
    throw ConfigError("unknown feature map kind: " + name);
}

FeatureMap FeatureMap::centered_binary() {
    FeatureMap m;
    m.kind_ = FeatureKind::CenteredBinary;
    m.dim_ = 1;
    return m;
}

FeatureMap FeatureMap::tanh_scalar(double scale) {
    if (!(scale > 0.0)) throw ConfigError("tanh-scalar feature map: scale must be > 0");
    FeatureMap m;
    m.kind_ = FeatureKind::TanhScalar;
    m.dim_ = 1;
    m.scale_ = scale;
    return m;
}

FeatureMap FeatureMap::one_hot(int categories) {
    if (categories < 2) throw ConfigError("one-hot feature map: need at least 2 categories");
    FeatureMap m;
    m.kind_ = FeatureKind::OneHotCategorical;
    m.dim_ = categories;
    m.categories_ = categories;
    return m;
}

FeatureMap FeatureMap::random_fourier(int frequency_pairs, double bandwidth,
                                      std::uint64_t seed) {
    if (frequency_pairs < 1) throw ConfigError("random-fourier: need at least 1 frequency pair");
    if (!(bandwidth > 0.0)) throw ConfigError("random-fourier: bandwidth must be > 0");
    FeatureMap m;
    m.kind_ = FeatureKind::RandomFourier;
    m.dim_ = 2 * frequency_pairs;
    m.scale_ = bandwidth;
    m.frequencies_.resize(frequency_pairs);
    Rng rng(seed);
    for (auto& w : m.frequencies_) w = rng.normal(0.0, 1.0 / bandwidth);
    return m;
}

void FeatureMap::eval(double x, std::span<double> out) const {
    if (static_cast<int>(out.size()) != dim_)
        throw ContractError("FeatureMap::eval: output buffer dimension mismatch");
    switch (kind_) {
        case FeatureKind::CenteredBinary: {
            if (x != 0.0 && x != 1.0)
                throw ContractError("centered-binary feature map: point must be 0 or 1");
            out[0] = x - 0.5;
            return;
        }
        case FeatureKind::TanhScalar: {
            out[0] = std::tanh(x / scale_);
            return;
        }
        case FeatureKind::OneHotCategorical: {
            const int atom = static_cast<int>(x);
            if (static_cast<double>(atom) != x || atom < 0 || atom >= categories_)
                throw ContractError("one-hot feature map: point is not a valid category index");
            for (int i = 0; i < dim_; ++i) out[i] = 0.0;
            out[atom] = 1.0;
            return;
        }
        case FeatureKind::RandomFourier: {
            // ||phi(x)||^2 = (1/m) Σ (cos^2 + sin^2) = 1 exactly.
            const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(frequencies_.size()));
            for (std::size_t j = 0; j < frequencies_.size(); ++j) {
                const double a = frequencies_[j] * x;
                out[2 * j] = inv_sqrt_m * std::cos(a);
                out[2 * j + 1] = inv_sqrt_m * std::sin(a);
            }
            return;
        }
    }
    throw ContractError("FeatureMap::eval: unknown kind");
}

std::vector<double> FeatureMap::eval(double x) const {
    std::vector<double> out(dim_, 0.0);
    eval(x, out);
    return out;
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

} // namespace

Witness Witness::zero(const FeatureMap& map) {
    Witness g;
    g.map = &map;
    g.weights.assign(map.dim(), 0.0);
    return g;
}

Witness Witness::from_weights(const FeatureMap& map, std::vector<double> w) {
    if (static_cast<int>(w.size()) != map.dim())
        throw ContractError("Witness: weight dimension mismatch");
    if (norm2(w) > 0.5 + 1e-12)
        throw ContractError("Witness: ||w|| exceeds 1/2");
    Witness g;
    g.map = &map;
    g.weights = std::move(w);
    return g;
}

double Witness::evaluate(double x) const {
    std::vector<double> phi(map->dim(), 0.0);
    map->eval(x, phi);
    return dot(weights, phi);
}

double Witness::increment(double x1, double x2) const {
    return evaluate(x1) - evaluate(x2);
}

WitnessPredictor::WitnessPredictor(const FeatureMap& map)
    : map_(&map),
      weights_(map.dim(), 0.0),
      displacement_(map.dim(), 0.0),
      phi1_(map.dim(), 0.0),
      phi2_(map.dim(), 0.0) {}

Witness WitnessPredictor::witness() const {
    Witness g;
    g.map = map_;
    g.weights = weights_;
    return g;
}

double WitnessPredictor::increment(double x1, double x2) const {
    std::vector<double> phi1(map_->dim()), phi2(map_->dim());
    map_->eval(x1, phi1);
    map_->eval(x2, phi2);
    return dot(weights_, phi1) - dot(weights_, phi2);
}

void WitnessPredictor::update(double x1, double x2, double v_earned) {
    map_->eval(x1, phi1_);
    map_->eval(x2, phi2_);
    ++visits_;
    earned_ += v_earned;
    const double eta = 0.5 / std::sqrt(static_cast<double>(visits_));
    double norm_sq = 0.0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        const double grad = phi1_[i] - phi2_[i];
        displacement_[i] += grad;
        weights_[i] += eta * grad;
        norm_sq += weights_[i] * weights_[i];
    }
    // Euclidean projection onto the radius-1/2 ball.
    if (norm_sq > 0.25) {
        const double shrink = 0.5 / std::sqrt(norm_sq);
        for (auto& w : weights_) w *= shrink;
    }
}

double WitnessPredictor::best_in_hindsight_value() const {
    return 0.5 * norm2(displacement_);
}

Witness WitnessPredictor::best_in_hindsight_witness() const {
    const double n = norm2(displacement_);
    Witness g;
    g.map = map_;
    if (n == 0.0) {
        g.weights.assign(map_->dim(), 0.0);
        return g;
    }
    g.weights.resize(map_->dim());
    for (int i = 0; i < map_->dim(); ++i) g.weights[i] = displacement_[i] / (2.0 * n);
    return g;
}

double WitnessPredictor::regret() const {
    return best_in_hindsight_value() - earned_;
}

} // namespace asn2t
