#include "asn2t/source_models.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "asn2t/errors.hpp"
#include "asn2t/numeric.hpp"

namespace asn2t {

namespace {

using nlohmann::ordered_json;

constexpr double kProbSumTol = 1e-9;

void validate_marginal(const SourceModel& source, const MarginalParams& params,
                       const std::string& where) {
    switch (source.kind) {
        case SourceKind::BernoulliPair: {
            const auto* b = std::get_if<BernoulliParams>(&params);
            if (!b) throw ConfigError(where + ": expected bernoulli parameters {p}");
            if (!(b->p >= 0.0 && b->p <= 1.0))
                throw ConfigError(where + ".p: probability must lie in [0,1]");
            return;
        }
        case SourceKind::GaussianPair: {
            const auto* g = std::get_if<GaussianParams>(&params);
            if (!g) throw ConfigError(where + ": expected gaussian parameters {mean, stddev}");
            if (!std::isfinite(g->mean)) throw ConfigError(where + ".mean: must be finite");
            if (!(g->stddev > 0.0)) throw ConfigError(where + ".stddev: must be > 0");
            return;
        }
        case SourceKind::CategoricalPair: {
            const auto* c = std::get_if<CategoricalParams>(&params);
            if (!c) throw ConfigError(where + ": expected categorical parameters {probs}");
            if (c->probs.size() < 2)
                throw ConfigError(where + ".probs: need at least 2 atoms");
            double sum = 0.0;
            for (std::size_t i = 0; i < c->probs.size(); ++i) {
                const double p = c->probs[i];
                if (!(p >= 0.0 && p <= 1.0))
                    throw ConfigError(where + ".probs[" + std::to_string(i) +
                                      "]: probability must lie in [0,1]");
                sum += p;
            }
            if (std::abs(sum - 1.0) > kProbSumTol)
                throw ConfigError(where + ".probs: must sum to 1 (got " +
                                  std::to_string(sum) + ")");
            return;
        }
    }
    throw ConfigError(where + ": unknown source kind");
}

} // namespace

std::string source_kind_name(SourceKind kind) {
    switch (kind) {
        case SourceKind::BernoulliPair: return "bernoulli-pair";
        case SourceKind::GaussianPair: return "gaussian-pair";
        case SourceKind::CategoricalPair: return "categorical-pair";
    }
    throw ContractError("source_kind_name: unknown kind");
}

SourceModel SourceModel::bernoulli_pair(double p1, double p2) {
    SourceModel s;
    s.kind = SourceKind::BernoulliPair;
    s.params_1 = BernoulliParams{p1};
    s.params_2 = BernoulliParams{p2};
    s.validate();
    return s;
}

SourceModel SourceModel::gaussian_pair(double mean1, double stddev1, double mean2,
                                       double stddev2) {
    SourceModel s;
    s.kind = SourceKind::GaussianPair;
    s.params_1 = GaussianParams{mean1, stddev1};
    s.params_2 = GaussianParams{mean2, stddev2};
    s.validate();
    return s;
}

SourceModel SourceModel::categorical_pair(std::vector<double> probs1,
                                          std::vector<double> probs2) {
    SourceModel s;
    s.kind = SourceKind::CategoricalPair;
    s.params_1 = CategoricalParams{std::move(probs1)};
    s.params_2 = CategoricalParams{std::move(probs2)};
    s.validate();
    return s;
}

void SourceModel::validate(const std::string& where) const {
    validate_marginal(*this, params_1, where + ".params_1");
    validate_marginal(*this, params_2, where + ".params_2");
    if (kind == SourceKind::CategoricalPair) {
        const auto& c1 = std::get<CategoricalParams>(params_1);
        const auto& c2 = std::get<CategoricalParams>(params_2);
        if (c1.probs.size() != c2.probs.size())
            throw ConfigError(where + ": params_1 and params_2 must share one alphabet "
                              "(atom counts differ)");
    }
}

bool SourceModel::marginals_equal() const { return params_1 == params_2; }

void Scenario::validate() const {
    if (sources.empty()) throw ConfigError("sources: scenario needs at least one source (K >= 1)");
    for (std::size_t i = 0; i < sources.size(); ++i) {
        sources[i].validate("sources[" + std::to_string(i) + "]");
    }
    if (truth_label == TruthLabel::Null) {
        for (std::size_t i = 0; i < sources.size(); ++i) {
            if (!sources[i].marginals_equal())
                throw ConfigError("truth_label inconsistent: declared null but sources[" +
                                  std::to_string(i) + "] has params_1 != params_2");
        }
    } else {
        bool any_differs = false;
        for (const auto& s : sources) any_differs = any_differs || !s.marginals_equal();
        if (!any_differs)
            throw ConfigError("truth_label inconsistent: declared alternative but every "
                              "source has params_1 == params_2");
    }
}

std::pair<double, double> sample_pair(const SourceModel& source, Rng& rng) {
    switch (source.kind) {
        case SourceKind::BernoulliPair: {
            const auto& b1 = std::get<BernoulliParams>(source.params_1);
            const auto& b2 = std::get<BernoulliParams>(source.params_2);
            const double x1 = rng.bernoulli(b1.p) ? 1.0 : 0.0;
            const double x2 = rng.bernoulli(b2.p) ? 1.0 : 0.0;
            return {x1, x2};
        }
        case SourceKind::GaussianPair: {
            const auto& g1 = std::get<GaussianParams>(source.params_1);
            const auto& g2 = std::get<GaussianParams>(source.params_2);
            const double x1 = rng.normal(g1.mean, g1.stddev);
            const double x2 = rng.normal(g2.mean, g2.stddev);
            return {x1, x2};
        }
        case SourceKind::CategoricalPair: {
            const auto& c1 = std::get<CategoricalParams>(source.params_1);
            const auto& c2 = std::get<CategoricalParams>(source.params_2);
            const double x1 = static_cast<double>(rng.categorical(c1.probs));
            const double x2 = static_cast<double>(rng.categorical(c2.probs));
            return {x1, x2};
        }
    }
    throw ContractError("sample_pair: unknown source kind");
}

// --- JSON ------------------------------------------------------------------

namespace {

ordered_json marginal_to_json(const SourceModel& source, const MarginalParams& params) {
    ordered_json j;
    switch (source.kind) {
        case SourceKind::BernoulliPair:
            j["p"] = std::get<BernoulliParams>(params).p;
            break;
        case SourceKind::GaussianPair: {
            const auto& g = std::get<GaussianParams>(params);
            j["mean"] = g.mean;
            j["stddev"] = g.stddev;
            break;
        }
        case SourceKind::CategoricalPair:
            j["probs"] = std::get<CategoricalParams>(params).probs;
            break;
    }
    return j;
}

MarginalParams marginal_from_json(SourceKind kind, const ordered_json& j,
                                  const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + ": must be an object");
    try {
        switch (kind) {
            case SourceKind::BernoulliPair:
                return BernoulliParams{j.at("p").get<double>()};
            case SourceKind::GaussianPair:
                return GaussianParams{j.at("mean").get<double>(),
                                      j.at("stddev").get<double>()};
            case SourceKind::CategoricalPair:
                return CategoricalParams{j.at("probs").get<std::vector<double>>()};
        }
    } catch (const ordered_json::exception& e) {
        throw ConfigError(where + ": " + e.what());
    }
    throw ConfigError(where + ": unknown source kind");
}

SourceKind source_kind_from_name(const std::string& name, const std::string& where) {
    if (name == "bernoulli-pair") return SourceKind::BernoulliPair;
    if (name == "gaussian-pair") return SourceKind::GaussianPair;
    if (name == "categorical-pair") return SourceKind::CategoricalPair;
    throw ConfigError(where + ".kind: unknown source kind \"" + name + "\"");
}

} // namespace

Scenario parse_scenario(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const ordered_json::exception& e) {
        throw ConfigError(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("scenario: top level must be an object");

    Scenario scenario;
    const std::string label = doc.value("truth_label", std::string());
    if (label == "null") {
        scenario.truth_label = TruthLabel::Null;
    } else if (label == "alternative") {
        scenario.truth_label = TruthLabel::Alternative;
    } else {
        throw ConfigError("truth_label: must be \"null\" or \"alternative\"");
    }

    if (!doc.contains("sources") || !doc["sources"].is_array())
        throw ConfigError("sources: missing or not an array");
    for (std::size_t i = 0; i < doc["sources"].size(); ++i) {
        const auto& js = doc["sources"][i];
        const std::string where = "sources[" + std::to_string(i) + "]";
        if (!js.is_object()) throw ConfigError(where + ": must be an object");
        if (!js.contains("kind")) throw ConfigError(where + ".kind: missing");
        SourceModel s;
        s.kind = source_kind_from_name(js["kind"].get<std::string>(), where);
        if (!js.contains("params_1")) throw ConfigError(where + ".params_1: missing");
        if (!js.contains("params_2")) throw ConfigError(where + ".params_2: missing");
        s.params_1 = marginal_from_json(s.kind, js["params_1"], where + ".params_1");
        s.params_2 = marginal_from_json(s.kind, js["params_2"], where + ".params_2");
        scenario.sources.push_back(std::move(s));
    }
    scenario.validate();
    return scenario;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string serialize_scenario(const Scenario& scenario) {
    ordered_json doc;
    doc["truth_label"] = scenario.truth_label == TruthLabel::Null ? "null" : "alternative";
    doc["sources"] = ordered_json::array();
    for (const auto& s : scenario.sources) {
        ordered_json js;
        js["kind"] = source_kind_name(s.kind);
        js["params_1"] = marginal_to_json(s, s.params_1);
        js["params_2"] = marginal_to_json(s, s.params_2);
        doc["sources"].push_back(std::move(js));
    }
    return doc.dump(2);
}

// --- analytic moments ------------------------------------------------------

bool enumerable(const SourceModel& source) {
    return source.kind != SourceKind::GaussianPair;
}

std::vector<Atom> marginal_atoms(const SourceModel& source, int which) {
    if (which != 1 && which != 2)
        throw ContractError("marginal_atoms: which must be 1 or 2");
    const MarginalParams& params = which == 1 ? source.params_1 : source.params_2;
    switch (source.kind) {
        case SourceKind::BernoulliPair: {
            const double p = std::get<BernoulliParams>(params).p;
            return {{0.0, 1.0 - p}, {1.0, p}};
        }
        case SourceKind::CategoricalPair: {
            const auto& c = std::get<CategoricalParams>(params);
            std::vector<Atom> atoms(c.probs.size());
            for (std::size_t i = 0; i < c.probs.size(); ++i)
                atoms[i] = {static_cast<double>(i), c.probs[i]};
            return atoms;
        }
        case SourceKind::GaussianPair:
            throw CapabilityError("marginal_atoms: gaussian sources are not enumerable");
    }
    throw ContractError("marginal_atoms: unknown source kind");
}

std::vector<double> mean_embedding(const SourceModel& source, const FeatureMap& map,
                                   int which) {
    std::vector<double> mean(map.dim(), 0.0);
    if (enumerable(source)) {
        std::vector<double> phi(map.dim(), 0.0);
        for (const Atom& a : marginal_atoms(source, which)) {
            if (a.prob == 0.0) continue;
            map.eval(a.x, phi);
            for (int i = 0; i < map.dim(); ++i) mean[i] += a.prob * phi[i];
        }
        return mean;
    }
    // Gaussian marginal: 64-point Gauss-Hermite per coordinate.
    const auto& g = std::get<GaussianParams>(which == 1 ? source.params_1 : source.params_2);
    static const QuadratureRule rule = gauss_hermite(64);
    constexpr double inv_sqrt_pi = 0.5641895835477562869480794515607726;
    const double root2 = std::sqrt(2.0);
    std::vector<double> phi(map.dim(), 0.0);
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        const double x = g.mean + root2 * g.stddev * rule.nodes[q];
        map.eval(x, phi);
        const double w = rule.weights[q];
        for (int i = 0; i < map.dim(); ++i) mean[i] += w * phi[i];
    }
    for (auto& m : mean) m *= inv_sqrt_pi;
    return mean;
}

std::vector<double> true_mean_embedding(const SourceModel& source, const FeatureMap& map) {
    std::vector<double> m1 = mean_embedding(source, map, 1);
    const std::vector<double> m2 = mean_embedding(source, map, 2);
    for (std::size_t i = 0; i < m1.size(); ++i) m1[i] -= m2[i];
    return m1;
}

McEmbedding mc_mean_embedding(const SourceModel& source, const FeatureMap& map,
                              int which, std::int64_t samples, std::uint64_t seed) {
    if (samples < 2) throw ContractError("mc_mean_embedding: need at least 2 samples");
    McEmbedding out;
    out.seed = seed;
    out.samples = samples;
    Rng rng(seed);
    std::vector<double> sum(map.dim(), 0.0), sum_sq(map.dim(), 0.0), phi(map.dim(), 0.0);
    for (std::int64_t n = 0; n < samples; ++n) {
        const auto [x1, x2] = sample_pair(source, rng);
        const double x = which == 1 ? x1 : x2;
        map.eval(x, phi);
        for (int i = 0; i < map.dim(); ++i) {
            sum[i] += phi[i];
            sum_sq[i] += phi[i] * phi[i];
        }
    }
    out.mean.resize(map.dim());
    out.stderr_mean.resize(map.dim());
    const double n = static_cast<double>(samples);
    for (int i = 0; i < map.dim(); ++i) {
        out.mean[i] = sum[i] / n;
        const double var = std::max(0.0, sum_sq[i] / n - out.mean[i] * out.mean[i]);
        out.stderr_mean[i] = std::sqrt(var / n);
    }
    return out;
}

FeatureMap make_feature_map(const FeatureMapSpec& spec, const SourceModel& source,
                            int source_index) {
    FeatureKind kind = spec.kind;
    if (spec.kind_auto) {
        switch (source.kind) {
            case SourceKind::BernoulliPair: kind = FeatureKind::CenteredBinary; break;
            case SourceKind::GaussianPair: kind = FeatureKind::TanhScalar; break;
            case SourceKind::CategoricalPair: kind = FeatureKind::OneHotCategorical; break;
        }
    }
    switch (kind) {
        case FeatureKind::CenteredBinary: {
            if (source.kind == SourceKind::GaussianPair)
                throw CapabilityError("centered-binary feature map needs a binary alphabet");
            if (source.kind == SourceKind::CategoricalPair &&
                std::get<CategoricalParams>(source.params_1).probs.size() > 2)
                throw CapabilityError("centered-binary feature map needs a binary alphabet");
            return FeatureMap::centered_binary();
        }
        case FeatureKind::TanhScalar:
            return FeatureMap::tanh_scalar(spec.tanh_scale);
        case FeatureKind::OneHotCategorical: {
            if (source.kind == SourceKind::GaussianPair)
                throw CapabilityError("one-hot feature map needs a finite alphabet");
            if (source.kind == SourceKind::BernoulliPair) return FeatureMap::one_hot(2);
            return FeatureMap::one_hot(
                static_cast<int>(std::get<CategoricalParams>(source.params_1).probs.size()));
        }
        case FeatureKind::RandomFourier:
            return FeatureMap::random_fourier(
                spec.rf_frequencies, spec.rf_bandwidth,
                derive_seed(spec.rf_seed, static_cast<std::uint64_t>(source_index)));
    }
    throw ConfigError("make_feature_map: unknown feature kind");
}

} // namespace asn2t
