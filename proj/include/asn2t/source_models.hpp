#pragma once
/*
 * The K paired data sources under test. Each source k holds two sampleable
 * distributions (P_{k,1}, P_{k,2}) on a common alphabet; the global null
 * states P_{k,1} = P_{k,2} for every k, the alternative that they differ
 * for at least one k.
 *
 * Built-in kinds: bernoulli-pair, gaussian-pair, categorical-pair. The
 * built-ins expose analytic moments (exact enumeration for the discrete
 * kinds, 64-point Gauss-Hermite quadrature for gaussian) so population
 * quantities can serve as test oracles.
 */

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "asn2t/function_class.hpp"
#include "asn2t/rng.hpp"

namespace asn2t {

struct BernoulliParams {
    double p = 0.5;
    bool operator==(const BernoulliParams&) const = default;
};

struct GaussianParams {
    double mean = 0.0;
    double stddev = 1.0;
    bool operator==(const GaussianParams&) const = default;
};

struct CategoricalParams {
    std::vector<double> probs; // over atoms 0..m-1
    bool operator==(const CategoricalParams&) const = default;
};

using MarginalParams = std::variant<BernoulliParams, GaussianParams, CategoricalParams>;

enum class SourceKind { BernoulliPair, GaussianPair, CategoricalPair };

std::string source_kind_name(SourceKind kind);

struct SourceModel {
    SourceKind kind = SourceKind::BernoulliPair;
    MarginalParams params_1;
    MarginalParams params_2;

    static SourceModel bernoulli_pair(double p1, double p2);
    static SourceModel gaussian_pair(double mean1, double stddev1, double mean2,
                                     double stddev2);
    static SourceModel categorical_pair(std::vector<double> probs1,
                                        std::vector<double> probs2);

    // Throws ConfigError naming the offending field. `where` prefixes the
    // message (e.g. "sources[2]").
    void validate(const std::string& where = "source") const;
    bool marginals_equal() const;

    bool operator==(const SourceModel&) const = default;
};

enum class TruthLabel { Null, Alternative };

struct Scenario {
    std::vector<SourceModel> sources;
    TruthLabel truth_label = TruthLabel::Null;

    int num_sources() const { return static_cast<int>(sources.size()); }
    void validate() const;

    bool operator==(const Scenario&) const = default;
};

// One independent draw from P_{k,1} x P_{k,2}; consecutive calls are i.i.d.
std::pair<double, double> sample_pair(const SourceModel& source, Rng& rng);

// Scenario files are JSON:
//   { "truth_label": "null" | "alternative",
//     "sources": [ { "kind": ..., "params_1": {...}, "params_2": {...} }, ... ] }
Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario_file(const std::string& path);
std::string serialize_scenario(const Scenario& scenario);

// --- analytic moments ------------------------------------------------------

struct Atom {
    double x = 0.0;
    double prob = 0.0;
};

// True for kinds whose marginals are finite atom lists.
bool enumerable(const SourceModel& source);

// Atom list of marginal `which` (1 or 2). Throws CapabilityError for
// non-enumerable kinds.
std::vector<Atom> marginal_atoms(const SourceModel& source, int which);

// E[phi(X_which)]: exact enumeration for discrete kinds, 64-point
// Gauss-Hermite for gaussian.
std::vector<double> mean_embedding(const SourceModel& source, const FeatureMap& map,
                                   int which);

// Delta-mu = E[phi(X_1)] - E[phi(X_2)].
std::vector<double> true_mean_embedding(const SourceModel& source, const FeatureMap& map);

// Monte Carlo fallback/oracle for the mean embedding, with standard errors.
struct McEmbedding {
    std::vector<double> mean;
    std::vector<double> stderr_mean;
    std::uint64_t seed = 0;
    std::int64_t samples = 0;
};
McEmbedding mc_mean_embedding(const SourceModel& source, const FeatureMap& map,
                              int which, std::int64_t samples, std::uint64_t seed);

// Builds the feature map for one source. With spec.kind_auto the map follows
// the source kind; otherwise the requested kind is checked against the
// source's alphabet. Random-fourier frequencies derive from
// (spec.rf_seed, source_index) so the class is frozen per run.
FeatureMap make_feature_map(const FeatureMapSpec& spec, const SourceModel& source,
                            int source_index);

} // namespace asn2t
