#include "asn2t/betting.hpp"

#include <algorithm>
#include <cmath>

#include "asn2t/errors.hpp"

namespace asn2t {

namespace {
// 2 / (2 - log 3) ~= 2.2188
const double kOnsStepScale = 2.0 / (2.0 - std::log(3.0));
} // namespace

std::string ons_sign_name(OnsSign sign) {
    return sign == OnsSign::Ascent ? "ascent" : "paper-literal";
}

OnsSign ons_sign_from_name(const std::string& name) {
    if (name == "ascent") return OnsSign::Ascent;
    if (name == "paper-literal") return OnsSign::PaperLiteral;
    throw ConfigError("ons_sign: must be \"ascent\" or \"paper-literal\"");
}

void OnsBettor::step(double v) {
    if (!(v >= -1.0 && v <= 1.0))
        throw ContractError("OnsBettor::step: payoff outside [-1, 1]");
    const double z = v / (1.0 + v * lambda_);
    curvature_ += z * z;
    const double delta = kOnsStepScale * z / curvature_;
    const double raw = sign_ == OnsSign::Ascent ? lambda_ + delta : lambda_ - delta;
    lambda_ = std::clamp(raw, -0.5, 0.5);
    ++steps_;
}

void WealthProcess::update(double lambda, double v) {
    if (!(lambda >= -0.5 && lambda <= 0.5))
        throw ContractError("WealthProcess::update: bet outside [-1/2, 1/2]");
    if (!(v >= -1.0 && v <= 1.0))
        throw ContractError("WealthProcess::update: payoff outside [-1, 1]");
    log_wealth_ += std::log1p(lambda * v);
    ++steps_;
    if (keep_history_) {
        v_history_.push_back(v);
        lambda_history_.push_back(lambda);
    }
}

WealthBounds wealth_lower_bound(std::span<const double> v_history) {
    WealthBounds bounds;
    if (v_history.empty()) return bounds;
    double sum = 0.0, sum_sq = 0.0;
    for (double v : v_history) {
        sum += v;
        sum_sq += v * v;
    }
    if (sum_sq <= 0.0) return bounds;
    const double t = static_cast<double>(v_history.size());
    bounds.weaker = std::exp((t / 8.0) * (sum / t) * (sum / t) - std::log(t));
    const double denom = 4.0 * (sum_sq + sum);
    if (denom <= 0.0) return bounds; // undefined under strong negative drift
    bounds.defined = true;
    bounds.first = (1.0 / sum_sq) * std::exp(sum * sum / denom);
    return bounds;
}

} // namespace asn2t
