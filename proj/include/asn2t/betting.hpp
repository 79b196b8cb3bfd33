#pragma once
/*
 * Online Newton Step bettor and the log-domain wealth process.
 *
 * Per step with payoff v in [-1, 1]:
 *
 *     z      = v / (1 + v * lambda)
 *     a     += z^2                       (a starts at 1)
 *     lambda = clip(lambda +/- (2 / (2 - log 3)) * z / a, [-1/2, 1/2])
 *
 * The curvature a is updated before the lambda step uses it. The listing we
 * follow writes the lambda update with a minus sign, under which a
 * persistently positive payoff stream drives lambda negative and wealth
 * down; the bettor therefore defaults to the ascent direction (plus sign),
 * which is the one consistent with the accompanying wealth growth bound.
 * The literal minus-sign variant stays available behind OnsSign for audit.
 *
 * Wealth is tracked as log W = Σ log(1 + lambda_t v_t). Since
 * |lambda| <= 1/2 and |v| <= 1, every factor is >= 1/2, so log W stays
 * finite on all paths and W can be reported even when it would overflow
 * a double (alternative runs can exceed 1e300).
 */

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace asn2t {

enum class OnsSign { Ascent, PaperLiteral };

std::string ons_sign_name(OnsSign sign);
OnsSign ons_sign_from_name(const std::string& name);

class OnsBettor {
public:
    explicit OnsBettor(OnsSign sign = OnsSign::Ascent) : sign_(sign) {}

    // Current bet lambda_t; F_{t-1}-measurable, so read it before step().
    double bet() const { return lambda_; }
    double curvature() const { return curvature_; }
    std::int64_t steps() const { return steps_; }
    OnsSign sign() const { return sign_; }

    void step(double v);

private:
    OnsSign sign_;
    double lambda_ = 0.0;
    double curvature_ = 1.0; // a_0 = 1
    std::int64_t steps_ = 0;
};

class WealthProcess {
public:
    explicit WealthProcess(bool keep_history = false) : keep_history_(keep_history) {}

    double log_wealth() const { return log_wealth_; }
    std::int64_t steps() const { return steps_; }
    const std::vector<double>& v_history() const { return v_history_; }
    const std::vector<double>& lambda_history() const { return lambda_history_; }

    // log W += log(1 + lambda * v). Requires |lambda| <= 1/2, |v| <= 1.
    void update(double lambda, double v);

private:
    bool keep_history_;
    double log_wealth_ = 0.0;
    std::int64_t steps_ = 0;
    std::vector<double> v_history_;
    std::vector<double> lambda_history_;
};

// Wealth growth lower bounds for an ONS-betted payoff stream:
//
//   first  = (1 / Σv^2) * exp( (Σv)^2 / (4 (Σv^2 + Σv)) )
//   weaker = exp( (t/8) * (mean v)^2 - log t )
//
// Diagnostic only: realized wealth of an ascent-sign ONS run should dominate
// `first`. The first bound is undefined when Σv^2 = 0 or the denominator
// Σv^2 + Σv is not positive (strong negative drift); `defined` is false and
// the diagnostic is skipped in that case.
struct WealthBounds {
    bool defined = false;
    double first = 0.0;
    double weaker = 0.0;
};

WealthBounds wealth_lower_bound(std::span<const double> v_history);

} // namespace asn2t
