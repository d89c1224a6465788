#include "mbslab/mbs_analytics.hpp"

#include <cmath>
#include <string>

#include "mbslab/error.hpp"
#include "mbslab/prepayment.hpp"

namespace mbslab {
namespace {

void check_bump(double yield, double h) {
    require(std::isfinite(h) && h > 0.0, "shock", "rate bump must be positive");
    require(std::isfinite(yield) && yield - h > -1.0, "yield", "yield minus bump must exceed -100%");
}

DurationReport finite_difference(double yield, double h, double down, double mid, double up) {
    require(mid > 0.0, "cashflows", "present value must be positive");
    DurationReport r;
    r.price = mid;
    r.yield = yield;
    r.duration = -(up - down) / (2.0 * h) * (1.0 + yield) / mid;
    r.convexity = (up - 2.0 * mid + down) / (h * h * mid);
    return r;
}

}  // namespace

double present_value(std::span<const DatedCashFlow> flows, double yield) {
    require(yield > -1.0, "yield", "yield must exceed -100%");
    const double log_growth = std::log1p(yield);
    double pv = 0.0;
    for (const auto& cf : flows) pv += cf.amount * std::exp(-cf.time_years * log_growth);
    return pv;
}

DurationReport duration(std::span<const DatedCashFlow> flows, double yield, double h) {
    require(!flows.empty(), "cashflows", "at least one cash flow is required");
    bool any_positive = false;
    for (const auto& cf : flows) {
        require(std::isfinite(cf.amount) && std::isfinite(cf.time_years) && cf.time_years >= 0.0,
                "cashflows", "cash flows need finite amounts at non-negative times");
        any_positive = any_positive || cf.amount > 0.0;
    }
    require(any_positive, "cashflows", "at least one positive cash flow is required");
    check_bump(yield, h);
    return finite_difference(yield, h, present_value(flows, yield - h), present_value(flows, yield),
                             present_value(flows, yield + h));
}

void PrepayFunction::validate() const {
    require(std::isfinite(base_smm) && base_smm >= 0.0, "base_smm", "base_smm must be non-negative");
    require(std::isfinite(max_smm) && max_smm >= base_smm && max_smm <= 1.0, "max_smm",
            "max_smm must lie in [base_smm, 1]");
    require(std::isfinite(sensitivity) && sensitivity >= 0.0, "sensitivity",
            "sensitivity must be non-negative");
}

double PrepayFunction::smm(double incentive) const {
    if (shape == Shape::step) return incentive > 0.0 ? max_smm : base_smm;
    return base_smm + (max_smm - base_smm) / (1.0 + std::exp(-sensitivity * incentive));
}

std::vector<DatedCashFlow> pool_cash_flows(const LoanTerms& terms, const PrepayFunction& prepay,
                                           double market_rate) {
    prepay.validate();
    require(std::isfinite(market_rate), "market_rate", "market_rate must be finite");
    const double smm = prepay.smm(terms.annual_rate - market_rate);
    const PoolCashFlow pool = pool_cashflows(terms, SmmSchedule::constant(smm, terms.months()));

    std::vector<DatedCashFlow> flows;
    flows.reserve(pool.rows.size());
    for (const auto& row : pool.rows)
        flows.push_back({row.month_index / 12.0, row.cash_flow()});
    return flows;
}

DurationReport static_duration(const LoanTerms& terms, const PrepayFunction& prepay,
                               double market_rate, double h) {
    check_bump(market_rate, h);
    return duration(pool_cash_flows(terms, prepay, market_rate), market_rate, h);
}

DurationReport effective_duration(const LoanTerms& terms, const PrepayFunction& prepay,
                                  double market_rate, double h) {
    check_bump(market_rate, h);
    auto price_at = [&](double rate) {
        return present_value(pool_cash_flows(terms, prepay, rate), rate);
    };
    return finite_difference(market_rate, h, price_at(market_rate - h), price_at(market_rate),
                             price_at(market_rate + h));
}

std::vector<ShockRow> duration_by_shock(const LoanTerms& terms, const PrepayFunction& prepay,
                                        double market_rate, std::span<const double> shocks,
                                        double h) {
    std::vector<ShockRow> rows;
    rows.reserve(shocks.size());
    for (double shock : shocks)
        rows.push_back({shock, effective_duration(terms, prepay, market_rate + shock, h)});
    return rows;
}

void SwapSpreadCoefficients::validate() const {
    require(std::isfinite(treasury_sensitivity) && treasury_sensitivity > 0.0,
            "treasury_sensitivity", "treasury_sensitivity must be positive");
    require(std::isfinite(hedging_sensitivity) && hedging_sensitivity >= 0.0,
            "hedging_sensitivity", "hedging_sensitivity must be non-negative");
}

SwapSpreadState swap_spread_response(const SwapSpreadState& state, double short_rate_change,
                                     DurationRegime regime,
                                     const SwapSpreadCoefficients& coefficients) {
    coefficients.validate();
    require(std::isfinite(short_rate_change), "short_rate_change", "short_rate_change must be finite");
    SwapSpreadState next = state;
    next.treasury_yield += coefficients.treasury_sensitivity * short_rate_change;
    if (regime == DurationRegime::negative_convexity)
        next.swap_rate -= coefficients.hedging_sensitivity * short_rate_change;
    return next;
}

std::string_view to_string(PrepayFunction::Shape v) noexcept {
    return v == PrepayFunction::Shape::logistic ? "logistic" : "step";
}

std::string_view to_string(DurationRegime v) noexcept {
    return v == DurationRegime::negative_convexity ? "negative_convexity" : "conventional";
}

PrepayFunction::Shape parse_prepay_shape(std::string_view s, std::string_view field) {
    if (s == "logistic") return PrepayFunction::Shape::logistic;
    if (s == "step") return PrepayFunction::Shape::step;
    fail(std::string(field), "expected logistic or step, got '" + std::string(s) + "'");
}

DurationRegime parse_duration_regime(std::string_view s, std::string_view field) {
    if (s == "negative_convexity") return DurationRegime::negative_convexity;
    if (s == "conventional") return DurationRegime::conventional;
    fail(std::string(field),
         "expected negative_convexity or conventional, got '" + std::string(s) + "'");
}

}  // namespace mbslab
