#pragma once

// JSON field names are the snake_case type fields of the analytics modules.
// The same decoders back the HTTP service and the CLI scenario files.

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "mbslab/amortization.hpp"
#include "mbslab/mbs_analytics.hpp"
#include "mbslab/refinance.hpp"
#include "mbslab/scenario.hpp"
#include "mbslab/vasicek.hpp"

namespace mbslab::codec {

using nlohmann::json;

struct SimulateRequest {
    VasicekParams params;
    double r0 = 0.0;
    double delta = 0.0;
    int steps = 0;
    int paths = 0;
    std::uint64_t seed = 0;
};

struct ZcbRequest {
    VasicekParams params;
    double r = 0.0;
    double maturity_years = 0.0;
};

// CLI price table: closed form for every (kappa, maturity), plus an optional
// Monte Carlo column when mc_paths > 0.
struct ZcbGridRequest {
    VasicekParams params;
    double r = 0.0;
    std::vector<double> kappas;
    std::vector<double> maturities;
    int mc_paths = 0;
    std::uint64_t seed = 0;
    double delta = 0.0;
};

struct DurationRequest {
    LoanTerms terms;
    PrepayFunction prepay;
    double market_rate = 0.0;
    double shock = 0.0;      // parallel shift of market_rate
    double rate_bump = 0.0;  // finite-difference step h
    std::vector<double> shocks;  // CLI table grid
};

struct ComparePaymentsRequest {
    LoanTerms old_terms;
    double new_rate = 0.0;
    double lambda_cost_multiplier = 1.0;
};

struct SwapSpreadRequest {
    SwapSpreadState state;
    std::vector<double> short_rate_changes;
    DurationRegime regime = DurationRegime::negative_convexity;
    SwapSpreadCoefficients coefficients;
};

// Decoders throw RequestError for structural problems (missing field, wrong
// type) and leave value checks to the modules, which throw DomainError.
LoanTerms loan_terms_from_json(const json& j, const std::string& path = "");
RefinanceScenario refinance_from_json(const json& j);
VasicekParams vasicek_params_from_json(const json& j, const std::string& path = "params");
PrepayFunction prepay_from_json(const json& j, const std::string& path = "prepay");
SimulateRequest simulate_from_json(const json& j);
ZcbRequest zcb_from_json(const json& j);
ZcbGridRequest zcb_grid_from_json(const json& j);
DurationRequest duration_from_json(const json& j);
ComparePaymentsRequest compare_payments_from_json(const json& j);
SwapSpreadRequest swap_spread_from_json(const json& j);

json to_json(const LoanTerms& terms);
json to_json(const AmortizationSchedule& schedule);
json to_json(const RefinanceScenario& scenario);
json to_json(const BreakevenResult& result);
json to_json(const VasicekParams& params);
json to_json(const std::vector<RatePath>& paths);
json to_json(const ZcbQuote& quote);
json to_json(const DurationReport& report);
json to_json(const SwapSpreadState& state);

}  // namespace mbslab::codec
