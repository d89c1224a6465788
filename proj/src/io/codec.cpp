#include "mbslab/codec.hpp"

#include <cmath>
#include <limits>

#include "mbslab/defaults.hpp"
#include "mbslab/error.hpp"

namespace mbslab::codec {
namespace {

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

const json& object_at(const json& j, const std::string& path) {
    if (!j.is_object()) throw RequestError(path, (path.empty() ? "request" : path) + " must be an object");
    return j;
}

const json& field(const json& j, const std::string& path, const std::string& key) {
    object_at(j, path);
    const auto it = j.find(key);
    if (it == j.end() || it->is_null()) throw RequestError(join(path, key), "missing field " + join(path, key));
    return *it;
}

bool has(const json& j, const std::string& key) {
    return j.is_object() && j.contains(key) && !j.at(key).is_null();
}

double number(const json& j, const std::string& path, const std::string& key) {
    const json& v = field(j, path, key);
    if (!v.is_number()) throw RequestError(join(path, key), join(path, key) + " must be a number");
    return v.get<double>();
}

double number_or(const json& j, const std::string& path, const std::string& key, double fallback) {
    return has(j, key) ? number(j, path, key) : fallback;
}

long long integer(const json& j, const std::string& path, const std::string& key) {
    const json& v = field(j, path, key);
    if (v.is_number_integer()) return v.get<long long>();
    if (v.is_number_float()) {
        const double d = v.get<double>();
        if (std::floor(d) == d && std::abs(d) < 9e15) return static_cast<long long>(d);
    }
    throw RequestError(join(path, key), join(path, key) + " must be an integer");
}

int int32(const json& j, const std::string& path, const std::string& key) {
    const long long v = integer(j, path, key);
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw RequestError(join(path, key), join(path, key) + " is out of range");
    return static_cast<int>(v);
}

std::uint64_t seed_or(const json& j, const std::string& key, std::uint64_t fallback) {
    if (!has(j, key)) return fallback;
    const json& v = j.at(key);
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<long long>() >= 0) return static_cast<std::uint64_t>(v.get<long long>());
    throw RequestError(key, key + " must be a non-negative integer");
}

std::string text(const json& j, const std::string& path, const std::string& key) {
    const json& v = field(j, path, key);
    if (!v.is_string()) throw RequestError(join(path, key), join(path, key) + " must be a string");
    return v.get<std::string>();
}

bool flag_or(const json& j, const std::string& path, const std::string& key, bool fallback) {
    if (!has(j, key)) return fallback;
    const json& v = j.at(key);
    if (!v.is_boolean()) throw RequestError(join(path, key), join(path, key) + " must be true or false");
    return v.get<bool>();
}

std::vector<double> numbers(const json& j, const std::string& path, const std::string& key) {
    const json& v = field(j, path, key);
    const json list = v.is_array() ? v : json::array({v});
    std::vector<double> out;
    for (const auto& item : list) {
        if (!item.is_number()) throw RequestError(join(path, key), join(path, key) + " must be a list of numbers");
        out.push_back(item.get<double>());
    }
    if (out.empty()) throw RequestError(join(path, key), join(path, key) + " must not be empty");
    return out;
}

// Unknown enum spellings are malformed requests, not domain violations.
template <class Parse>
auto enum_value(const json& j, const std::string& path, const std::string& key, Parse parse) {
    const std::string name = join(path, key);
    const std::string value = text(j, path, key);
    try {
        return parse(value, name);
    } catch (const DomainError& e) {
        throw RequestError(name, e.what());
    }
}

}  // namespace

LoanTerms loan_terms_from_json(const json& j, const std::string& path) {
    object_at(j, path);
    return LoanTerms{number(j, path, "notional"), number(j, path, "annual_rate"), int32(j, path, "term_years")};
}

RefinanceScenario refinance_from_json(const json& j) {
    RefinanceScenario s;
    s.old_terms = loan_terms_from_json(field(j, "", "old_terms"), "old_terms");
    s.months_elapsed = int32(j, "", "months_elapsed");
    s.new_rate = number(j, "", "new_rate");
    s.closing_costs = number(j, "", "closing_costs");
    s.new_term_years = int32(j, "", "new_term_years");
    if (has(j, "cost_handling")) s.cost_handling = enum_value(j, "", "cost_handling", parse_cost_handling);
    if (has(j, "npv_mode")) s.npv_mode = enum_value(j, "", "npv_mode", parse_npv_mode);
    if (has(j, "savings_basis")) s.savings_basis = enum_value(j, "", "savings_basis", parse_savings_basis);
    s.prepayment_penalty = number_or(j, "", "prepayment_penalty", 0.0);
    s.rates_expected_to_fall = flag_or(j, "", "rates_expected_to_fall", false);
    return s;
}

VasicekParams vasicek_params_from_json(const json& j, const std::string& path) {
    object_at(j, path);
    return VasicekParams{number(j, path, "kappa"), number(j, path, "r_bar"), number(j, path, "sigma")};
}

PrepayFunction prepay_from_json(const json& j, const std::string& path) {
    object_at(j, path);
    PrepayFunction f;
    f.base_smm = number_or(j, path, "base_smm", f.base_smm);
    f.max_smm = number_or(j, path, "max_smm", f.max_smm);
    f.sensitivity = number_or(j, path, "sensitivity", f.sensitivity);
    if (has(j, "shape")) f.shape = enum_value(j, path, "shape", parse_prepay_shape);
    return f;
}

SimulateRequest simulate_from_json(const json& j) {
    SimulateRequest r;
    r.params = vasicek_params_from_json(field(j, "", "params"));
    r.r0 = number(j, "", "r0");
    r.delta = number_or(j, "", "delta", defaults::delta);
    r.steps = int32(j, "", "steps");
    r.paths = int32(j, "", "paths");
    r.seed = seed_or(j, "seed", defaults::seed);
    return r;
}

ZcbRequest zcb_from_json(const json& j) {
    return ZcbRequest{vasicek_params_from_json(field(j, "", "params")), number(j, "", "r"),
                      number(j, "", "maturity_years")};
}

ZcbGridRequest zcb_grid_from_json(const json& j) {
    ZcbGridRequest r;
    r.params = vasicek_params_from_json(field(j, "", "params"));
    r.r = number(j, "", "r");
    r.kappas = has(j, "kappas") ? numbers(j, "", "kappas") : std::vector<double>{r.params.kappa};
    r.maturities = has(j, "maturities") ? numbers(j, "", "maturities")
                                        : std::vector<double>{number(j, "", "maturity_years")};
    r.mc_paths = has(j, "mc_paths") ? int32(j, "", "mc_paths") : 0;
    r.seed = seed_or(j, "seed", defaults::seed);
    r.delta = number_or(j, "", "delta", defaults::delta);
    return r;
}

DurationRequest duration_from_json(const json& j) {
    DurationRequest r;
    r.terms = loan_terms_from_json(field(j, "", "terms"), "terms");
    r.prepay = has(j, "prepay") ? prepay_from_json(j.at("prepay")) : PrepayFunction{};
    r.market_rate = number(j, "", "market_rate");
    r.shock = number_or(j, "", "shock", 0.0);
    r.rate_bump = number_or(j, "", "rate_bump", defaults::rate_bump);
    r.shocks = has(j, "shocks") ? numbers(j, "", "shocks")
                                : std::vector<double>(defaults::duration_shocks.begin(),
                                                      defaults::duration_shocks.end());
    return r;
}

ComparePaymentsRequest compare_payments_from_json(const json& j) {
    ComparePaymentsRequest r;
    r.old_terms = loan_terms_from_json(field(j, "", "old_terms"), "old_terms");
    r.new_rate = number(j, "", "new_rate");
    r.lambda_cost_multiplier = number_or(j, "", "lambda_cost_multiplier", defaults::lambda_cost_multiplier);
    return r;
}

SwapSpreadRequest swap_spread_from_json(const json& j) {
    SwapSpreadRequest r;
    r.state = SwapSpreadState{number(j, "", "swap_rate"), number(j, "", "treasury_yield")};
    r.short_rate_changes = numbers(j, "", "short_rate_changes");
    if (has(j, "duration_regime")) r.regime = enum_value(j, "", "duration_regime", parse_duration_regime);
    r.coefficients.treasury_sensitivity =
        number_or(j, "", "treasury_sensitivity", r.coefficients.treasury_sensitivity);
    r.coefficients.hedging_sensitivity = number_or(j, "", "hedging_sensitivity", r.coefficients.hedging_sensitivity);
    return r;
}

json to_json(const LoanTerms& terms) {
    return {{"notional", terms.notional}, {"annual_rate", terms.annual_rate}, {"term_years", terms.term_years}};
}

json to_json(const AmortizationSchedule& schedule) {
    json rows = json::array();
    for (const auto& r : schedule.rows)
        rows.push_back({{"month_index", r.month_index},
                        {"payment", r.payment},
                        {"interest", r.interest},
                        {"principal", r.principal},
                        {"balance_after", r.balance_after},
                        {"interest_fraction", r.interest_fraction},
                        {"principal_fraction", r.principal_fraction}});
    return {{"terms", to_json(schedule.terms)},
            {"monthly_payment", monthly_payment(schedule.terms)},
            {"effective_annual_rate", effective_annual_rate(schedule.terms.annual_rate)},
            {"crossover_month", schedule.crossover_month()},
            {"rows", std::move(rows)}};
}

json to_json(const RefinanceScenario& s) {
    return {{"old_terms", to_json(s.old_terms)},
            {"months_elapsed", s.months_elapsed},
            {"new_rate", s.new_rate},
            {"closing_costs", s.closing_costs},
            {"new_term_years", s.new_term_years},
            {"cost_handling", to_string(s.cost_handling)},
            {"npv_mode", to_string(s.npv_mode)},
            {"savings_basis", to_string(s.savings_basis)},
            {"prepayment_penalty", s.prepayment_penalty},
            {"rates_expected_to_fall", s.rates_expected_to_fall}};
}

json to_json(const BreakevenResult& r) {
    json flags = json::array();
    for (auto c : r.caveat_flags) flags.push_back(to_string(c));
    return {{"old_payment", r.old_payment},
            {"new_payment", r.new_payment},
            {"new_balance", r.new_balance},
            {"remaining_months", r.remaining_months},
            {"monthly_savings_series", r.monthly_savings_series},
            {"npv_series", r.npv_series},
            {"breakeven_month", r.breakeven_month ? json(*r.breakeven_month) : json(nullptr)},
            {"decision", to_string(r.decision)},
            {"caveat_flags", std::move(flags)}};
}

json to_json(const VasicekParams& p) {
    return {{"kappa", p.kappa}, {"r_bar", p.r_bar}, {"sigma", p.sigma}};
}

json to_json(const std::vector<RatePath>& paths) {
    json out = json::array();
    for (const auto& p : paths)
        out.push_back({{"path_id", p.path_id}, {"seed", p.seed}, {"delta", p.delta}, {"rates", p.rates}});
    return {{"paths", std::move(out)}};
}

json to_json(const ZcbQuote& q) {
    json out = {{"maturity_years", q.maturity_years},
                {"short_rate", q.short_rate},
                {"price", q.price},
                {"alpha", q.alpha},
                {"beta", q.beta}};
    out["yield"] = q.maturity_years > 0.0 ? json(yield_from_price(q.price, q.maturity_years)) : json(nullptr);
    return out;
}

json to_json(const DurationReport& r) {
    return {{"price", r.price}, {"yield", r.yield}, {"duration", r.duration}, {"convexity", r.convexity}};
}

json to_json(const SwapSpreadState& s) {
    return {{"swap_rate", s.swap_rate},
            {"treasury_yield", s.treasury_yield},
            {"spread", s.spread()},
            {"model", "toy"}};
}

}  // namespace mbslab::codec
