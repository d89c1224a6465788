#include "mbslab/refinance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mbslab/error.hpp"

namespace mbslab {

void RefinanceScenario::validate() const {
    old_terms.validate();
    require(months_elapsed >= 0 && months_elapsed < old_terms.months(), "months_elapsed",
            "months_elapsed must lie in [0, " + std::to_string(old_terms.months()) + ")");
    require(std::isfinite(new_rate) && new_rate >= 0.0, "new_rate", "new_rate must be non-negative");
    require(std::isfinite(closing_costs) && closing_costs >= 0.0, "closing_costs",
            "closing_costs must be non-negative");
    require(new_term_years >= 1, "new_term_years", "new_term_years must be at least 1");
    require(std::isfinite(prepayment_penalty) && prepayment_penalty >= 0.0, "prepayment_penalty",
            "prepayment_penalty must be non-negative");
}

bool BreakevenResult::has(Caveat c) const noexcept {
    return std::find(caveat_flags.begin(), caveat_flags.end(), c) != caveat_flags.end();
}

double new_monthly_payment(double balance, double new_rate, int new_term_years) {
    require(std::isfinite(balance) && balance > 0.0, "balance", "balance must be positive");
    return monthly_payment(LoanTerms{balance, new_rate, new_term_years});
}

std::vector<double> npv_from_savings(double closing_costs, std::span<const double> savings,
                                     NpvMode mode, double new_rate) {
    require(std::isfinite(closing_costs) && closing_costs >= 0.0, "closing_costs",
            "closing_costs must be non-negative");
    std::vector<double> npv;
    npv.reserve(savings.size() + 1);
    npv.push_back(-closing_costs);

    const double log_growth = std::log1p(new_rate / 12.0);
    double cumulative = -closing_costs;
    for (std::size_t k = 0; k < savings.size(); ++k) {
        double s = savings[k];
        if (mode == NpvMode::discounted_at_new_rate)
            s *= std::exp(-static_cast<double>(k + 1) * log_growth);
        cumulative += s;
        npv.push_back(cumulative);
    }
    return npv;
}

std::optional<int> first_breakeven_month(std::span<const double> npv) {
    for (std::size_t m = 0; m < npv.size(); ++m)
        if (npv[m] >= 0.0) return static_cast<int>(m);
    return std::nullopt;
}

BreakevenResult npv_series(const RefinanceScenario& scenario) {
    scenario.validate();

    const AmortizationSchedule old_schedule = build_schedule(scenario.old_terms);
    const int elapsed = scenario.months_elapsed;
    const double outstanding = elapsed == 0
                                   ? scenario.old_terms.notional
                                   : old_schedule.rows[static_cast<std::size_t>(elapsed - 1)].balance_after;

    BreakevenResult result;
    result.remaining_months = scenario.remaining_months();
    result.old_payment = old_schedule.rows.front().payment;
    result.new_balance = outstanding + (scenario.cost_handling == CostHandling::rolled_into_loan
                                            ? scenario.closing_costs
                                            : 0.0);
    const LoanTerms new_terms{result.new_balance, scenario.new_rate, scenario.new_term_years};
    const AmortizationSchedule new_schedule = build_schedule(new_terms);
    result.new_payment = new_schedule.rows.front().payment;

    const bool by_interest = scenario.savings_basis == SavingsBasis::interest_difference;
    auto flow = [by_interest](const ScheduleRow& row) {
        return by_interest ? row.interest : row.payment;
    };

    const int remaining = result.remaining_months;
    const int new_months = new_terms.months();
    const int horizon = std::max(remaining, new_months);
    result.monthly_savings_series.reserve(static_cast<std::size_t>(horizon));
    for (int k = 0; k < horizon; ++k) {
        const double old_flow =
            k < remaining ? flow(old_schedule.rows[static_cast<std::size_t>(elapsed + k)]) : 0.0;
        const double new_flow = k < new_months ? flow(new_schedule.rows[static_cast<std::size_t>(k)]) : 0.0;
        result.monthly_savings_series.push_back(old_flow - new_flow);
    }

    result.npv_series = npv_from_savings(scenario.closing_costs, result.monthly_savings_series,
                                         scenario.npv_mode, scenario.new_rate);
    result.breakeven_month = first_breakeven_month(result.npv_series);

    const bool saves_at_first = result.monthly_savings_series.front() > 0.0;
    if (saves_at_first && (!result.breakeven_month || *result.breakeven_month > remaining))
        result.caveat_flags.push_back(Caveat::short_remaining_term);
    const double gross_savings = result.terminal_npv() + scenario.closing_costs;
    if (scenario.prepayment_penalty > 0.0 && scenario.prepayment_penalty >= gross_savings)
        result.caveat_flags.push_back(Caveat::penalties_exceed_savings);
    if (scenario.rates_expected_to_fall) result.caveat_flags.push_back(Caveat::rates_expected_to_fall);

    const bool fatal = result.has(Caveat::short_remaining_term);
    result.decision = result.terminal_npv() >= 0.0 && !fatal ? Decision::refinance
                                                             : Decision::do_not_refinance;
    return result;
}

std::optional<int> breakeven_months(double closing_costs, double monthly_savings) {
    require(std::isfinite(closing_costs) && closing_costs >= 0.0, "closing_costs",
            "closing_costs must be non-negative");
    require(std::isfinite(monthly_savings), "savings", "savings must be finite");
    if (closing_costs == 0.0) return 0;
    if (monthly_savings <= 0.0) return std::nullopt;
    return static_cast<int>(std::ceil(closing_costs / monthly_savings));
}

std::optional<int> PaymentPathComparison::gap_half_life() const {
    if (points.empty() || points.front().gap <= 0.0) return std::nullopt;
    const double half = points.front().gap / 2.0;
    for (const auto& p : points)
        if (p.gap <= half) return p.month;
    return std::nullopt;
}

PaymentPathComparison payment_path_comparison(const LoanTerms& old_terms, double new_rate,
                                              double lambda_cost_multiplier) {
    old_terms.validate();
    require(std::isfinite(new_rate) && new_rate >= 0.0, "new_rate", "new_rate must be non-negative");
    require(std::isfinite(lambda_cost_multiplier) && lambda_cost_multiplier >= 1.0,
            "lambda_cost_multiplier", "lambda_cost_multiplier must be at least 1");

    const double effective_rate = new_rate * lambda_cost_multiplier;
    const double old_payment = monthly_payment(old_terms);
    const int n = old_terms.months();

    PaymentPathComparison out{old_terms, new_rate, lambda_cost_multiplier, {}};
    out.points.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
        const double balance = balance_at(old_terms, t);
        const double refinanced = level_payment(balance, effective_rate, n - t);
        out.points.push_back({t, old_payment, refinanced, old_payment - refinanced});
    }
    return out;
}

std::string_view to_string(CostHandling v) noexcept {
    return v == CostHandling::rolled_into_loan ? "rolled_into_loan" : "paid_upfront";
}

std::string_view to_string(NpvMode v) noexcept {
    return v == NpvMode::undiscounted_paper ? "undiscounted_paper" : "discounted_at_new_rate";
}

std::string_view to_string(SavingsBasis v) noexcept {
    return v == SavingsBasis::interest_difference ? "interest_difference" : "payment_difference";
}

std::string_view to_string(Caveat v) noexcept {
    switch (v) {
        case Caveat::short_remaining_term: return "short_remaining_term";
        case Caveat::penalties_exceed_savings: return "penalties_exceed_savings";
        case Caveat::rates_expected_to_fall: return "rates_expected_to_fall";
    }
    return "unknown";
}

std::string_view to_string(Decision v) noexcept {
    return v == Decision::refinance ? "refinance" : "do_not_refinance";
}

CostHandling parse_cost_handling(std::string_view s, std::string_view field) {
    if (s == "rolled_into_loan") return CostHandling::rolled_into_loan;
    if (s == "paid_upfront") return CostHandling::paid_upfront;
    fail(std::string(field), "expected rolled_into_loan or paid_upfront, got '" + std::string(s) + "'");
}

NpvMode parse_npv_mode(std::string_view s, std::string_view field) {
    if (s == "undiscounted_paper") return NpvMode::undiscounted_paper;
    if (s == "discounted_at_new_rate") return NpvMode::discounted_at_new_rate;
    fail(std::string(field),
         "expected undiscounted_paper or discounted_at_new_rate, got '" + std::string(s) + "'");
}

SavingsBasis parse_savings_basis(std::string_view s, std::string_view field) {
    if (s == "interest_difference") return SavingsBasis::interest_difference;
    if (s == "payment_difference") return SavingsBasis::payment_difference;
    fail(std::string(field),
         "expected interest_difference or payment_difference, got '" + std::string(s) + "'");
}

}  // namespace mbslab
