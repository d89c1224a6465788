#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mbslab/amortization.hpp"

namespace mbslab {

enum class CostHandling { rolled_into_loan, paid_upfront };
enum class NpvMode { undiscounted_paper, discounted_at_new_rate };

// What counts as the month-i saving. interest_difference is old interest minus
// new interest (the literal NPV sum); payment_difference is old scheduled
// payment minus new scheduled payment.
enum class SavingsBasis { interest_difference, payment_difference };

enum class Caveat { short_remaining_term, penalties_exceed_savings, rates_expected_to_fall };
enum class Decision { refinance, do_not_refinance };

struct RefinanceScenario {
    LoanTerms old_terms;
    int months_elapsed = 0;
    double new_rate = 0.0;
    double closing_costs = 0.0;
    int new_term_years = 0;
    CostHandling cost_handling = CostHandling::rolled_into_loan;
    NpvMode npv_mode = NpvMode::undiscounted_paper;
    SavingsBasis savings_basis = SavingsBasis::interest_difference;
    // Advisory inputs: they raise caveat flags but never enter the NPV.
    double prepayment_penalty = 0.0;
    bool rates_expected_to_fall = false;

    void validate() const;
    int remaining_months() const noexcept { return old_terms.months() - months_elapsed; }
};

struct BreakevenResult {
    double old_payment = 0.0;
    double new_payment = 0.0;
    double new_balance = 0.0;
    int remaining_months = 0;
    std::vector<double> monthly_savings_series;  // [i-1] is the saving in month i
    std::vector<double> npv_series;              // [m] is the cumulative NPV after month m; [0] = -C
    std::optional<int> breakeven_month;
    Decision decision = Decision::do_not_refinance;
    std::vector<Caveat> caveat_flags;  // sorted, unique

    double terminal_npv() const noexcept { return npv_series.empty() ? 0.0 : npv_series.back(); }
    bool has(Caveat c) const noexcept;
};

// Payment on the refinanced balance; the annuity division form, so it agrees
// with monthly_payment on the same terms.
double new_monthly_payment(double balance, double new_rate, int new_term_years);

// -C followed by the running (optionally discounted) sum of savings.
// Discounting divides the month-i saving by (1 + new_rate/12)^i.
std::vector<double> npv_from_savings(double closing_costs, std::span<const double> savings,
                                     NpvMode mode, double new_rate);

// First month m with npv[m] >= 0.
std::optional<int> first_breakeven_month(std::span<const double> npv);

BreakevenResult npv_series(const RefinanceScenario& scenario);

// Closed form ceil(C / S) for a constant monthly saving. C = 0 gives 0;
// S <= 0 with C > 0 never breaks even (nullopt).
std::optional<int> breakeven_months(double closing_costs, double monthly_savings);

struct PaymentPathPoint {
    int month = 0;  // payments already made when refinancing
    double old_payment = 0.0;
    double new_payment = 0.0;
    double gap = 0.0;  // old - new
};

struct PaymentPathComparison {
    LoanTerms old_terms;
    double new_rate = 0.0;
    double lambda_cost_multiplier = 1.0;
    std::vector<PaymentPathPoint> points;

    // First month at which the gap has fallen to half its month-0 value;
    // nullopt when the month-0 gap is not positive.
    std::optional<int> gap_half_life() const;
};

// Old level payment against the payment from refinancing the outstanding
// balance at month t over the remaining term at new_rate * lambda, for every
// t in [0, 12N). lambda > 1 stands in for closing costs.
PaymentPathComparison payment_path_comparison(const LoanTerms& old_terms, double new_rate,
                                              double lambda_cost_multiplier);

std::string_view to_string(CostHandling v) noexcept;
std::string_view to_string(NpvMode v) noexcept;
std::string_view to_string(SavingsBasis v) noexcept;
std::string_view to_string(Caveat v) noexcept;
std::string_view to_string(Decision v) noexcept;

// Throw DomainError naming `field` on an unknown spelling.
CostHandling parse_cost_handling(std::string_view s, std::string_view field = "cost_handling");
NpvMode parse_npv_mode(std::string_view s, std::string_view field = "npv_mode");
SavingsBasis parse_savings_basis(std::string_view s, std::string_view field = "savings_basis");

}  // namespace mbslab
