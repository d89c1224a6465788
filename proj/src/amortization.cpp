#include "mbslab/amortization.hpp"

#include <cmath>
#include <string>

#include "mbslab/error.hpp"

namespace mbslab {

void LoanTerms::validate() const {
    require(std::isfinite(notional) && notional > 0.0, "notional", "notional must be positive");
    require(std::isfinite(annual_rate) && annual_rate >= 0.0, "annual_rate",
            "annual_rate must be non-negative");
    require(term_years >= 1, "term_years", "term_years must be at least 1");
}

int AmortizationSchedule::crossover_month() const noexcept {
    for (const auto& row : rows)
        if (row.principal > row.interest) return row.month_index;
    return 0;
}

double level_payment(double balance, double annual_rate, int months) {
    require(std::isfinite(balance) && balance >= 0.0, "balance", "balance must be non-negative");
    require(std::isfinite(annual_rate) && annual_rate >= 0.0, "annual_rate",
            "annual_rate must be non-negative");
    require(months >= 1, "months", "at least one payment is required");
    if (annual_rate == 0.0) return balance / months;
    const double i = annual_rate / 12.0;
    // 1 - (1+i)^-n without cancellation for small i.
    const double annuity = -std::expm1(-months * std::log1p(i));
    return balance * i / annuity;
}

double monthly_payment(const LoanTerms& terms) {
    terms.validate();
    return level_payment(terms.notional, terms.annual_rate, terms.months());
}

double effective_annual_rate(double annual_rate) {
    require(std::isfinite(annual_rate) && annual_rate >= 0.0, "annual_rate",
            "annual_rate must be non-negative");
    return std::expm1(12.0 * std::log1p(annual_rate / 12.0));
}

AmortizationSchedule build_schedule(const LoanTerms& terms) {
    const double payment = monthly_payment(terms);
    const double i = terms.monthly_rate();
    const int n = terms.months();

    AmortizationSchedule schedule{terms, {}};
    schedule.rows.reserve(static_cast<std::size_t>(n));

    double balance = terms.notional;
    for (int month = 1; month <= n; ++month) {
        ScheduleRow row;
        row.month_index = month;
        row.interest = i * balance;
        row.principal = payment - row.interest;
        row.payment = payment;
        if (month == n || row.principal > balance) {
            row.principal = balance;
            row.payment = row.interest + row.principal;
        }
        row.balance_after = balance - row.principal;
        row.interest_fraction = row.payment > 0.0 ? row.interest / row.payment : 0.0;
        row.principal_fraction = 1.0 - row.interest_fraction;
        balance = row.balance_after;
        schedule.rows.push_back(row);
    }
    return schedule;
}

double balance_at(const LoanTerms& terms, int month) {
    terms.validate();
    const int n = terms.months();
    require(month >= 0 && month <= n, "month",
            "month must lie in [0, " + std::to_string(n) + "]");
    if (month == 0) return terms.notional;
    if (month == n) return 0.0;
    if (terms.annual_rate == 0.0) return terms.notional * (n - month) / n;
    // B * ((1+i)^n - (1+i)^m) / ((1+i)^n - 1)
    const double log_growth = std::log1p(terms.monthly_rate());
    const double remaining = std::exp(month * log_growth) * std::expm1((n - month) * log_growth);
    return terms.notional * remaining / std::expm1(n * log_growth);
}

}  // namespace mbslab
