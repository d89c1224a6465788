#pragma once

#include <vector>

namespace mbslab {

// Fixed-rate loan: notional B, annual rate x (decimal), term N years.
// A month is exactly 1/12 year and interest compounds at x/12.
struct LoanTerms {
    double notional = 0.0;
    double annual_rate = 0.0;
    int term_years = 0;

    int months() const noexcept { return 12 * term_years; }
    double monthly_rate() const noexcept { return annual_rate / 12.0; }

    // Throws DomainError unless notional > 0, term_years >= 1, annual_rate >= 0.
    void validate() const;

    friend bool operator==(const LoanTerms&, const LoanTerms&) = default;
};

struct ScheduleRow {
    int month_index = 0;
    double payment = 0.0;
    double interest = 0.0;
    double principal = 0.0;
    double balance_after = 0.0;
    double interest_fraction = 0.0;
    double principal_fraction = 0.0;
};

struct AmortizationSchedule {
    LoanTerms terms;
    std::vector<ScheduleRow> rows;  // exactly terms.months() rows

    // First month whose principal exceeds its interest, 0 if none.
    int crossover_month() const noexcept;
};

// Level payment that retires `balance` in `months` payments at monthly rate
// annual_rate / 12. Zero rate degenerates to balance / months.
double level_payment(double balance, double annual_rate, int months);

// M such that sum_{i=1}^{12N} M / (1 + x/12)^i == B.
double monthly_payment(const LoanTerms& terms);

// (1 + x/12)^12 - 1
double effective_annual_rate(double annual_rate);

// Full 12N-row schedule. Arithmetic is unrounded; the last row's principal is
// set to the outstanding balance so the loan closes at exactly zero.
AmortizationSchedule build_schedule(const LoanTerms& terms);

// Outstanding balance after `month` payments, closed form. month in [0, 12N].
double balance_at(const LoanTerms& terms, int month);

}  // namespace mbslab
