#include "mbslab/prepayment.hpp"

#include <cmath>
#include <string>

#include "mbslab/error.hpp"

namespace mbslab {

SmmSchedule SmmSchedule::constant(double smm, int months) {
    require(months >= 0, "months", "months must be non-negative");
    return SmmSchedule{std::vector<double>(static_cast<std::size_t>(months), smm)};
}

void SmmSchedule::validate() const {
    for (std::size_t k = 0; k < rates.size(); ++k) {
        const double s = rates[k];
        require(std::isfinite(s) && s >= 0.0 && s <= 1.0, "smm",
                "SMM at month " + std::to_string(k + 1) + " lies outside [0, 1]");
    }
}

std::vector<double> survival_factors(const SmmSchedule& smm) {
    smm.validate();
    std::vector<double> q;
    q.reserve(smm.rates.size() + 1);
    q.push_back(1.0);
    for (double s : smm.rates) q.push_back(q.back() * (1.0 - s));
    return q;
}

PoolCashFlow pool_cashflows(const LoanTerms& terms, const SmmSchedule& smm) {
    const AmortizationSchedule base = build_schedule(terms);
    require(smm.rates.size() == base.rows.size(), "smm",
            "SMM schedule has " + std::to_string(smm.rates.size()) + " months, loan has " +
                std::to_string(base.rows.size()));
    const std::vector<double> q = survival_factors(smm);

    PoolCashFlow pool{terms, smm, {}};
    pool.rows.reserve(base.rows.size());

    for (std::size_t k = 0; k < base.rows.size(); ++k) {
        const ScheduleRow& plain = base.rows[k];
        const double q_prev = q[k];

        PoolCashFlowRow row;
        row.month_index = plain.month_index;
        row.survival = q[k + 1];
        row.total_payment = plain.payment * q_prev;
        row.scheduled_principal = plain.principal * q_prev;
        row.interest = plain.interest * q_prev;
        // B^_{n-1} - P^_n = Q_{n-1} B_n exactly, so both terms are products and
        // no cancellation builds up once the balance is small.
        row.unscheduled_principal = smm.rates[k] * (q_prev * plain.balance_after);
        row.balance_after = q[k + 1] * plain.balance_after;
        pool.rows.push_back(row);
    }
    return pool;
}

double interest_savings(const AmortizationSchedule& base, const PoolCashFlow& pool,
                        int from_month) {
    require(base.terms == pool.base_terms, "pool", "schedules must share loan terms");
    const int n = base.terms.months();
    require(from_month >= 1 && from_month <= n, "from_month",
            "from_month must lie in [1, " + std::to_string(n) + "]");
    double total = 0.0;
    for (int m = from_month; m <= n; ++m) {
        const auto k = static_cast<std::size_t>(m - 1);
        total += pool.rows[k].interest - base.rows[k].interest;
    }
    return total;
}

}  // namespace mbslab
