#pragma once

#include <vector>

#include "mbslab/amortization.hpp"

namespace mbslab {

// Single-monthly-mortality rates S_1..S_n, each in [0, 1].
struct SmmSchedule {
    std::vector<double> rates;

    static SmmSchedule constant(double smm, int months);
    void validate() const;
};

struct PoolCashFlowRow {
    int month_index = 0;
    double survival = 1.0;               // Q_n
    double total_payment = 0.0;          // M_n * Q_{n-1}
    double scheduled_principal = 0.0;    // P_n * Q_{n-1}
    double interest = 0.0;               // I_n * Q_{n-1}
    double unscheduled_principal = 0.0;  // S_n * (B^_{n-1} - P^_n)
    double balance_after = 0.0;          // B^_n

    // Everything the pool passes through in month n.
    double cash_flow() const noexcept { return total_payment + unscheduled_principal; }
};

struct PoolCashFlow {
    LoanTerms base_terms;
    SmmSchedule smm;
    std::vector<PoolCashFlowRow> rows;
};

// Q_0 .. Q_n with Q_0 = 1 and Q_k = prod_{i<=k} (1 - S_i); length rates.size() + 1.
std::vector<double> survival_factors(const SmmSchedule& smm);

// Prepayment-adjusted pool cash flows. The scheduled pieces are the
// no-prepayment schedule scaled by the previous month's survival factor; the
// balance follows B^_n = B^_{n-1} - P^_n - P*_n, evaluated in the equivalent
// product form Q_n B_n. With S == 0 the rows match build_schedule bit for bit.
PoolCashFlow pool_cashflows(const LoanTerms& terms, const SmmSchedule& smm);

// sum_{i = from_month}^{12N} (I^_i - I_i). Non-positive, zero when S == 0.
double interest_savings(const AmortizationSchedule& base, const PoolCashFlow& pool,
                        int from_month);

}  // namespace mbslab
