#include <doctest.h>

#include <cmath>
#include <random>

#include "mbslab/error.hpp"
#include "mbslab/prepayment.hpp"
#include "oracles.hpp"

using namespace mbslab;

TEST_CASE("survival factors") {
    const auto zero = survival_factors(SmmSchedule::constant(0.0, 12));
    REQUIRE(zero.size() == 13);
    for (double q : zero) CHECK(q == 1.0);

    SmmSchedule first_month_wipeout = SmmSchedule::constant(0.02, 12);
    first_month_wipeout.rates[0] = 1.0;
    const auto wiped = survival_factors(first_month_wipeout);
    CHECK(wiped[0] == 1.0);
    for (std::size_t n = 1; n < wiped.size(); ++n) CHECK(wiped[n] == 0.0);

    const auto q = survival_factors(SmmSchedule::constant(0.01, 3));
    CHECK(q[3] == doctest::Approx(0.970299).epsilon(1e-15));

    CHECK_THROWS_AS(survival_factors(SmmSchedule{{0.1, 1.5}}), DomainError);
    CHECK_THROWS_AS(survival_factors(SmmSchedule{{-0.1}}), DomainError);
}

TEST_CASE("survival factors are non-increasing and bounded") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> s(0.0, 0.2);
    for (int trial = 0; trial < 50; ++trial) {
        SmmSchedule smm;
        for (int k = 0; k < 120; ++k) smm.rates.push_back(s(rng));
        const auto q = survival_factors(smm);
        CHECK(q.front() == 1.0);
        for (std::size_t n = 1; n < q.size(); ++n) {
            CHECK(q[n] <= q[n - 1]);
            CHECK(q[n] >= 0.0);
        }
    }
}

TEST_CASE("no prepayment reproduces the amortization schedule exactly") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const LoanTerms terms = oracle::random_terms(rng);
        const auto base = build_schedule(terms);
        const auto pool = pool_cashflows(terms, SmmSchedule::constant(0.0, terms.months()));
        for (std::size_t k = 0; k < base.rows.size(); ++k) {
            CHECK(pool.rows[k].total_payment == base.rows[k].payment);
            CHECK(pool.rows[k].interest == base.rows[k].interest);
            CHECK(pool.rows[k].scheduled_principal == base.rows[k].principal);
            CHECK(pool.rows[k].balance_after == base.rows[k].balance_after);
            CHECK(pool.rows[k].unscheduled_principal == 0.0);
        }
        CHECK(interest_savings(base, pool, 1) == 0.0);
    }
}

TEST_CASE("full prepayment in month one empties the pool") {
    const LoanTerms terms{100000, 0.05, 5};
    SmmSchedule smm = SmmSchedule::constant(0.0, terms.months());
    smm.rates[0] = 1.0;
    const auto pool = pool_cashflows(terms, smm);
    CHECK(pool.rows[0].balance_after == 0.0);
    for (std::size_t k = 1; k < pool.rows.size(); ++k) {
        CHECK(pool.rows[k].total_payment == 0.0);
        CHECK(pool.rows[k].interest == 0.0);
        CHECK(pool.rows[k].cash_flow() == 0.0);
    }
}

TEST_CASE("12-month pool against the independent recursion") {
    const LoanTerms terms{1000, 0.12, 1};
    const SmmSchedule smm = SmmSchedule::constant(0.05, 12);
    const auto pool = pool_cashflows(terms, smm);
    const auto ref = oracle::pool_recursion(1000, 0.12, 1, smm.rates);
    REQUIRE(pool.rows.size() == ref.size());
    for (std::size_t k = 0; k < ref.size(); ++k) {
        CAPTURE(k);
        CHECK(pool.rows[k].total_payment == doctest::Approx(ref[k].total_payment).epsilon(1e-11));
        CHECK(pool.rows[k].scheduled_principal == doctest::Approx(ref[k].scheduled_principal).epsilon(1e-11));
        CHECK(pool.rows[k].interest == doctest::Approx(ref[k].interest).epsilon(1e-11));
        CHECK(pool.rows[k].unscheduled_principal ==
              doctest::Approx(ref[k].unscheduled_principal).epsilon(1e-11));
        CHECK(std::abs(pool.rows[k].balance_after - ref[k].balance_after) <= 1e-9);
    }
    // Frozen from a 40-digit run of the same recursion.
    CHECK(pool.rows[0].total_payment == doctest::Approx(88.8487886783417).epsilon(1e-12));
    CHECK(pool.rows[0].unscheduled_principal == doctest::Approx(46.05756056608291).epsilon(1e-12));
    CHECK(pool.rows[1].balance_after == doctest::Approx(759.4663261177711).epsilon(1e-12));
    CHECK(pool.rows[5].interest == doctest::Approx(4.625600030580509).epsilon(1e-12));
    CHECK(pool.rows[11].total_payment == doctest::Approx(50.53719919889245).epsilon(1e-12));
    CHECK(std::abs(pool.rows.back().balance_after) <= 1e-6);

    const auto base = build_schedule(terms);
    CHECK(interest_savings(base, pool, 1) == doctest::Approx(-10.859671386639658).epsilon(1e-12));
    CHECK(interest_savings(base, pool, 6) == doctest::Approx(-7.232063961885347).epsilon(1e-12));
    CHECK_THROWS_AS(interest_savings(base, pool, 0), DomainError);
    CHECK_THROWS_AS(interest_savings(base, pool, 13), DomainError);
}

TEST_CASE("scaling identity and conservation over random pools") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> s(0.0, 0.08);
    for (int trial = 0; trial < 100; ++trial) {
        const LoanTerms terms = oracle::random_terms(rng);
        SmmSchedule smm;
        for (int k = 0; k < terms.months(); ++k) smm.rates.push_back(s(rng));
        const auto base = build_schedule(terms);
        const auto pool = pool_cashflows(terms, smm);
        const auto q = survival_factors(smm);

        double prev = terms.notional;
        for (std::size_t k = 0; k < base.rows.size(); ++k) {
            const auto& row = pool.rows[k];
            CHECK(row.survival == q[k + 1]);
            CHECK(row.total_payment == doctest::Approx(base.rows[k].payment * q[k]).epsilon(1e-9));
            CHECK(row.interest == doctest::Approx(base.rows[k].interest * q[k]).epsilon(1e-9));
            CHECK(row.interest <= base.rows[k].interest);
            const double expected_balance = base.rows[k].balance_after * q[k + 1];
            CHECK(std::abs(row.balance_after - expected_balance) <= 1e-9 * std::max(expected_balance, 1.0));
            CHECK(std::abs((prev - row.balance_after) - (row.scheduled_principal + row.unscheduled_principal)) <=
                  1e-9 * terms.notional);
            prev = row.balance_after;
        }
        CHECK(std::abs(pool.rows.back().balance_after) <= 1e-6);
        CHECK(interest_savings(base, pool, 1) < 0.0);
    }
}

TEST_CASE("longer maturity accrues larger interest savings") {
    const double s = 0.01;
    double previous = 0.0;
    for (int years : {5, 15, 30}) {
        const LoanTerms terms{100000, 0.05, years};
        const auto savings = interest_savings(build_schedule(terms),
                                              pool_cashflows(terms, SmmSchedule::constant(s, terms.months())), 1);
        CHECK(std::abs(savings) > previous);
        previous = std::abs(savings);
    }
}

TEST_CASE("length mismatch is rejected") {
    CHECK_THROWS_AS(pool_cashflows({1000, 0.05, 1}, SmmSchedule::constant(0.01, 11)), DomainError);
}
