#include <doctest.h>

#include <cmath>
#include <random>

#include "mbslab/amortization.hpp"
#include "mbslab/error.hpp"
#include "oracles.hpp"

using namespace mbslab;

TEST_CASE("monthly payment: zero rate is notional over months") {
    CHECK(monthly_payment({100000, 0.0, 10}) == doctest::Approx(100000.0 / 120).epsilon(1e-15));
}

TEST_CASE("monthly payment matches bisection on the annuity sum") {
    const double p30 = monthly_payment({100000, 0.0403, 30});
    const double p15 = monthly_payment({100000, 0.0329, 15});
    CHECK(p30 == doctest::Approx(oracle::bisect_payment(100000, 0.0403, 30)).epsilon(1e-11));
    CHECK(p15 == doctest::Approx(oracle::bisect_payment(100000, 0.0329, 15)).epsilon(1e-11));
    // frozen from a 40-digit evaluation
    CHECK(p30 == doctest::Approx(479.1464514252242).epsilon(1e-12));
    CHECK(p15 == doctest::Approx(704.6144750339406).epsilon(1e-12));
}

TEST_CASE("monthly payment rejects invalid terms") {
    CHECK_THROWS_AS(monthly_payment({100000, -0.01, 30}), DomainError);
    CHECK_THROWS_AS(monthly_payment({0, 0.05, 30}), DomainError);
    CHECK_THROWS_AS(monthly_payment({100000, 0.05, 0}), DomainError);
    try {
        monthly_payment({-5, 0.05, 30});
        FAIL("expected throw");
    } catch (const DomainError& e) {
        CHECK(e.field() == "notional");
    }
}

TEST_CASE("effective annual rate") {
    CHECK(effective_annual_rate(0.0) == 0.0);
    CHECK(effective_annual_rate(0.12) == doctest::Approx(std::pow(1.01, 12) - 1.0).epsilon(1e-14));
    CHECK(effective_annual_rate(0.12) == doctest::Approx(0.12682503013196977).epsilon(1e-14));
    CHECK(effective_annual_rate(0.0403) > 0.0403);
    CHECK_THROWS_AS(effective_annual_rate(-0.001), DomainError);
}

TEST_CASE("schedule shapes for 15y and 30y loans") {
    SUBCASE("30y at 4.03%: interest dominates the first payment") {
        const auto s = build_schedule({100000, 0.0403, 30});
        REQUIRE(s.rows.size() == 360);
        CHECK(s.rows[0].interest == doctest::Approx(335.8333333333).epsilon(1e-10));
        CHECK(s.rows[0].principal == doctest::Approx(143.3131180919).epsilon(1e-9));
        CHECK(s.rows[0].interest > s.rows[0].principal);
        CHECK(s.crossover_month() == 155);
    }
    SUBCASE("15y at 3.29%: principal dominates from month one") {
        const auto s = build_schedule({100000, 0.0329, 15});
        REQUIRE(s.rows.size() == 180);
        CHECK(s.rows[0].principal > s.rows[0].interest);
        CHECK(s.crossover_month() == 1);
    }
    SUBCASE("zero rate") {
        const auto s = build_schedule({100000, 0.0, 1});
        for (const auto& row : s.rows) {
            CHECK(row.interest == 0.0);
            CHECK(row.principal == row.payment);
        }
        CHECK(s.rows.back().balance_after == 0.0);
    }
}

TEST_CASE("schedule row invariants over random loans") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const LoanTerms terms = oracle::random_terms(rng);
        const auto s = build_schedule(terms);
        REQUIRE(s.rows.size() == static_cast<std::size_t>(terms.months()));
        const double payment = monthly_payment(terms);

        double prev_balance = terms.notional;
        double principal_sum = 0.0;
        double prev_interest_fraction = 1.0;
        for (const auto& row : s.rows) {
            CHECK(row.interest + row.principal == doctest::Approx(row.payment).epsilon(1e-15));
            CHECK(row.interest_fraction + row.principal_fraction == doctest::Approx(1.0).epsilon(1e-15));
            CHECK(row.interest == terms.monthly_rate() * prev_balance);
            CHECK(row.balance_after == prev_balance - row.principal);
            CHECK(row.balance_after < prev_balance);
            if (row.month_index < terms.months()) {
                CHECK(row.interest_fraction ==
                      doctest::Approx(terms.annual_rate * prev_balance / (12.0 * payment)).epsilon(1e-12));
                CHECK(row.interest_fraction <= prev_interest_fraction);
                prev_interest_fraction = row.interest_fraction;
            }
            principal_sum += row.principal;
            prev_balance = row.balance_after;
        }
        CHECK(s.rows.back().balance_after == 0.0);
        CHECK(std::abs(principal_sum - terms.notional) <= 1e-6);
    }
}

TEST_CASE("balance_at agrees with the iterated schedule") {
    const LoanTerms loan30{100000, 0.0403, 30};
    CHECK(balance_at(loan30, 0) == loan30.notional);
    CHECK(balance_at(loan30, 360) == 0.0);
    CHECK(balance_at(loan30, 12) == doctest::Approx(98248.11893333401).epsilon(1e-12));
    CHECK(balance_at(loan30, 12) ==
          doctest::Approx(build_schedule(loan30).rows[11].balance_after).epsilon(1e-12));
    CHECK_THROWS_AS(balance_at(loan30, -1), DomainError);
    CHECK_THROWS_AS(balance_at(loan30, 361), DomainError);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const LoanTerms terms = oracle::random_terms(rng);
        const auto s = build_schedule(terms);
        for (int m = 1; m < terms.months(); ++m) {
            const double iterated = s.rows[static_cast<std::size_t>(m - 1)].balance_after;
            // Relative agreement, floored at a micro-dollar for balances near zero.
            CHECK(std::abs(balance_at(terms, m) - iterated) <= 1e-9 * std::max(iterated, 1e-3));
        }
    }
}
