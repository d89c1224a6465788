#include <doctest.h>

#include <string>

#include "mbslab/codec.hpp"
#include "mbslab/csv.hpp"
#include "mbslab/error.hpp"
#include "mbslab/scenario.hpp"

using namespace mbslab;
using nlohmann::json;

TEST_CASE("scenario document parses key = value lines") {
    const auto doc = ScenarioDocument::parse(
        "# comment\n"
        "\n"
        "old_terms.notional = 100000\n"
        "  old_terms.annual_rate=0.07  \r\n"
        "cost_handling = paid_upfront\n"
        "shocks = [-0.01, 0, 0.01]\n"
        "rates_expected_to_fall = true");
    REQUIRE(doc.entries().size() == 5);
    CHECK(doc.get("old_terms.annual_rate") == "0.07");
    CHECK_FALSE(doc.get("missing"));

    const json j = doc.to_json();
    CHECK(j["old_terms"]["notional"] == 100000);
    CHECK(j["old_terms"]["annual_rate"].get<double>() == 0.07);
    CHECK(j["cost_handling"] == "paid_upfront");
    CHECK(j["shocks"].size() == 3);
    CHECK(j["rates_expected_to_fall"] == true);
}

TEST_CASE("scenario document round-trips through serialize") {
    const auto doc = ScenarioDocument::parse("a = 1\nb.c = hello world\nb.d = [1, 2]\n");
    const auto again = ScenarioDocument::parse(doc.serialize());
    CHECK(again == doc);
    CHECK(again.serialize() == doc.serialize());
    CHECK(again.to_json() == doc.to_json());
}

TEST_CASE("scenario set replaces in place and appends") {
    auto doc = ScenarioDocument::parse("a = 1\nb = 2\n");
    doc.set("a", " 5 ");
    doc.set("c", "3");
    CHECK(doc.serialize() == "a = 5\nb = 2\nc = 3\n");
    CHECK_THROWS_AS(doc.set("bad key", "1"), RequestError);
}

TEST_CASE("scenario document errors") {
    CHECK_THROWS_AS(ScenarioDocument::parse("no equals sign"), RequestError);
    CHECK_THROWS_AS(ScenarioDocument::parse("a = 1\na = 2"), RequestError);
    CHECK_THROWS_AS(ScenarioDocument::parse(".a = 1"), RequestError);
    CHECK_THROWS_AS(ScenarioDocument::parse("a..b = 1"), RequestError);
    CHECK_THROWS_AS(ScenarioDocument::parse("a = 1\na.b = 2").to_json(), RequestError);
    CHECK_THROWS_AS(ScenarioDocument::parse("a.b = 2\na = 1").to_json(), RequestError);
    CHECK_THROWS_AS(ScenarioDocument::load("/nonexistent/file.scenario"), RequestError);
    try {
        ScenarioDocument::parse("a = 1\n\nb\n");
        FAIL("expected a parse error");
    } catch (const RequestError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("fixed-point formatting") {
    CHECK(csv::fixed(1.005, 2) == "1.00");
    CHECK(csv::fixed(2.5, 0) == "2");
    CHECK(csv::fixed(-0.0, 2) == "0.00");
    CHECK(csv::fixed(-0.001, 2) == "0.00");
    CHECK(csv::fixed(-0.006, 2) == "-0.01");
    CHECK(csv::fixed(-12.5, 3) == "-12.500");
    CHECK(csv::fixed(1e6, 2) == "1000000.00");
}

TEST_CASE("loan terms decoding") {
    const auto t = codec::loan_terms_from_json(json::parse(R"({"notional":1000,"annual_rate":0.05,"term_years":2})"));
    CHECK(t == LoanTerms{1000, 0.05, 2});
    CHECK(codec::loan_terms_from_json(json::parse(R"({"notional":1,"annual_rate":0,"term_years":3.0})")).term_years ==
          3);

    auto field_of = [](const char* text) {
        try {
            codec::loan_terms_from_json(json::parse(text), "old_terms");
        } catch (const RequestError& e) {
            return e.field();
        }
        return std::string("<none>");
    };
    CHECK(field_of(R"({"annual_rate":0.05,"term_years":2})") == "old_terms.notional");
    CHECK(field_of(R"({"notional":"1000","annual_rate":0.05,"term_years":2})") == "old_terms.notional");
    CHECK(field_of(R"({"notional":1000,"annual_rate":0.05,"term_years":2.5})") == "old_terms.term_years");
    CHECK(field_of(R"({"notional":1000,"annual_rate":null,"term_years":2})") == "old_terms.annual_rate");
    CHECK(field_of("[1, 2]") == "old_terms");
}

TEST_CASE("refinance decoding applies defaults and enum spellings") {
    const json j = json::parse(R"({
        "old_terms": {"notional": 100000, "annual_rate": 0.07, "term_years": 30},
        "months_elapsed": 120, "new_rate": 0.06, "closing_costs": 1000, "new_term_years": 20})");
    const auto s = codec::refinance_from_json(j);
    CHECK(s.cost_handling == CostHandling::rolled_into_loan);
    CHECK(s.npv_mode == NpvMode::undiscounted_paper);
    CHECK(s.savings_basis == SavingsBasis::interest_difference);
    CHECK(s.prepayment_penalty == 0.0);
    CHECK_FALSE(s.rates_expected_to_fall);

    json k = j;
    k["cost_handling"] = "paid_upfront";
    k["npv_mode"] = "discounted_at_new_rate";
    k["savings_basis"] = "payment_difference";
    k["rates_expected_to_fall"] = true;
    const auto t = codec::refinance_from_json(k);
    CHECK(t.cost_handling == CostHandling::paid_upfront);
    CHECK(t.npv_mode == NpvMode::discounted_at_new_rate);
    CHECK(t.savings_basis == SavingsBasis::payment_difference);
    CHECK(t.rates_expected_to_fall);

    k["cost_handling"] = "rolled";
    CHECK_THROWS_AS(codec::refinance_from_json(k), RequestError);
    k["cost_handling"] = "paid_upfront";
    k["rates_expected_to_fall"] = "yes";
    CHECK_THROWS_AS(codec::refinance_from_json(k), RequestError);

    CHECK(codec::to_json(t)["cost_handling"] == "paid_upfront");
    CHECK(codec::refinance_from_json(codec::to_json(t)).closing_costs == t.closing_costs);
}

TEST_CASE("rate, bond and duration request decoding") {
    const auto sim = codec::simulate_from_json(
        json::parse(R"({"params":{"kappa":1,"r_bar":0.05,"sigma":0.01},"r0":0.03,"steps":12,"paths":4})"));
    CHECK(sim.delta == doctest::Approx(1.0 / 12));
    CHECK(sim.seed == 42);
    CHECK_THROWS_AS(codec::simulate_from_json(json::parse(
                        R"({"params":{"kappa":1,"r_bar":0.05,"sigma":0.01},"r0":0.03,"steps":12,"paths":4,"seed":-1})")),
                    RequestError);

    const auto grid = codec::zcb_grid_from_json(
        json::parse(R"({"params":{"kappa":1,"r_bar":0.05,"sigma":0.01},"r":0.05,"maturity_years":5})"));
    CHECK(grid.kappas == std::vector<double>{1.0});
    CHECK(grid.maturities == std::vector<double>{5.0});
    CHECK(grid.mc_paths == 0);

    const auto dur = codec::duration_from_json(
        json::parse(R"({"terms":{"notional":1000,"annual_rate":0.05,"term_years":5},"market_rate":0.05,
                        "prepay":{"shape":"step","max_smm":0.1}})"));
    CHECK(dur.prepay.shape == PrepayFunction::Shape::step);
    CHECK(dur.prepay.max_smm == 0.1);
    CHECK(dur.prepay.base_smm == PrepayFunction{}.base_smm);
    CHECK(dur.shock == 0.0);
    CHECK(dur.rate_bump == 1e-4);
    CHECK(dur.shocks.size() == 5);

    const auto swap = codec::swap_spread_from_json(
        json::parse(R"({"swap_rate":0.03,"treasury_yield":0.025,"short_rate_changes":0.01,"duration_regime":"conventional"})"));
    CHECK(swap.short_rate_changes == std::vector<double>{0.01});
    CHECK(swap.regime == DurationRegime::conventional);
    CHECK_THROWS_AS(codec::swap_spread_from_json(json::parse(
                        R"({"swap_rate":0.03,"treasury_yield":0.025,"short_rate_changes":[]})")),
                    RequestError);
}

TEST_CASE("result serialization uses snake_case fields") {
    RefinanceScenario s;
    s.old_terms = {100000, 0.05, 30};
    s.months_elapsed = 12;
    s.new_rate = 0.05;
    s.closing_costs = 500;
    s.new_term_years = 29;
    const json never = codec::to_json(npv_series(s));
    CHECK(never["breakeven_month"].is_null());
    CHECK(never["decision"] == "do_not_refinance");
    CHECK(never["npv_series"][0] == -500.0);

    const json q = codec::to_json(zcb_price({1.0, 0.05, 0.0}, 0.05, 10.0));
    CHECK(q["price"].get<double>() == doctest::Approx(0.6065306597126334).epsilon(1e-14));
    CHECK(q["yield"].get<double>() == doctest::Approx(0.05).epsilon(1e-14));

    const json sched = codec::to_json(build_schedule({1200, 0.0, 1}));
    CHECK(sched["rows"].size() == 12);
    CHECK(sched["rows"][0]["interest"] == 0.0);
    CHECK(sched["monthly_payment"] == 100.0);
}
