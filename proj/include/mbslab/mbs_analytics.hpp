#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "mbslab/amortization.hpp"

namespace mbslab {

struct DatedCashFlow {
    double time_years = 0.0;
    double amount = 0.0;
};

struct DurationReport {
    double price = 0.0;
    double yield = 0.0;
    double duration = 0.0;   // -(dP/dy)(1 + y)/P, years
    double convexity = 0.0;  // (d2P/dy2)/P, years^2
};

inline constexpr double kDefaultRateBump = 1e-4;

// sum a (1 + y)^{-t}, annual compounding.
double present_value(std::span<const DatedCashFlow> flows, double yield);

// Duration by central differences of present_value at y +/- h.
DurationReport duration(std::span<const DatedCashFlow> flows, double yield,
                        double h = kDefaultRateBump);

// Maps the refinancing incentive (contract rate - market rate) to an SMM.
// logistic: base + (max - base) / (1 + exp(-sensitivity * incentive)).
// step: base for incentive <= 0, max above.
struct PrepayFunction {
    enum class Shape { logistic, step };

    double base_smm = 0.002;
    double max_smm = 0.04;
    double sensitivity = 400.0;  // per unit of rate incentive
    Shape shape = Shape::logistic;

    double smm(double incentive) const;
    void validate() const;
};

// Monthly pool cash flows (scheduled payment plus prepayment) with a flat SMM
// taken from `prepay` at the given market rate.
std::vector<DatedCashFlow> pool_cash_flows(const LoanTerms& terms, const PrepayFunction& prepay,
                                           double market_rate);

// Duration of the pool's cash flows with prepayment frozen at market_rate.
DurationReport static_duration(const LoanTerms& terms, const PrepayFunction& prepay,
                               double market_rate, double h = kDefaultRateBump);

// Reprices at market_rate +/- h, regenerating prepayments for each shocked
// rate, and applies the same finite-difference duration/convexity.
DurationReport effective_duration(const LoanTerms& terms, const PrepayFunction& prepay,
                                  double market_rate, double h = kDefaultRateBump);

struct ShockRow {
    double shock = 0.0;
    DurationReport report;  // effective, evaluated at market_rate + shock
};

std::vector<ShockRow> duration_by_shock(const LoanTerms& terms, const PrepayFunction& prepay,
                                        double market_rate, std::span<const double> shocks,
                                        double h = kDefaultRateBump);

// Toy, sign-level swap spread model. Not a pricing model.
struct SwapSpreadState {
    double swap_rate = 0.0;
    double treasury_yield = 0.0;

    double spread() const noexcept { return swap_rate - treasury_yield; }
};

// negative_convexity: holders of prepayable paper shed duration through the
// swap market, so both legs move. conventional: only the bond yield responds.
enum class DurationRegime { negative_convexity, conventional };

struct SwapSpreadCoefficients {
    double treasury_sensitivity = 1.0;  // d(treasury_yield)/d(short rate), > 0
    double hedging_sensitivity = 1.0;   // -d(swap_rate)/d(short rate), >= 0

    void validate() const;
};

SwapSpreadState swap_spread_response(const SwapSpreadState& state, double short_rate_change,
                                     DurationRegime regime = DurationRegime::negative_convexity,
                                     const SwapSpreadCoefficients& coefficients = {});

std::string_view to_string(PrepayFunction::Shape v) noexcept;
std::string_view to_string(DurationRegime v) noexcept;
PrepayFunction::Shape parse_prepay_shape(std::string_view s, std::string_view field = "shape");
DurationRegime parse_duration_regime(std::string_view s, std::string_view field = "duration_regime");

}  // namespace mbslab
