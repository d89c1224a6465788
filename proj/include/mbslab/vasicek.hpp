#pragma once

#include <cstdint>
#include <vector>

namespace mbslab {

// dr = kappa (r_bar - r) dt + sigma dW. Negative rates are allowed.
struct VasicekParams {
    double kappa = 0.0;  // mean-reversion speed, per year
    double r_bar = 0.0;  // long-run mean
    double sigma = 0.0;  // volatility, per sqrt(year)

    void validate() const;
};

inline constexpr double kMonthlyStep = 1.0 / 12.0;

struct RatePath {
    std::uint64_t path_id = 0;
    std::uint64_t seed = 0;  // substream seed this path was drawn from
    double delta = kMonthlyStep;
    std::vector<double> rates;  // r_0 .. r_T
};

// Bond paying 1 at maturity; price = exp(alpha + short_rate * beta).
struct ZcbQuote {
    double maturity_years = 0.0;
    double short_rate = 0.0;
    double price = 1.0;
    double alpha = 0.0;
    double beta = 0.0;
};

struct McEstimate {
    double price = 0.0;
    double standard_error = 0.0;
    std::uint64_t n_paths = 0;
};

// One Euler step: kappa r_bar delta + (1 - kappa delta) r_t + sigma sqrt(delta) eps.
// Rejects kappa * delta > 1.
double step(const VasicekParams& params, double r_t, double delta, double epsilon);

// Path k draws its shocks from substream_seed(seed, k), so the output depends
// only on (params, r0, delta, n_steps, n_paths, seed), never on `workers`.
// workers == 0 picks the hardware concurrency.
std::vector<RatePath> simulate_paths(const VasicekParams& params, double r0, double delta,
                                     int n_steps, int n_paths, std::uint64_t seed,
                                     unsigned workers = 0);

// Closed-form affine price. beta = (e^{-kT} - 1)/k and
// alpha = r_bar(-beta - T) + sigma^2/(2k^2) [(1 - e^{-2kT})/(2k) + 2 beta + T].
// For kT below kSmallKappaT both are evaluated from their Taylor series.
ZcbQuote zcb_price(const VasicekParams& params, double short_rate, double maturity_years);

inline constexpr double kSmallKappaT = 1e-2;

// Monte Carlo estimate of E[exp(-int_0^T r dt)] on Euler paths with step
// delta, integrating each path with the trapezoidal rule. maturity_years must
// be a whole number of steps.
McEstimate mc_zcb_price(const VasicekParams& params, double r0, double maturity_years,
                        int n_paths, std::uint64_t seed, double delta = kMonthlyStep,
                        unsigned workers = 0);

// Continuously compounded yield -ln(P)/T.
double yield_from_price(double price, double maturity_years);

}  // namespace mbslab
