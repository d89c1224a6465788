#include "mbslab/vasicek.hpp"

#include <array>
#include <cmath>
#include <string>

#include "mbslab/error.hpp"
#include "mbslab/random.hpp"
#include "parallel.hpp"

namespace mbslab {
namespace {

// (1 - e^{-y}) / y = sum_j (-y)^j / (j+1)!
constexpr std::array<double, 9> kDecaySeries = {
    1.0, -1.0 / 2, 1.0 / 6, -1.0 / 24, 1.0 / 120, -1.0 / 720, 1.0 / 5040, -1.0 / 40320, 1.0 / 362880};

// (y - m - m^2/2) / y^3 with m = 1 - e^{-y}; the integrated variance of
// int_0^T r dt is sigma^2 T^3 times this.
constexpr std::array<double, 9> kVarianceSeries = {
    1.0 / 3, -1.0 / 4, 7.0 / 60, -1.0 / 24, 31.0 / 2520, -1.0 / 320, 127.0 / 181440,
    -17.0 / 120960, 73.0 / 2851200};

template <std::size_t N>
double horner(const std::array<double, N>& c, double y) {
    double acc = 0.0;
    for (std::size_t j = N; j-- > 0;) acc = acc * y + c[j];
    return acc;
}

void validate_step(const VasicekParams& params, double delta) {
    require(std::isfinite(delta) && delta > 0.0, "delta", "delta must be positive");
    require(params.kappa * delta <= 1.0, "kappa",
            "kappa * delta exceeds 1; the Euler recursion would overshoot the mean");
}

// Evolves one path in place, calling visit(r_prev, r_next) for each step.
template <typename Visit>
double run_path(const VasicekParams& params, double r0, double delta, int n_steps,
                std::uint64_t path_seed, Visit&& visit) {
    NormalStream normals(path_seed);
    double r = r0;
    for (int t = 0; t < n_steps; ++t) {
        const double next = step(params, r, delta, normals.next());
        visit(r, next);
        r = next;
    }
    return r;
}

}  // namespace

void VasicekParams::validate() const {
    require(std::isfinite(kappa) && kappa >= 0.0, "kappa", "kappa must be non-negative");
    require(std::isfinite(r_bar), "r_bar", "r_bar must be finite");
    require(std::isfinite(sigma) && sigma >= 0.0, "sigma", "sigma must be non-negative");
}

double step(const VasicekParams& params, double r_t, double delta, double epsilon) {
    validate_step(params, delta);
    // Same as kappa r_bar delta + (1 - kappa delta) r_t + ..., arranged so that
    // r_t == r_bar is an exact fixed point when sigma == 0.
    return r_t + params.kappa * delta * (params.r_bar - r_t) +
           params.sigma * std::sqrt(delta) * epsilon;
}

std::vector<RatePath> simulate_paths(const VasicekParams& params, double r0, double delta,
                                     int n_steps, int n_paths, std::uint64_t seed,
                                     unsigned workers) {
    params.validate();
    validate_step(params, delta);
    require(std::isfinite(r0), "r0", "r0 must be finite");
    require(n_steps >= 1, "steps", "at least one step is required");
    require(n_paths >= 1, "paths", "at least one path is required");

    std::vector<RatePath> paths(static_cast<std::size_t>(n_paths));
    detail::parallel_chunks(paths.size(), workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            RatePath& path = paths[k];
            path.path_id = k;
            path.seed = substream_seed(seed, k);
            path.delta = delta;
            path.rates.reserve(static_cast<std::size_t>(n_steps) + 1);
            path.rates.push_back(r0);
            run_path(params, r0, delta, n_steps, path.seed,
                     [&path](double, double next) { path.rates.push_back(next); });
        }
    });
    return paths;
}

ZcbQuote zcb_price(const VasicekParams& params, double short_rate, double maturity_years) {
    params.validate();
    require(std::isfinite(short_rate), "r", "short rate must be finite");
    require(std::isfinite(maturity_years) && maturity_years >= 0.0, "maturity_years",
            "maturity must be non-negative");

    const double kappa = params.kappa;
    const double t = maturity_years;
    const double y = kappa * t;

    double beta = 0.0;
    double variance = 0.0;  // bracket / kappa^2, i.e. Var(int r dt) / sigma^2
    if (y < kSmallKappaT) {
        beta = -t * horner(kDecaySeries, y);
        variance = t * t * t * horner(kVarianceSeries, y);
    } else {
        const double m = -std::expm1(-y);
        beta = -m / kappa;
        variance = (y - m - 0.5 * m * m) / (kappa * kappa * kappa);
    }

    ZcbQuote quote;
    quote.maturity_years = t;
    quote.short_rate = short_rate;
    quote.beta = beta;
    quote.alpha = params.r_bar * (-beta - t) + 0.5 * params.sigma * params.sigma * variance;
    quote.price = std::exp(quote.alpha + short_rate * beta);
    return quote;
}

McEstimate mc_zcb_price(const VasicekParams& params, double r0, double maturity_years,
                        int n_paths, std::uint64_t seed, double delta, unsigned workers) {
    params.validate();
    validate_step(params, delta);
    require(std::isfinite(r0), "r0", "r0 must be finite");
    require(n_paths >= 100, "paths", "at least 100 paths are required");
    require(std::isfinite(maturity_years) && maturity_years > 0.0, "maturity_years",
            "maturity must be positive");
    const double steps_exact = maturity_years / delta;
    const double steps_rounded = std::round(steps_exact);
    require(std::abs(steps_exact - steps_rounded) <= 1e-9 * std::max(1.0, steps_exact),
            "maturity_years", "maturity must be a whole number of steps");
    const int n_steps = static_cast<int>(steps_rounded);

    std::vector<double> discounts(static_cast<std::size_t>(n_paths));
    detail::parallel_chunks(discounts.size(), workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            double integral = 0.0;
            run_path(params, r0, delta, n_steps, substream_seed(seed, k),
                     [&integral](double prev, double next) { integral += 0.5 * (prev + next); });
            discounts[k] = std::exp(-integral * delta);
        }
    });

    // Serial, path-ordered reduction keeps the result independent of `workers`.
    // Welford's update returns identical samples exactly, with zero variance.
    double mean = 0.0;
    double m2 = 0.0;
    double count = 0.0;
    for (double d : discounts) {
        count += 1.0;
        const double dev = d - mean;
        mean += dev / count;
        m2 += dev * (d - mean);
    }
    const double sample_var = m2 / (count - 1.0);
    return McEstimate{mean, std::sqrt(sample_var / count), static_cast<std::uint64_t>(n_paths)};
}

double yield_from_price(double price, double maturity_years) {
    require(std::isfinite(price) && price > 0.0, "price", "price must be positive");
    require(std::isfinite(maturity_years) && maturity_years > 0.0, "maturity_years",
            "maturity must be positive");
    return -std::log(price) / maturity_years;
}

}  // namespace mbslab
