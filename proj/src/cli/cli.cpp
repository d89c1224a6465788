#include "mbslab/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mbslab/codec.hpp"
#include "mbslab/csv.hpp"
#include "mbslab/defaults.hpp"
#include "mbslab/error.hpp"
#include "mbslab/scenario.hpp"

namespace mbslab::cli {
namespace {

using csv::fixed;
using nlohmann::json;

class IoError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string line(std::initializer_list<std::string> cells) {
    std::string out;
    for (const auto& c : cells) {
        if (!out.empty()) out += ',';
        out += c;
    }
    return out + '\n';
}

std::string kv(const std::string& key, const std::string& value) { return key + ": " + value + "\n"; }

Report amortize(const json& j) {
    const LoanTerms terms = codec::loan_terms_from_json(j);
    const AmortizationSchedule schedule = build_schedule(terms);
    Report r;
    r.csv = "month,payment,interest,principal,interest_fraction,principal_fraction,balance\n";
    double total_interest = 0.0;
    for (const auto& row : schedule.rows) {
        total_interest += row.interest;
        r.csv += line({std::to_string(row.month_index), fixed(row.payment, csv::kCurrency),
                       fixed(row.interest, csv::kCurrency), fixed(row.principal, csv::kCurrency),
                       fixed(row.interest_fraction, csv::kFraction), fixed(row.principal_fraction, csv::kFraction),
                       fixed(row.balance_after, csv::kCurrency)});
    }
    r.summary = kv("monthly_payment", fixed(monthly_payment(terms), csv::kCurrency)) +
                kv("effective_annual_rate", fixed(effective_annual_rate(terms.annual_rate), csv::kRate)) +
                kv("crossover_month", std::to_string(schedule.crossover_month())) +
                kv("total_interest", fixed(total_interest, csv::kCurrency));
    return r;
}

Report refinance(const json& j) {
    const RefinanceScenario scenario = codec::refinance_from_json(j);
    const BreakevenResult result = npv_series(scenario);
    Report r;
    r.csv = "month,cumulative_savings,npv\n";
    double cumulative = 0.0;
    for (std::size_t m = 0; m < result.npv_series.size(); ++m) {
        if (m > 0) cumulative += result.monthly_savings_series[m - 1];
        r.csv += line({std::to_string(m), fixed(cumulative, csv::kCurrency),
                       fixed(result.npv_series[m], csv::kCurrency)});
    }
    std::string caveats;
    for (auto c : result.caveat_flags) caveats += (caveats.empty() ? "" : ",") + std::string(to_string(c));
    r.summary = kv("decision", std::string(to_string(result.decision))) +
                kv("breakeven_month", result.breakeven_month ? std::to_string(*result.breakeven_month) : "never") +
                kv("old_payment", fixed(result.old_payment, csv::kCurrency)) +
                kv("new_payment", fixed(result.new_payment, csv::kCurrency)) +
                kv("new_balance", fixed(result.new_balance, csv::kCurrency)) +
                kv("terminal_npv", fixed(result.terminal_npv(), csv::kCurrency)) +
                kv("caveats", caveats.empty() ? "none" : caveats);
    return r;
}

Report compare_payments(const json& j) {
    const auto req = codec::compare_payments_from_json(j);
    const PaymentPathComparison cmp =
        payment_path_comparison(req.old_terms, req.new_rate, req.lambda_cost_multiplier);
    Report r;
    r.csv = "month,old_payment,new_payment,gap\n";
    for (const auto& p : cmp.points)
        r.csv += line({std::to_string(p.month), fixed(p.old_payment, csv::kCurrency),
                       fixed(p.new_payment, csv::kCurrency), fixed(p.gap, csv::kCurrency)});
    const auto half_life = cmp.gap_half_life();
    r.summary = kv("effective_new_rate", fixed(req.new_rate * req.lambda_cost_multiplier, csv::kRate)) +
                kv("initial_gap", fixed(cmp.points.front().gap, csv::kCurrency)) +
                kv("gap_half_life", half_life ? std::to_string(*half_life) : "never");
    return r;
}

Report simulate_rates(const json& j) {
    const auto req = codec::simulate_from_json(j);
    const auto paths = simulate_paths(req.params, req.r0, req.delta, req.steps, req.paths, req.seed);
    Report r;
    r.csv = "path_id,step,rate\n";
    for (const auto& p : paths)
        for (std::size_t s = 0; s < p.rates.size(); ++s)
            r.csv += line({std::to_string(p.path_id), std::to_string(s), fixed(p.rates[s], csv::kPrice)});
    double terminal = 0.0;
    for (const auto& p : paths) terminal += p.rates.back();
    r.summary = kv("paths", std::to_string(paths.size())) + kv("steps", std::to_string(req.steps)) +
                kv("seed", std::to_string(req.seed)) +
                kv("mean_terminal_rate", fixed(terminal / static_cast<double>(paths.size()), csv::kRate));
    return r;
}

Report price_zcb(const json& j) {
    const auto req = codec::zcb_grid_from_json(j);
    const bool mc = req.mc_paths > 0;
    Report r;
    r.csv = mc ? "kappa,maturity_years,price,yield,mc_price,mc_standard_error\n" : "kappa,maturity_years,price,yield\n";
    for (double kappa : req.kappas) {
        VasicekParams params = req.params;
        params.kappa = kappa;
        for (double T : req.maturities) {
            const ZcbQuote q = zcb_price(params, req.r, T);
            std::string row = fixed(kappa, csv::kRate) + "," + fixed(T, csv::kFraction) + "," +
                              fixed(q.price, csv::kPrice) + "," +
                              (T > 0.0 ? fixed(yield_from_price(q.price, T), csv::kPrice) : "");
            if (mc) {
                const McEstimate est = mc_zcb_price(params, req.r, T, req.mc_paths, req.seed, req.delta);
                row += "," + fixed(est.price, csv::kPrice) + "," + fixed(est.standard_error, csv::kPrice);
            }
            r.csv += row + "\n";
        }
    }
    r.summary = kv("rows", std::to_string(req.kappas.size() * req.maturities.size())) +
                kv("monte_carlo_paths", std::to_string(req.mc_paths));
    return r;
}

Report duration_table(const json& j) {
    const auto req = codec::duration_from_json(j);
    const double market = req.market_rate + req.shock;
    const auto rows = duration_by_shock(req.terms, req.prepay, market, req.shocks, req.rate_bump);
    Report r;
    r.csv = "shock,price,duration,convexity\n";
    for (const auto& row : rows)
        r.csv += line({fixed(row.shock, csv::kRate), fixed(row.report.price, csv::kCurrency),
                       fixed(row.report.duration, csv::kFraction), fixed(row.report.convexity, csv::kConvexity)});
    const DurationReport stat = static_duration(req.terms, req.prepay, market, req.rate_bump);
    const DurationReport eff = effective_duration(req.terms, req.prepay, market, req.rate_bump);
    r.summary = kv("static_duration", fixed(stat.duration, csv::kFraction)) +
                kv("effective_duration", fixed(eff.duration, csv::kFraction)) +
                kv("effective_convexity", fixed(eff.convexity, csv::kConvexity));
    return r;
}

Report swap_spread(const json& j) {
    const auto req = codec::swap_spread_from_json(j);
    Report r;
    r.csv = "short_rate_change,swap_rate,treasury_yield,spread,model\n";
    for (double dr : req.short_rate_changes) {
        const SwapSpreadState s = swap_spread_response(req.state, dr, req.regime, req.coefficients);
        r.csv += line({fixed(dr, csv::kRate), fixed(s.swap_rate, csv::kRate), fixed(s.treasury_yield, csv::kRate),
                       fixed(s.spread(), csv::kRate), "toy"});
    }
    r.summary = kv("model", "toy") + kv("duration_regime", std::string(to_string(req.regime))) +
                kv("initial_spread", fixed(req.state.spread(), csv::kRate));
    return r;
}

const std::map<std::string, std::function<Report(const json&)>, std::less<>>& table() {
    static const std::map<std::string, std::function<Report(const json&)>, std::less<>> t = {
        {"amortize", amortize},
        {"refinance", refinance},
        {"compare-payments", compare_payments},
        {"simulate-rates", simulate_rates},
        {"price-zcb", price_zcb},
        {"duration", duration_table},
        {"swap-spread", swap_spread},
    };
    return t;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream file(path, std::ios::binary);
    if (!file || !file.write(text.data(), static_cast<std::streamsize>(text.size())) || !file.flush())
        throw IoError("cannot write '" + path.string() + "'");
}

std::string describe(const std::string& field, const std::string& message) {
    return field.empty() ? message : message + " [" + field + "]";
}

}  // namespace

const std::vector<std::string>& commands() {
    static const std::vector<std::string> names = {"amortize",  "refinance", "compare-payments", "simulate-rates",
                                                   "price-zcb", "duration",  "swap-spread"};
    return names;
}

Report run_command(std::string_view command, const json& request) {
    const auto it = table().find(command);
    if (it == table().end()) throw RequestError("command", "unknown command '" + std::string(command) + "'");
    return it->second(request);
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mortgage, refinance and short-rate analytics. Writes CSV."};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string scenario_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> overrides;
    for (const auto& name : commands()) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--scenario", scenario_path, "key = value scenario file");
        sub->add_option("--out", out_path, "CSV output path");
        sub->add_option("--seed", seed, "RNG seed (default 42)");
        sub->add_option("--set", overrides, "override a scenario key: key=value")->allow_extra_args(false);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, r;
        const int code = app.exit(e, o, r);
        out << o.str();
        err << r.str();
        return code == 0 ? kOk : kInvalidInput;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    if (!scenario_path.empty() && !std::ifstream(scenario_path)) {
        err << "error: cannot read scenario file '" << scenario_path << "'\n";
        return kIo;
    }
    Report report;
    try {
        ScenarioDocument doc = scenario_path.empty() ? ScenarioDocument{} : ScenarioDocument::load(scenario_path);
        for (const auto& item : overrides) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw RequestError("--set", "--set expects key=value, got '" + item + "'");
            doc.set(item.substr(0, eq), item.substr(eq + 1));
        }
        if (seed) doc.set("seed", std::to_string(*seed));
        report = run_command(command, doc.to_json());
    } catch (const RequestError& e) {
        err << "error: " << describe(e.field(), e.what()) << "\n";
        return kInvalidInput;
    } catch (const DomainError& e) {
        err << "error: " << describe(e.field(), e.what()) << "\n";
        return kInvalidInput;
    } catch (const std::exception& e) {
        err << "computation failed: " << e.what() << "\n";
        return kComputation;
    }

    std::filesystem::path target = out_path;
    if (target.empty())
        if (const char* dir = std::getenv(defaults::out_dir_env); dir != nullptr && *dir != '\0')
            target = std::filesystem::path(dir) / (command + ".csv");
    try {
        if (target.empty()) {
            out << report.csv;
            err << report.summary;
        } else {
            write_file(target, report.csv);
            out << report.summary;
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIo;
    }
    return kOk;
}

}  // namespace mbslab::cli
