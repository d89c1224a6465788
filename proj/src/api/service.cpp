#include "mbslab/api.hpp"

#include "mbslab/codec.hpp"
#include "mbslab/error.hpp"
#include "mbslab/scenario.hpp"

namespace mbslab::api {
namespace {

using nlohmann::json;

// A well-formed request whose values break a type invariant.
struct InvalidInput {
    DomainError error;
};

struct TooLarge {
    std::string message;
};

Response error(int status, std::string_view code, const std::string& message, const std::string& field) {
    const json body = {{"code", code}, {"message", message}, {"field", field.empty() ? json(nullptr) : json(field)}};
    return {status, body.dump()};
}

// Runs a type's validate() so its failures surface as 400 rather than as
// operation-level domain violations.
template <class T>
const T& validated(const T& value) {
    try {
        value.validate();
    } catch (const DomainError& e) {
        throw InvalidInput{e};
    }
    return value;
}

json amortize(const json& req) {
    return codec::to_json(build_schedule(validated(codec::loan_terms_from_json(req))));
}

json refinance(const json& req) {
    return codec::to_json(npv_series(validated(codec::refinance_from_json(req))));
}

json simulate(const json& req, const ServiceConfig& config) {
    const auto r = codec::simulate_from_json(req);
    validated(r.params);
    if (r.paths > 0 && r.steps > 0 &&
        static_cast<std::uint64_t>(r.paths) * static_cast<std::uint64_t>(r.steps) > config.max_path_steps)
        throw TooLarge{"paths x steps = " + std::to_string(static_cast<std::uint64_t>(r.paths) * r.steps) +
                       " exceeds the cap of " + std::to_string(config.max_path_steps)};
    json out = codec::to_json(simulate_paths(r.params, r.r0, r.delta, r.steps, r.paths, r.seed));
    out["params"] = codec::to_json(r.params);
    out["r0"] = r.r0;
    out["steps"] = r.steps;
    out["seed"] = r.seed;
    return out;
}

json zcb(const json& req) {
    const auto r = codec::zcb_from_json(req);
    return codec::to_json(zcb_price(validated(r.params), r.r, r.maturity_years));
}

json duration(const json& req) {
    const auto r = codec::duration_from_json(req);
    validated(r.terms);
    validated(r.prepay);
    const double market = r.market_rate + r.shock;
    json out = codec::to_json(effective_duration(r.terms, r.prepay, market, r.rate_bump));
    out["static_duration"] = static_duration(r.terms, r.prepay, market, r.rate_bump).duration;
    out["market_rate"] = market;
    return out;
}

}  // namespace

Response handle_request(std::string_view method, std::string_view path, std::string_view body,
                        const ServiceConfig& config) {
    if (path == "/healthz") {
        if (method != "GET") return error(405, "method_not_allowed", "use GET", "");
        return {200, R"({"status":"ok"})"};
    }

    json (*handler)(const json&) = nullptr;
    if (path == "/api/amortize") handler = amortize;
    else if (path == "/api/refinance") handler = refinance;
    else if (path == "/api/zcb") handler = zcb;
    else if (path == "/api/duration") handler = duration;
    else if (path != "/api/rates/simulate") return error(404, "not_found", "no such endpoint", "");
    if (method != "POST") return error(405, "method_not_allowed", "use POST", "");

    try {
        const json req = json::parse(body);
        const json out = handler != nullptr ? handler(req) : simulate(req, config);
        return {200, out.dump()};
    } catch (const json::parse_error& e) {
        return error(400, "invalid_json", e.what(), "");
    } catch (const RequestError& e) {
        return error(400, "invalid_request", e.what(), e.field());
    } catch (const InvalidInput& e) {
        return error(400, "invalid_value", e.error.what(), e.error.field());
    } catch (const TooLarge& e) {
        return error(413, "path_cap_exceeded", e.message, "paths");
    } catch (const DomainError& e) {
        return error(422, "domain_violation", e.what(), e.field());
    } catch (const std::exception& e) {
        return error(500, "internal_error", e.what(), "");
    }
}

}  // namespace mbslab::api
