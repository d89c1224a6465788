#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "mbslab/defaults.hpp"

namespace httplib {
class Server;
}

namespace mbslab::api {

struct ServiceConfig {
    std::uint64_t max_path_steps = defaults::max_path_steps;  // paths x steps cap for /api/rates/simulate
    std::string cors_origin = defaults::cors_origin;
};

struct Response {
    int status = 200;
    std::string body;  // JSON
};

// Routes one request. Pure: the response depends only on the arguments.
// 4xx bodies are {"code", "message", "field"} with field null when the error
// is not tied to one input.
Response handle_request(std::string_view method, std::string_view path, std::string_view body,
                        const ServiceConfig& config = {});

// Registers every endpoint, CORS headers and OPTIONS preflight on `server`.
void install_routes(httplib::Server& server, const ServiceConfig& config);

}  // namespace mbslab::api
