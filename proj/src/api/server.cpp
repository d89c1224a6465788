#include <httplib.h>

#include "mbslab/api.hpp"

namespace mbslab::api {

void install_routes(httplib::Server& server, const ServiceConfig& config) {
    server.set_default_headers({{"Access-Control-Allow-Origin", config.cors_origin},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                                {"Access-Control-Allow-Headers", "Content-Type"}});

    const auto forward = [config](const httplib::Request& req, httplib::Response& res) {
        const Response r = handle_request(req.method, req.path, req.body, config);
        res.status = r.status;
        res.set_content(r.body, "application/json");
    };
    server.Get(R"(/.*)", forward);
    server.Post(R"(/.*)", forward);
    server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

}  // namespace mbslab::api
