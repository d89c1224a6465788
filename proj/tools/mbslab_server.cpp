#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <httplib.h>

#include "mbslab/api.hpp"

int main(int argc, char** argv) {
    CLI::App app{"JSON-over-HTTP mortgage and short-rate analytics service."};
    mbslab::api::ServiceConfig config;
    std::string host = "0.0.0.0";
    int port = mbslab::defaults::port;
    if (const char* env = std::getenv(mbslab::defaults::port_env)) port = std::atoi(env);
    if (const char* env = std::getenv(mbslab::defaults::cors_env)) config.cors_origin = env;
    app.add_option("--host", host, "bind address");
    app.add_option("--port", port, "listen port (env MBSLAB_PORT)")->check(CLI::Range(1, 65535));
    app.add_option("--cors-origin", config.cors_origin, "Access-Control-Allow-Origin (env MBSLAB_CORS_ORIGIN)");
    app.add_option("--max-path-steps", config.max_path_steps, "paths x steps cap for /api/rates/simulate");
    CLI11_PARSE(app, argc, argv);

    httplib::Server server;
    mbslab::api::install_routes(server, config);
    std::cout << "listening on " << host << ":" << port << std::endl;
    if (!server.listen(host, port)) {
        std::cerr << "cannot bind " << host << ":" << port << "\n";
        return 1;
    }
    return 0;
}
