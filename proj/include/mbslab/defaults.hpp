#pragma once

#include <array>
#include <cstdint>

// Every default used by the CLI and the HTTP service.
//
//   name                    value         used by
//   ----------------------  ------------  -----------------------------------
//   lambda_cost_multiplier  1.0           compare-payments
//   delta                   1/12          simulate-rates, price-zcb (MC), /api/rates/simulate
//   rate_bump               1e-4          duration, /api/duration
//   seed                    42            simulate-rates, price-zcb (MC), /api/rates/simulate
//   duration_shocks         -100..100 bp  duration grid
//   max_path_steps          600000        /api/rates/simulate (1,000 paths x 600 steps)
//   port                    8080          mbslab_server
//   cors_origin             *             mbslab_server

namespace mbslab::defaults {

inline constexpr double lambda_cost_multiplier = 1.0;
inline constexpr double delta = 1.0 / 12.0;
inline constexpr double rate_bump = 1e-4;
inline constexpr std::uint64_t seed = 42;
inline constexpr std::array<double, 5> duration_shocks = {-0.01, -0.005, 0.0, 0.005, 0.01};
inline constexpr std::uint64_t max_path_steps = 1000ULL * 600ULL;
inline constexpr int port = 8080;
inline constexpr const char* cors_origin = "*";

inline constexpr const char* out_dir_env = "MBSLAB_OUT_DIR";
inline constexpr const char* port_env = "MBSLAB_PORT";
inline constexpr const char* cors_env = "MBSLAB_CORS_ORIGIN";

}  // namespace mbslab::defaults
