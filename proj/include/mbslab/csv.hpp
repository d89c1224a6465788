#pragma once

#include <string>

namespace mbslab::csv {

// Fixed-point text with `digits` decimals. Values that round to zero print
// without a sign, so "-0.00" never appears.
std::string fixed(double value, int digits);

inline constexpr int kCurrency = 2;
inline constexpr int kFraction = 6;
inline constexpr int kRate = 8;
inline constexpr int kPrice = 10;
// Second differences at h = 1e-4 carry roundoff near 1e-6, so fewer digits.
inline constexpr int kConvexity = 4;

}  // namespace mbslab::csv
