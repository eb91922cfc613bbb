#pragma once

#include <cmath>
#include <cstdint>

namespace stoprules::detail {

// log C(n, k) through lgamma. Extended precision keeps the relative error of
// exp(log-sum) expressions near 1e-17 even when the log terms reach a few
// hundred, which double-only evaluation cannot do.
inline long double log_choose(std::int64_t n, std::int64_t k) {
    return std::lgammal(static_cast<long double>(n) + 1.0L) -
           std::lgammal(static_cast<long double>(k) + 1.0L) -
           std::lgammal(static_cast<long double>(n - k) + 1.0L);
}

}  // namespace stoprules::detail
