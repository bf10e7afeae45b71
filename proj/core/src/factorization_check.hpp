#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace fluxatom::detail {

// The closed-form effect expressions are factorizations of the
// flux -> linear-shift chain, not independently coded constants. Every
// effect routine evaluates both and trips here if they drift apart.
inline void verify_factorization(const char* what, double closed_form, double chained) {
    const double scale = std::max({std::abs(closed_form), std::abs(chained), 1e-300});
    if (std::abs(closed_form - chained) > 1e-9 * scale)
        throw std::logic_error(std::string(what) +
                               ": closed form and flux chain disagree (closed=" +
                               std::to_string(closed_form) + ", chained=" +
                               std::to_string(chained) + ")");
}

} // namespace fluxatom::detail
