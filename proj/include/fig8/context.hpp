#pragma once

#include "fig8/errors.hpp"

#include <algorithm>
#include <string>

namespace fig8 {

struct PrecisionContext {
    long precision_bits = 256;
    double quad_tol = 1e-12;
    // Radius of the detour around t = 0 in the quantum dilogarithm contour.
    // Zero selects 0.5 * min(pi/|gamma|, 1) for each gamma.
    double contour_R = 0.0;

    void validate() const {
        if (precision_bits < 64)
            throw ConfigError("precision_bits must be at least 64, got " + std::to_string(precision_bits));
        if (!(quad_tol > 0.0 && quad_tol < 1.0))
            throw ConfigError("quad_tol must lie in (0, 1)");
        if (contour_R < 0.0) throw ConfigError("contour_R must be positive (or 0 for the default)");
    }

    PrecisionContext at_least(long bits) const {
        PrecisionContext c = *this;
        c.precision_bits = std::max(precision_bits, bits);
        return c;
    }
};

}  // namespace fig8
