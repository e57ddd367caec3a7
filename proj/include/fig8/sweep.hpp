#pragma once

#include "fig8/log_complex.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fig8 {

// One row of a convergence table.  `estimate` stays zero when a table has no
// asymptotic column; `columns` holds the derived real quantities by name.
struct SweepRow {
    std::vector<std::pair<std::string, double>> params;
    LogComplex exact;
    LogComplex estimate;
    std::vector<std::pair<std::string, Real>> columns;

    const Real& column(const std::string& name) const;
};

}  // namespace fig8
