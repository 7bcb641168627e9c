#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace paretor {

// Opaque identifier for matrix rows/columns and complex cells.
using index_t = std::uint32_t;

// Canonical field element, always reduced into [0, p).
using coeff_t = std::uint32_t;

// A chain over a fixed cell basis: (cell id, nonzero coefficient) pairs.
using Chain = std::vector<std::pair<index_t, coeff_t>>;

}  // namespace paretor
